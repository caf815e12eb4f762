"""Exact spectral tools for partially oriented graphs.

Mixed graphs (edges either undirected or oriented) carry a Hermitian
adjacency matrix over the Gaussian integers.  This package computes its
characteristic polynomial exactly, isolates eigenvalues as algebraic
numbers, searches for partial orientations whose largest eigenvalue is
certified below the matching-polynomial bound, and decides switching
equivalence with verifiable certificates.
"""

from .errors import (
    ComputationDefect,
    DisconnectedError,
    GuardLimit,
    OrispecError,
    ParseError,
)
from .explore import (
    ConjectureReport,
    GuoMoharReport,
    canonical_form,
    conjecture_report,
    explore_corpus,
    explore_record,
    generate_corpus,
    guo_mohar_sweep,
    min_rho_all_mixed,
    min_rho_complete,
    min_rho_partial,
    worker_count,
)
from .graphs import (
    Graph,
    MixedGraph,
    SignVector,
    SpanningTree,
    bfs_spanning_tree,
    build_mixed,
    cotree_edges,
    encode_graph6,
    enumerate_spanning_trees,
    fundamental_cycle,
    parse_edge_list,
    parse_graph6,
    parse_mixed,
    format_mixed,
    sign_vectors,
    tree_from_edges,
    tree_parity_bipartition,
)
from .hermitian import (
    GaussInt,
    HermitianMatrix,
    charpoly,
    charpoly_of_mixed,
    eigenvalues_numeric,
    hermitian_adjacency,
    lambda_max,
    lambda_min,
    rank_one_witness,
    spectral_radius,
    spectral_radius_of_charpoly,
    verify_rank_one_identity,
)
from .kernel import COMPILED_MAX_N, backend_name, has_compiled
from .matching import MatchingProfile, matching_counts, matching_polynomial, matching_radius
from .orientation import (
    AuditReport,
    LevelChoice,
    OrientationCertificate,
    audit_interlacing_family,
    conditional_sum_charpoly,
    conditional_sum_fast,
    expected_charpoly,
    greedy_orientation,
    verify_bound,
)
from .polynomials import (
    AlgebraicRoot,
    IntPoly,
    Order,
    common_interlacing,
    compare_roots,
    count_real_roots,
    interlaces,
    is_real_rooted,
    isolate_largest_root,
    isolate_real_roots,
    isolate_smallest_root,
    roots_numeric,
    squarefree_decomposition,
    squarefree_part,
    sturm_chain,
)
from .switching import (
    SwitchingCertificate,
    SwitchingMap,
    apply_switching,
    classify_partial_orientations,
    converse,
    equiv_to_oriented,
    equiv_to_unoriented,
    switching_equivalent,
)

__version__ = "1.0.0"


def kernel_backend() -> str:
    """Name of the active low-level implementation ('compiled' or 'pure')."""
    return backend_name()


__all__ = [
    "AlgebraicRoot",
    "AuditReport",
    "COMPILED_MAX_N",
    "ComputationDefect",
    "ConjectureReport",
    "DisconnectedError",
    "GaussInt",
    "Graph",
    "GuardLimit",
    "GuoMoharReport",
    "HermitianMatrix",
    "IntPoly",
    "LevelChoice",
    "MatchingProfile",
    "MixedGraph",
    "Order",
    "OrientationCertificate",
    "OrispecError",
    "ParseError",
    "SignVector",
    "SpanningTree",
    "SwitchingCertificate",
    "SwitchingMap",
    "apply_switching",
    "audit_interlacing_family",
    "backend_name",
    "bfs_spanning_tree",
    "build_mixed",
    "canonical_form",
    "charpoly",
    "charpoly_of_mixed",
    "classify_partial_orientations",
    "common_interlacing",
    "compare_roots",
    "conditional_sum_charpoly",
    "conditional_sum_fast",
    "conjecture_report",
    "converse",
    "cotree_edges",
    "count_real_roots",
    "eigenvalues_numeric",
    "encode_graph6",
    "enumerate_spanning_trees",
    "equiv_to_oriented",
    "equiv_to_unoriented",
    "expected_charpoly",
    "explore_corpus",
    "explore_record",
    "format_mixed",
    "fundamental_cycle",
    "generate_corpus",
    "greedy_orientation",
    "guo_mohar_sweep",
    "has_compiled",
    "hermitian_adjacency",
    "interlaces",
    "is_real_rooted",
    "isolate_largest_root",
    "isolate_real_roots",
    "isolate_smallest_root",
    "kernel_backend",
    "lambda_max",
    "lambda_min",
    "matching_counts",
    "matching_polynomial",
    "matching_radius",
    "min_rho_all_mixed",
    "min_rho_complete",
    "min_rho_partial",
    "parse_edge_list",
    "parse_graph6",
    "parse_mixed",
    "rank_one_witness",
    "roots_numeric",
    "sign_vectors",
    "spectral_radius",
    "spectral_radius_of_charpoly",
    "squarefree_decomposition",
    "squarefree_part",
    "sturm_chain",
    "switching_equivalent",
    "tree_from_edges",
    "tree_parity_bipartition",
    "verify_bound",
    "verify_rank_one_identity",
    "worker_count",
]
