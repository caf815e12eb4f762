"""Exhaustive exploration over small connected graphs.

The corpus holds one representative per isomorphism class, produced by
extending each smaller graph with one new vertex (every connected graph has
a non-cut vertex, so this reaches everything) and deduplicating on a
canonical form: the lexicographically smallest placement bitstring over all
vertex orderings, found by branch and bound.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from functools import lru_cache

from . import kernel
from .errors import GuardLimit
from .graphs import (
    Edge,
    Graph,
    MixedGraph,
    SignVector,
    SpanningTree,
    bfs_spanning_tree,
    cotree_edges,
    encode_graph6,
    enumerate_spanning_trees,
    sign_vectors,
)
from .hermitian import charpoly_of_mixed, spectral_radius_of_charpoly
from .polynomials import AlgebraicRoot, IntPoly, Order, compare_roots

CORPUS_GUARD_N = 7
MIN_COMPLETE_GUARD_M = 20
MIN_PARTIAL_GUARD_N = 7
ALL_MIXED_GUARD_N = 4


def worker_count() -> int:
    """Parallel workers for corpus sweeps, capped by ORISPEC_THREADS.

    Defaults to 1 (serial, fully deterministic); results are emitted in
    input order either way.
    """
    raw = os.environ.get("ORISPEC_THREADS", "1")
    try:
        k = int(raw)
    except ValueError:
        return 1
    return max(1, k)


# ---------------------------------------------------------------------------
# canonical forms and the corpus
# ---------------------------------------------------------------------------


def canonical_form(g: Graph) -> tuple[tuple[int, ...], Graph]:
    """Canonical key and canonically relabeled copy of g.

    The key is the maximum, over all vertex orderings, of the sequence of
    row masks: entry k packs the adjacency of the k-th placed vertex to the
    previously placed ones (earliest neighbor in the highest bit).  Maximum
    rather than minimum so adjacency concentrates in the leading entries,
    which lets branch and bound cut almost every ordering after a few
    levels even on sparse graphs.
    """
    n = g.n
    adjbits = [0] * n
    for (u, v) in g.edges:
        adjbits[u] |= 1 << v
        adjbits[v] |= 1 << u
    best_bits: list[int] | None = None
    best_perm: list[int] | None = None

    def rec(placed: list[int], bits: list[int]) -> None:
        nonlocal best_bits, best_perm
        k = len(placed)
        if best_bits is not None and bits < best_bits[:k]:
            return
        if k == n:
            if best_bits is None or bits > best_bits:
                best_bits = list(bits)
                best_perm = list(placed)
            return
        ranked = []
        for v in range(n):
            if v in placed:
                continue
            av = adjbits[v]
            seg = 0
            for u in placed:
                seg = (seg << 1) | ((av >> u) & 1)
            ranked.append((seg, v))
        ranked.sort(reverse=True)
        for seg, v in ranked:
            placed.append(v)
            bits.append(seg)
            rec(placed, bits)
            placed.pop()
            bits.pop()

    rec([], [])
    assert best_bits is not None and best_perm is not None
    position = {orig: idx for idx, orig in enumerate(best_perm)}
    edges = frozenset(
        (min(position[u], position[v]), max(position[u], position[v])) for (u, v) in g.edges
    )
    return tuple(best_bits), Graph(n, edges)


@lru_cache(maxsize=None)
def _corpus_level(n: int) -> tuple[Graph, ...]:
    """All connected graphs on exactly n vertices, one per isomorphism class,
    canonically labeled, in canonical-key order."""
    if n < 1:
        return ()
    if n == 1:
        return (Graph(1, frozenset()),)
    found: dict[tuple[int, ...], Graph] = {}
    new = n - 1
    for smaller in _corpus_level(n - 1):
        for bits in range(1, 1 << new):
            extra = [(v, new) for v in range(new) if (bits >> v) & 1]
            candidate = Graph(n, smaller.edges | frozenset(extra))
            key, canon = canonical_form(candidate)
            if key not in found:
                found[key] = canon
    return tuple(found[k] for k in sorted(found))


def generate_corpus(max_n: int, guard: bool = True) -> list[Graph]:
    """All connected graphs with 1 <= n <= max_n, up to isomorphism."""
    if max_n < 1:
        raise ValueError("max_n must be at least 1")
    if guard and max_n > CORPUS_GUARD_N:
        raise GuardLimit(
            f"corpus generation is exhaustive; max_n={max_n} exceeds "
            f"{CORPUS_GUARD_N} (pass guard=False to override)"
        )
    out: list[Graph] = []
    for n in range(1, max_n + 1):
        out.extend(_corpus_level(n))
    return out


# ---------------------------------------------------------------------------
# minimum spectral radius searches
# ---------------------------------------------------------------------------


def _radius_min(
    candidates: "list[tuple[IntPoly, object]]",
) -> tuple[AlgebraicRoot, object]:
    """Exact minimum of spectral radii over (charpoly, witness) pairs.

    Candidates must already be deduplicated by polynomial and listed in
    witness-preference order: on exact ties the earliest witness wins.
    """
    best_root: AlgebraicRoot | None = None
    best_witness: object = None
    for poly, witness in candidates:
        root = spectral_radius_of_charpoly(poly)
        if best_root is None or compare_roots(root, best_root) is Order.LT:
            best_root, best_witness = root, witness
    assert best_root is not None
    return best_root, best_witness


def min_rho_complete(g: Graph, guard: bool = True) -> tuple[AlgebraicRoot, SignVector]:
    """Minimum spectral radius over all complete orientations of g.

    Diagonal switching with entries +-1 can force every tree arc to point
    from its smaller endpoint to its larger one without changing the
    spectrum, so only the 2^m cotree sign choices are enumerated (this
    reduction is validated against the unreduced search in the tests).
    Returns the radius and a full-edge sign vector witness (+1 on every
    tree edge); ties resolve to the lexicographically smallest witness.
    """
    g.require_connected()
    t = bfs_spanning_tree(g, 0)
    co = cotree_edges(g, t)
    m = len(co)
    if guard and m > MIN_COMPLETE_GUARD_M:
        raise GuardLimit(
            f"complete-orientation search enumerates 2^m cases; m={m} exceeds "
            f"{MIN_COMPLETE_GUARD_M} (pass guard=False to override)"
        )
    n = g.n
    base_re = [0] * (n * n)
    base_im = [0] * (n * n)
    for (u, v) in t.tree_edges:
        base_im[u * n + v] = 1
        base_im[v * n + u] = -1
    edge_order = g.edge_list
    tree_positions = {e: idx for idx, e in enumerate(edge_order)}
    seen: dict[tuple[int, ...], SignVector] = {}
    for signs in sign_vectors(m):
        im = list(base_im)
        for j, s in enumerate(signs):
            u, v = co[j]
            im[u * n + v] = s
            im[v * n + u] = -s
        poly = tuple(kernel.charpoly_flat(base_re, im, n))
        if poly not in seen:
            full = [1] * len(edge_order)
            for j, s in enumerate(signs):
                full[tree_positions[co[j]]] = s
            seen[poly] = SignVector(edge_order, tuple(full))
    root, witness = _radius_min([(IntPoly(p), sv) for p, sv in seen.items()])
    return root, witness


def min_rho_partial(
    g: Graph, guard: bool = True
) -> tuple[AlgebraicRoot, SpanningTree, SignVector]:
    """Minimum spectral radius over every spanning tree and every partial
    orientation; exact, with a deterministic first-found witness on ties
    (trees in enumeration order, then signs ascending)."""
    g.require_connected()
    if guard and g.n > MIN_PARTIAL_GUARD_N:
        raise GuardLimit(
            f"partial-orientation search is exhaustive over trees; n={g.n} "
            f"exceeds {MIN_PARTIAL_GUARD_N} (pass guard=False to override)"
        )
    n = g.n
    seen: dict[tuple[int, ...], tuple[SpanningTree, SignVector]] = {}
    for t in enumerate_spanning_trees(g, guard=guard):
        co = cotree_edges(g, t)
        re = [0] * (n * n)
        for (u, v) in t.tree_edges:
            re[u * n + v] = 1
            re[v * n + u] = 1
        for signs in sign_vectors(len(co)):
            im = [0] * (n * n)
            for j, s in enumerate(signs):
                u, v = co[j]
                im[u * n + v] = s
                im[v * n + u] = -s
            poly = tuple(kernel.charpoly_flat(re, im, n))
            if poly not in seen:
                seen[poly] = (t, SignVector(co, signs))
    candidates = [(IntPoly(p), tw) for p, tw in seen.items()]
    root, witness = _radius_min(candidates)
    t, sv = witness  # type: ignore[misc]
    return root, t, sv


def min_rho_all_mixed(g: Graph, guard: bool = True) -> tuple[AlgebraicRoot, MixedGraph]:
    """Minimum spectral radius over every mixed graph on g (3^|E| states)."""
    g.require_connected()
    if guard and g.n > ALL_MIXED_GUARD_N:
        raise GuardLimit(
            f"all-mixed search enumerates 3^|E| states; n={g.n} exceeds "
            f"{ALL_MIXED_GUARD_N} (pass guard=False to override)"
        )
    edges = g.edge_list
    seen: dict[tuple[int, ...], MixedGraph] = {}
    for states in itertools.product((0, 1, 2), repeat=len(edges)):
        directions: dict[Edge, tuple[int, int] | None] = {}
        for e, st in zip(edges, states):
            directions[e] = None if st == 0 else (e if st == 1 else (e[1], e[0]))
        d = MixedGraph.of(g, directions)
        poly = tuple(charpoly_of_mixed(d).coeffs)
        if poly not in seen:
            seen[poly] = d
    root, witness = _radius_min([(IntPoly(p), d) for p, d in seen.items()])
    return root, witness  # type: ignore[return-value]


# ---------------------------------------------------------------------------
# sweeps and reports
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GuoMoharReport:
    """Exact check of rho(mixed) <= rho(underlying graph) over a family."""

    checked: int
    violations: tuple[str, ...]

    @property
    def passed(self) -> bool:
        return not self.violations


def guo_mohar_sweep(g: Graph, guard: bool = True) -> GuoMoharReport:
    """Compare rho of every sweep-visited mixed graph on g against rho(G).

    Visits all partial orientations of the BFS tree at 0 and all reduced
    complete orientations, deduplicated by charpoly; every comparison is
    exact.  Any violation would contradict a published bound, so callers
    treat a non-empty violation list as a defect.
    """
    g.require_connected()
    t = bfs_spanning_tree(g, 0)
    co = cotree_edges(g, t)
    m = len(co)
    if guard and m > 12:
        raise GuardLimit(f"sweep enumerates 2^m orientations twice; m={m} exceeds 12")
    rho_g = spectral_radius_of_charpoly(
        charpoly_of_mixed(MixedGraph.undirected(g))
    )
    n = g.n
    polys: set[tuple[int, ...]] = set()
    # partial orientations over the BFS tree
    re = [0] * (n * n)
    for (u, v) in t.tree_edges:
        re[u * n + v] = 1
        re[v * n + u] = 1
    for signs in sign_vectors(m):
        im = [0] * (n * n)
        for j, s in enumerate(signs):
            u, v = co[j]
            im[u * n + v] = s
            im[v * n + u] = -s
        polys.add(tuple(kernel.charpoly_flat(re, im, n)))
    # reduced complete orientations
    zero_re = [0] * (n * n)
    base_im = [0] * (n * n)
    for (u, v) in t.tree_edges:
        base_im[u * n + v] = 1
        base_im[v * n + u] = -1
    for signs in sign_vectors(m):
        im = list(base_im)
        for j, s in enumerate(signs):
            u, v = co[j]
            im[u * n + v] = s
            im[v * n + u] = -s
        polys.add(tuple(kernel.charpoly_flat(zero_re, im, n)))
    violations = []
    for poly in sorted(polys):
        rho = spectral_radius_of_charpoly(IntPoly(poly))
        if compare_roots(rho, rho_g) is Order.GT:
            violations.append(f"charpoly {IntPoly(poly)} has rho above rho(G)")
    return GuoMoharReport(checked=len(polys), violations=tuple(violations))


@dataclass(frozen=True)
class ConjectureReport:
    """Comparison of the minimum spectral radius over complete orientations
    against partial orientations (and optionally all mixed graphs).

    The working conjecture is that complete orientations attain the global
    minimum; ``consistent`` is False exactly when this sweep refutes it,
    which would be a finding worth reporting loudly, not an error.
    """

    graph: Graph
    complete_root: AlgebraicRoot
    complete_witness: SignVector
    partial_root: AlgebraicRoot
    partial_tree: SpanningTree
    partial_witness: SignVector
    complete_vs_partial: Order
    all_root: AlgebraicRoot | None
    all_vs_complete: Order | None

    @property
    def consistent(self) -> bool:
        if self.complete_vs_partial is Order.GT:
            return False
        if self.all_vs_complete is not None and self.all_vs_complete is not Order.EQ:
            return False
        return True

    def to_json(self) -> dict:
        data = {
            "graph6": encode_graph6(self.graph),
            "n": self.graph.n,
            "edges": [list(e) for e in self.graph.edge_list],
            "min_complete": {
                "rho": self.complete_root.to_json(),
                "edges": [list(e) for e in self.complete_witness.edges],
                "signs": list(self.complete_witness.signs),
            },
            "min_partial": {
                "rho": self.partial_root.to_json(),
                "tree": sorted(list(e) for e in self.partial_tree.tree_edges),
                "signs": list(self.partial_witness.signs),
                "cotree": [list(e) for e in self.partial_witness.edges],
            },
            "complete_vs_partial": str(self.complete_vs_partial),
            "consistent": self.consistent,
        }
        if self.all_root is not None:
            data["min_all_mixed"] = self.all_root.to_json()
            data["all_vs_complete"] = str(self.all_vs_complete)
        return data


def conjecture_report(g: Graph, include_all_mixed: bool | None = None, guard: bool = True) -> ConjectureReport:
    """Assemble the three-tier minimum-rho comparison for one graph.

    include_all_mixed defaults to running the 3^|E| sweep only when the
    guard allows it (n <= 4).
    """
    c_root, c_witness = min_rho_complete(g, guard=guard)
    p_root, p_tree, p_witness = min_rho_partial(g, guard=guard)
    if include_all_mixed is None:
        include_all_mixed = g.n <= ALL_MIXED_GUARD_N
    all_root = None
    all_cmp = None
    if include_all_mixed:
        all_root, _ = min_rho_all_mixed(g, guard=guard)
        all_cmp = compare_roots(all_root, c_root)
    return ConjectureReport(
        graph=g,
        complete_root=c_root,
        complete_witness=c_witness,
        partial_root=p_root,
        partial_tree=p_tree,
        partial_witness=p_witness,
        complete_vs_partial=compare_roots(c_root, p_root),
        all_root=all_root,
        all_vs_complete=all_cmp,
    )


def explore_record(g: Graph, include_all_mixed: bool | None = None) -> dict:
    """One JSON-ready record per graph: conjecture tiers plus the exact
    rho(mixed) <= rho(G) sweep."""
    report = conjecture_report(g, include_all_mixed=include_all_mixed)
    gm = guo_mohar_sweep(g)
    data = report.to_json()
    data["guo_mohar"] = {
        "checked": gm.checked,
        "violations": list(gm.violations),
    }
    return data


def explore_corpus(max_n: int, guard: bool = True) -> list[dict]:
    """Records for every corpus graph, in corpus order.

    Honors ORISPEC_THREADS for process-level parallelism; output order and
    content are independent of the worker count.
    """
    graphs = generate_corpus(max_n, guard=guard)
    workers = worker_count()
    if workers > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(explore_record, graphs))
    return [explore_record(g) for g in graphs]
