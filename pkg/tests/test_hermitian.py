import random

import pytest

import oracles
from orispec.graphs import (
    Graph,
    MixedGraph,
    SignVector,
    bfs_spanning_tree,
    build_mixed,
    cotree_edges,
    sign_vectors,
)
from orispec.hermitian import (
    G_I,
    G_ONE,
    G_ZERO,
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
    verify_rank_one_identity,
)
from orispec.polynomials import Order, compare_roots


def mixed_of(n, undirected=(), arcs=()):
    g = Graph.of(n, list(undirected) + [tuple(sorted(a)) for a in arcs])
    directions = {tuple(sorted(a)): a for a in arcs}
    return MixedGraph.of(g, {e: directions.get(e) for e in g.edges})


class TestGaussInt:
    def test_arithmetic(self):
        a = GaussInt(1, 2)
        b = GaussInt(0, -1)
        assert a + b == GaussInt(1, 1)
        assert a - b == GaussInt(1, 3)
        assert a * b == GaussInt(2, -1)
        assert a.conjugate() == GaussInt(1, -2)
        assert -b == GaussInt(0, 1)

    def test_constants(self):
        assert G_ZERO.is_zero and not G_ONE.is_zero
        assert G_I * G_I == -G_ONE

    def test_str(self):
        assert str(GaussInt(0, 1)) == "i"
        assert str(GaussInt(0, -1)) == "-i"
        assert str(GaussInt(3, 0)) == "3"
        assert str(GaussInt(1, 1)) == "1+i"


class TestHermitianMatrix:
    def test_validation(self):
        with pytest.raises(ValueError):
            HermitianMatrix(((G_ZERO, G_I), (G_I, G_ZERO)))  # not conjugate symmetric
        with pytest.raises(ValueError):
            HermitianMatrix(((G_I,),))  # imaginary diagonal

    def test_adjacency_single_edge(self):
        h = hermitian_adjacency(mixed_of(2, undirected=[(0, 1)]))
        assert h.entry(0, 1) == G_ONE and h.entry(1, 0) == G_ONE

    def test_adjacency_single_arc(self):
        h = hermitian_adjacency(mixed_of(2, arcs=[(0, 1)]))
        assert h.entry(0, 1) == G_I
        assert h.entry(1, 0) == GaussInt(0, -1)

    def test_adjacency_empty(self):
        h = hermitian_adjacency(MixedGraph.undirected(Graph.of(3, [])))
        assert all(h.entry(u, v) == G_ZERO for u in range(3) for v in range(3))


class TestCharpoly:
    def test_single_arc(self):
        assert charpoly_of_mixed(mixed_of(2, arcs=[(0, 1)])).coeffs == (-1, 0, 1)

    def test_h1_from_example(self, c4):
        d = mixed_of(4, undirected=[(0, 1), (1, 2), (2, 3)], arcs=[(0, 3)])
        assert d.graph == c4
        assert str(charpoly_of_mixed(d)) == "x^4-4x^2+2"

    def test_d1_class_from_example(self, ex1, ex1_path_tree):
        # opposite cotree signs give the charpoly with the +2x term
        sv = SignVector.for_tree(ex1, ex1_path_tree, (1, -1))
        d = build_mixed(ex1, ex1_path_tree, sv)
        assert str(charpoly_of_mixed(d)) == "x^4-5x^2+2x+2"
        sv2 = SignVector.for_tree(ex1, ex1_path_tree, (1, 1))
        assert str(charpoly_of_mixed(build_mixed(ex1, ex1_path_tree, sv2))) == "x^4-5x^2-2x+2"

    def test_matches_interpolation_oracle_random(self):
        rng = random.Random(17)
        for _ in range(60):
            n = rng.randint(1, 8)
            edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.5]
            states = {}
            for e in edges:
                r = rng.random()
                states[e] = None if r < 1 / 3 else (e if r < 2 / 3 else (e[1], e[0]))
            d = MixedGraph.of(Graph.of(n, edges), states)
            assert charpoly_of_mixed(d).coeffs == tuple(
                oracles.charpoly_of_mixed_by_interpolation(d)
            )

    def test_bipartite_parity(self, corpus6):
        # bipartite graphs force a spectrum symmetric about zero, which
        # kills every coefficient with parity opposite to n
        rng = random.Random(29)
        for g in corpus6:
            if not g.is_bipartite():
                continue
            t = bfs_spanning_tree(g, 0)
            co = cotree_edges(g, t)
            for _ in range(5):
                signs = tuple(rng.choice((-1, 1)) for _ in co)
                phi = charpoly_of_mixed(build_mixed(g, t, SignVector.for_tree(g, t, signs)))
                for k, c in enumerate(phi.coeffs):
                    if (g.n - k) % 2 == 1:
                        assert c == 0


class TestExactSpectra:
    def test_single_edge_lambda_max(self):
        h = hermitian_adjacency(mixed_of(2, undirected=[(0, 1)]))
        r = lambda_max(h)
        assert r.compare_rational(1) is Order.EQ

    def test_d3_radius_exactly_two(self, ex1, ex1_star_tree):
        # the star-tree class containing x^4-5x^2+4 has spectral radius 2
        for signs in sign_vectors(2):
            sv = SignVector.for_tree(ex1, ex1_star_tree, signs)
            h = hermitian_adjacency(build_mixed(ex1, ex1_star_tree, sv))
            if charpoly(h).coeffs == (4, 0, -5, 0, 1):
                rho = spectral_radius(h)
                assert rho.compare_rational(2) is Order.EQ
                return
        raise AssertionError("no star-tree orientation produced x^4-5x^2+4")

    def test_d1_radius_is_abs_lambda_min(self, ex1, ex1_path_tree):
        sv = SignVector.for_tree(ex1, ex1_path_tree, (1, -1))
        h = hermitian_adjacency(build_mixed(ex1, ex1_path_tree, sv))
        rho = spectral_radius(h)
        assert compare_roots(rho, lambda_max(h)) is Order.GT
        assert compare_roots(rho, lambda_min(h).negated()) is Order.EQ
        assert abs(float(rho) - 2.3429) < 1e-3

    def test_guo_mohar_on_small_corpus(self, corpus5):
        # exact rho(mixed) <= rho(underlying) across random mixed graphs
        rng = random.Random(31)
        for g in corpus5:
            g_rho = spectral_radius(hermitian_adjacency(MixedGraph.undirected(g)))
            for _ in range(6):
                states = {}
                for e in g.edges:
                    r = rng.random()
                    states[e] = None if r < 1 / 3 else (e if r < 2 / 3 else (e[1], e[0]))
                d = MixedGraph.of(g, states)
                rho = spectral_radius(hermitian_adjacency(d))
                assert compare_roots(rho, g_rho) is not Order.GT


class TestNumericEigenvalues:
    def test_c4_spectrum(self, c4):
        vals = eigenvalues_numeric(hermitian_adjacency(MixedGraph.undirected(c4)))
        assert vals == pytest.approx([-2, 0, 0, 2], abs=1e-8)

    def test_d1_values(self, ex1, ex1_path_tree):
        sv = SignVector.for_tree(ex1, ex1_path_tree, (1, -1))
        h = hermitian_adjacency(build_mixed(ex1, ex1_path_tree, sv))
        vals = eigenvalues_numeric(h)
        assert abs(vals[-1] - 1.814) < 1e-3
        assert abs(vals[0] + 2.343) < 1e-3

    def test_matches_numpy_oracle(self):
        rng = random.Random(37)
        for _ in range(25):
            n = rng.randint(1, 7)
            edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.5]
            states = {}
            for e in edges:
                r = rng.random()
                states[e] = None if r < 1 / 3 else (e if r < 2 / 3 else (e[1], e[0]))
            d = MixedGraph.of(Graph.of(n, edges), states)
            ours = eigenvalues_numeric(hermitian_adjacency(d), eps=1e-10)
            ref = oracles.numpy_eigenvalues(d)
            assert ours == pytest.approx(ref, abs=1e-7)

    def test_matches_exact_roots(self, ex1, ex1_path_tree):
        sv = SignVector.for_tree(ex1, ex1_path_tree, (1, 1))
        h = hermitian_adjacency(build_mixed(ex1, ex1_path_tree, sv))
        numeric = eigenvalues_numeric(h, eps=1e-11)
        phi = charpoly(h)
        from orispec.polynomials import roots_numeric

        assert numeric == pytest.approx(roots_numeric(phi), abs=1e-8)


class TestRankOneIdentity:
    def test_tree_case_reduces_to_laplacian(self):
        g = Graph.of(4, [(0, 1), (1, 2), (2, 3)])
        t = bfs_spanning_tree(g, 0)
        assert verify_rank_one_identity(g, t, SignVector.for_tree(g, t, ()))

    def test_c4_plus_sign(self, c4, c4_path_tree):
        sv = SignVector.for_tree(c4, c4_path_tree, (1,))
        assert verify_rank_one_identity(c4, c4_path_tree, sv)

    def test_ex1_all_sign_vectors(self, ex1, ex1_path_tree):
        for signs in sign_vectors(2):
            sv = SignVector.for_tree(ex1, ex1_path_tree, signs)
            assert verify_rank_one_identity(ex1, ex1_path_tree, sv)

    def test_witness_details(self, c4, c4_path_tree):
        sv = SignVector.for_tree(c4, c4_path_tree, (-1,))
        w = rank_one_witness(c4, c4_path_tree, sv)
        assert w.holds and w.psd_ok and w.ok
        assert w.first_mismatch is None
        assert w.max_degree == 2
        assert all(m >= 0 for m in w.leading_minors)

    def test_random_corpus_triples(self, corpus5):
        rng = random.Random(43)
        for _ in range(60):
            g = rng.choice(corpus5)
            t = bfs_spanning_tree(g, rng.randrange(g.n))
            co = cotree_edges(g, t)
            signs = tuple(rng.choice((-1, 1)) for _ in co)
            assert verify_rank_one_identity(g, t, SignVector.for_tree(g, t, signs))
