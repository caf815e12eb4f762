"""Independent reference implementations used only by the tests.

Everything here recomputes a quantity through a different algorithm (and
usually different arithmetic) than the package, so agreement between the
two is evidence of correctness rather than a tautology.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

# ---------------------------------------------------------------------------
# exact complex-integer determinants (Bareiss) and charpoly by interpolation
# ---------------------------------------------------------------------------

CZERO = (0, 0)


def _cmul(a, b):
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def _csub(a, b):
    return (a[0] - b[0], a[1] - b[1])


def _cdivexact(a, b):
    # (a / b) over the Gaussian integers; Bareiss guarantees exactness
    num_re = a[0] * b[0] + a[1] * b[1]
    num_im = a[1] * b[0] - a[0] * b[1]
    den = b[0] * b[0] + b[1] * b[1]
    assert den != 0, "division by zero in Bareiss elimination"
    q_re, r_re = divmod(num_re, den)
    q_im, r_im = divmod(num_im, den)
    assert r_re == 0 and r_im == 0, "inexact division in Bareiss elimination"
    return (q_re, q_im)


def bareiss_det(rows) -> tuple[int, int]:
    """Exact determinant of a square matrix of Gaussian integers.

    Entries are (re, im) pairs.  Fraction-free Bareiss elimination with row
    swaps for zero pivots.
    """
    n = len(rows)
    if n == 0:
        return (1, 0)
    m = [list(row) for row in rows]
    sign = 1
    prev = (1, 0)
    for k in range(n - 1):
        if m[k][k] == CZERO:
            for r in range(k + 1, n):
                if m[r][k] != CZERO:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return CZERO
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = _csub(_cmul(m[i][j], m[k][k]), _cmul(m[i][k], m[k][j]))
                m[i][j] = _cdivexact(num, prev)
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return (sign * det[0], sign * det[1])


def charpoly_by_interpolation(re, im, n: int) -> list[int]:
    """det(xI - H) via Bareiss determinants at n+1 integer points plus
    exact Lagrange interpolation.  Flat row-major (re, im) input like the
    package kernels take."""
    xs = list(range(n + 1))
    ys = []
    for x in xs:
        rows = [
            [((x if u == v else 0) - re[u * n + v], -im[u * n + v]) for v in range(n)]
            for u in range(n)
        ]
        d = bareiss_det(rows)
        assert d[1] == 0, "charpoly of a Hermitian matrix must be real-valued"
        ys.append(d[0])
    coeffs = [Fraction(0)] * (n + 1)
    for k, (xk, yk) in enumerate(zip(xs, ys)):
        basis = [Fraction(1)]
        denom = 1
        for j, xj in enumerate(xs):
            if j == k:
                continue
            # basis *= (x - xj)
            basis = [Fraction(0)] + basis
            for i in range(len(basis) - 1):
                basis[i] -= xj * basis[i + 1]
            denom *= xk - xj
        scale = Fraction(yk, denom)
        for i, c in enumerate(basis):
            coeffs[i] += c * scale
    assert all(c.denominator == 1 for c in coeffs)
    return [int(c) for c in coeffs]


def charpoly_of_mixed_by_interpolation(d) -> list[int]:
    """Interpolation charpoly straight from a MixedGraph's states."""
    n = d.graph.n
    re = [0] * (n * n)
    im = [0] * (n * n)
    for e, direction in d.states:
        u, v = e
        if direction is None:
            re[u * n + v] = re[v * n + u] = 1
        else:
            t, h = direction
            im[t * n + h] = 1
            im[h * n + t] = -1
    return charpoly_by_interpolation(re, im, n)


# ---------------------------------------------------------------------------
# spanning trees and matchings by brute force
# ---------------------------------------------------------------------------


def kirchhoff_tree_count(g) -> int:
    """Number of spanning trees via a Laplacian cofactor determinant."""
    n = g.n
    if n == 1:
        return 1
    lap = [[0] * n for _ in range(n)]
    for (u, v) in g.edges:
        lap[u][u] += 1
        lap[v][v] += 1
        lap[u][v] -= 1
        lap[v][u] -= 1
    minor = [[(lap[u][v], 0) for v in range(1, n)] for u in range(1, n)]
    det = bareiss_det(minor)
    assert det[1] == 0
    return det[0]


def matching_counts_by_combinations(g) -> list[int]:
    """counts[k] = number of k-edge matchings, checked subset by subset."""
    edges = sorted(g.edges)
    counts = [1]
    k = 1
    while 2 * k <= g.n:
        total = 0
        for combo in itertools.combinations(edges, k):
            seen = set()
            ok = True
            for (u, v) in combo:
                if u in seen or v in seen:
                    ok = False
                    break
                seen.add(u)
                seen.add(v)
            if ok:
                total += 1
        counts.append(total)
        k += 1
    while len(counts) > 1 and counts[-1] == 0:
        counts.pop()
    return counts


# ---------------------------------------------------------------------------
# switching equivalence by exhausting all diagonal phase maps
# ---------------------------------------------------------------------------


def _phase_from_states(states, u: int, v: int) -> int:
    e = (u, v) if u < v else (v, u)
    direction = dict(states)[e]
    if direction is None:
        return 0
    return 1 if direction == (u, v) else 3


def brute_switching_equivalent(d1, d2) -> bool:
    """Try every diagonal of fourth roots of unity (vertex 0 pinned to
    phase 0) with and without converse: 4^(n-1) * 2 candidate maps."""
    if d1.graph != d2.graph:
        return False
    g = d1.graph
    edges = sorted(g.edges)
    p2 = {e: _phase_from_states(d2.states, *e) for e in edges}
    for conv in (False, True):
        p1 = {}
        for e in edges:
            p = _phase_from_states(d1.states, *e)
            p1[e] = (4 - p) % 4 if (conv and p) else p
        for tail in itertools.product(range(4), repeat=g.n - 1):
            ph = (0,) + tail
            if all((p1[e] + ph[e[1]] - ph[e[0]]) % 4 == p2[e] for e in edges):
                return True
    return False


# ---------------------------------------------------------------------------
# cycles and the even-cycle tree condition
# ---------------------------------------------------------------------------


def all_cycles(g) -> list[list[int]]:
    """Every simple cycle of g, each listed once as a vertex sequence.

    A cycle is rooted at its smallest vertex; the orientation with the
    smaller second vertex is kept.
    """
    adj = [sorted(a) for a in g.adjacency]
    cycles: list[list[int]] = []

    def extend(path: list[int]) -> None:
        start, u = path[0], path[-1]
        for w in adj[u]:
            if w == start and len(path) >= 3:
                if path[1] < path[-1]:
                    cycles.append(list(path))
            elif w > start and w not in path:
                path.append(w)
                extend(path)
                path.pop()

    for s in range(g.n):
        extend([s])
    return cycles


def even_cycle_tree_condition(g, tree_edges) -> bool:
    """True iff every even cycle of g uses at most |C| - 2 tree edges."""
    tset = set(tree_edges)
    for cycle in all_cycles(g):
        if len(cycle) % 2 != 0:
            continue
        count = 0
        for i, u in enumerate(cycle):
            v = cycle[(i + 1) % len(cycle)]
            e = (u, v) if u < v else (v, u)
            if e in tset:
                count += 1
        if count > len(cycle) - 2:
            return False
    return True


# ---------------------------------------------------------------------------
# numeric eigenvalues (external library route)
# ---------------------------------------------------------------------------


def numpy_eigenvalues(d) -> list[float]:
    import numpy as np

    n = d.graph.n
    h = np.zeros((n, n), dtype=complex)
    for e, direction in d.states:
        u, v = e
        if direction is None:
            h[u, v] = h[v, u] = 1.0
        else:
            t, hd = direction
            h[t, hd] = 1j
            h[hd, t] = -1j
    return sorted(np.linalg.eigvalsh(h).tolist())
