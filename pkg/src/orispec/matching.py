"""Matching counts and the matching polynomial."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ComputationDefect
from .graphs import Edge, Graph
from .polynomials import AlgebraicRoot, IntPoly, isolate_largest_root


@dataclass(frozen=True)
class MatchingProfile:
    """counts[k] is the number of k-edge matchings; counts[0] is always 1."""

    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.counts or self.counts[0] != 1:
            raise ValueError("a matching profile starts with the empty matching")

    @property
    def max_size(self) -> int:
        return len(self.counts) - 1


def matching_counts(g: Graph) -> MatchingProfile:
    """Count matchings of every size by edge deletion.

    m_k(G) = m_k(G - e) + m_{k-1}(G - u - v) for the smallest edge e = (u, v),
    memoized on the remaining edge set.
    """
    memo: dict[frozenset[Edge], tuple[int, ...]] = {}

    def rec(edges: frozenset[Edge]) -> tuple[int, ...]:
        if not edges:
            return (1,)
        cached = memo.get(edges)
        if cached is not None:
            return cached
        e = min(edges)
        u, v = e
        rest = edges - {e}
        skip = rec(rest)
        take = rec(frozenset(f for f in rest if u not in f and v not in f))
        out = list(skip) + [0] * max(0, len(take) + 1 - len(skip))
        for k, c in enumerate(take):
            out[k + 1] += c
        result = tuple(out)
        memo[edges] = result
        return result

    return MatchingProfile(rec(frozenset(g.edges)))


def matching_polynomial(g: Graph) -> IntPoly:
    """mu(x) = sum_k (-1)^k m_k x^(n-2k)."""
    profile = matching_counts(g)
    coeffs = [0] * (g.n + 1)
    for k, m_k in enumerate(profile.counts):
        coeffs[g.n - 2 * k] = m_k if k % 2 == 0 else -m_k
    return IntPoly(coeffs)


def matching_radius(g: Graph) -> AlgebraicRoot:
    """Largest root of the matching polynomial (needs at least one vertex)."""
    if g.n < 1:
        raise ValueError("graph must have at least one vertex")
    mu = matching_polynomial(g)
    # mu is even or odd with the parity of n; cheap sanity assertion before
    # trusting its largest root as a two-sided spectral bound
    expected = mu if g.n % 2 == 0 else -mu
    if mu.reflected() != expected:
        raise ComputationDefect("matching polynomial lost its parity symmetry")
    return isolate_largest_root(mu)
