"""Backend selection for the exact charpoly kernel.

The compiled extension is used when it imported cleanly and the matrix fits
its int64 safety envelope (Gaussian-unit entries, n <= 13); everything else
goes to the arbitrary-precision pure-Python implementation.  Both backends
compute identical integers, which the test suite checks directly.
"""

from __future__ import annotations

from . import _kernel_py as _pure

try:
    from . import _kernel_c as _fast
except ImportError:  # extension not built; fall back silently
    _fast = None

COMPILED_MAX_N = 13


def backend_name() -> str:
    return "compiled" if _fast is not None else "pure"


def has_compiled() -> bool:
    return _fast is not None


def _units_only(re, im) -> bool:
    for a, b in zip(re, im):
        if a < -1 or a > 1 or b < -1 or b > 1:
            return False
    return True


def _check_flat(re, im, n: int) -> None:
    # validated here once so the compiled backend can index without checks
    if n < 0:
        raise ValueError("n must be nonnegative")
    if len(re) != n * n or len(im) != n * n:
        raise ValueError(f"flat matrix parts must have length n*n = {n * n}")


def charpoly_flat(re, im, n: int) -> list[int]:
    """det(xI - A) coefficients (ascending) for a Hermitian Gaussian matrix."""
    _check_flat(re, im, n)
    if _fast is not None and n <= COMPILED_MAX_N and _units_only(re, im):
        return _fast.charpoly(re, im, n)
    return _pure.charpoly(re, im, n)


def sum_orientations_flat(re, im, n: int, tails, heads) -> list[int]:
    """Sum of charpolys over all orientations of the listed free edges."""
    _check_flat(re, im, n)
    if len(tails) != len(heads):
        raise ValueError("tails and heads must have equal length")
    for u, v in zip(tails, heads):
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise ValueError(f"free edge ({u}, {v}) is not a valid vertex pair")
    if (
        _fast is not None
        and n <= COMPILED_MAX_N
        and len(tails) <= 24
        and _units_only(re, im)
    ):
        return _fast.sum_orientations(re, im, n, tails, heads)
    return _pure.sum_orientations(re, im, n, tails, heads)
