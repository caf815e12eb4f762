# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled exact characteristic-polynomial kernel.

Same contract as _kernel_py but in fixed int64 arithmetic, so it only
accepts matrices with Gaussian-unit entries (0, +-1, +-i) and n <= 13.
Under those constraints a worst-case bound on the Faddeev-LeVerrier
intermediates (Hadamard bound on charpoly coefficients times a walk-count
bound on matrix powers) stays three orders of magnitude below 2^63, so no
overflow checks are needed in the hot loop.  The dispatching wrapper sends
anything larger to the pure-Python backend.
"""

from libc.stdint cimport int64_t

from .errors import ComputationDefect

cdef enum:
    NCAP = 13


cdef int _fl(const int64_t* are, const int64_t* aim, int n, int64_t* cs) except -1:
    cdef int64_t mre[169]
    cdef int64_t mim[169]
    cdef int64_t nre[169]
    cdef int64_t nim[169]
    cdef int i, j, k, step, row, kr
    cdef int64_t c, tr, ti, ar, ai

    for i in range(n * n):
        mre[i] = are[i]
        mim[i] = aim[i]
    for i in range(n + 1):
        cs[i] = 0
    cs[n] = 1
    if n == 0:
        return 0
    tr = 0
    ti = 0
    for i in range(n):
        tr += mre[i * n + i]
        ti += mim[i * n + i]
    if ti != 0:
        raise ComputationDefect("non-real trace in charpoly recurrence")
    c = -tr
    cs[n - 1] = c
    for step in range(2, n + 1):
        for i in range(n):
            mre[i * n + i] += c
        for i in range(n * n):
            nre[i] = 0
            nim[i] = 0
        for i in range(n):
            row = i * n
            for k in range(n):
                ar = are[row + k]
                ai = aim[row + k]
                if ar == 0 and ai == 0:
                    continue
                kr = k * n
                for j in range(n):
                    nre[row + j] += ar * mre[kr + j] - ai * mim[kr + j]
                    nim[row + j] += ar * mim[kr + j] + ai * mre[kr + j]
        for i in range(n * n):
            mre[i] = nre[i]
            mim[i] = nim[i]
        tr = 0
        ti = 0
        for i in range(n):
            tr += mre[i * n + i]
            ti += mim[i * n + i]
        if ti != 0:
            raise ComputationDefect("non-real trace in charpoly recurrence")
        if tr % step != 0:
            raise ComputationDefect("inexact division in charpoly recurrence")
        c = -(tr // step)
        cs[n - step] = c
    return 0


def charpoly(re, im, int n):
    """Coefficients of det(xI - A), ascending degree; A Hermitian, n <= 13."""
    if n < 0 or n > NCAP:
        raise ValueError("compiled kernel handles n <= 13 only")
    cdef int64_t are[169]
    cdef int64_t aim[169]
    cdef int64_t cs[14]
    cdef int i
    for i in range(n * n):
        are[i] = re[i]
        aim[i] = im[i]
    _fl(are, aim, n, cs)
    return [cs[i] for i in range(n + 1)]


def sum_orientations(re, im, int n, tails, heads):
    """Sum of charpoly over all 2^f orientations of the f free edges."""
    cdef int f = len(tails)
    if n < 0 or n > NCAP:
        raise ValueError("compiled kernel handles n <= 13 only")
    if f > 24:
        raise ValueError("compiled kernel handles at most 24 free edges")
    cdef int64_t bre[169]
    cdef int64_t bim[169]
    cdef int64_t cs[14]
    cdef int64_t acc[14]
    cdef int tl[24]
    cdef int hd[24]
    cdef unsigned long mask, lim
    cdef int i, j
    cdef int64_t s
    for i in range(n * n):
        bre[i] = re[i]
        bim[i] = im[i]
    for i in range(n + 1):
        acc[i] = 0
    for j in range(f):
        tl[j] = tails[j]
        hd[j] = heads[j]
    lim = (<unsigned long>1) << f
    mask = 0
    while mask < lim:
        for j in range(f):
            s = -1 if (mask >> j) & 1 else 1
            bim[tl[j] * n + hd[j]] = s
            bim[hd[j] * n + tl[j]] = -s
        _fl(bre, bim, n, cs)
        for i in range(n + 1):
            acc[i] += cs[i]
        mask += 1
    return [acc[i] for i in range(n + 1)]
