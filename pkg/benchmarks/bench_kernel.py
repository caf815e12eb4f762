"""Compare the compiled kernel against the pure-Python fallback.

Times exact charpoly extraction on random Hermitian unit matrices and the
summed-orientation kernel on random partial orientations.  Run from the
repository root:

    python benchmarks/bench_kernel.py [--repeat N]
"""

import argparse
import random
import time

from orispec import _kernel_py
from orispec import kernel


def random_hermitian(rng: random.Random, n: int) -> tuple[list, list]:
    re = [0] * (n * n)
    im = [0] * (n * n)
    for u in range(n):
        for v in range(u + 1, n):
            kind = rng.randrange(4)
            if kind == 0:
                continue
            if kind == 1:
                re[u * n + v] = re[v * n + u] = 1
            elif kind == 2:
                im[u * n + v] = 1
                im[v * n + u] = -1
            else:
                im[u * n + v] = -1
                im[v * n + u] = 1
    return re, im


def time_call(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5, help="timing repeats (default 5)")
    args = parser.parse_args()

    if not kernel.has_compiled():
        print("compiled kernel is not available; nothing to compare")
        return

    from orispec import _kernel_c

    rng = random.Random(20240817)
    print(f"active backend: {kernel.backend_name()}")
    print()
    print("charpoly (100 matrices per size)")
    print(f"{'n':>3} {'pure [ms]':>12} {'compiled [ms]':>14} {'speedup':>8}")
    for n in range(4, 14):
        mats = [random_hermitian(rng, n) for _ in range(100)]

        def run(mod):
            def inner():
                for re, im in mats:
                    mod.charpoly(re, im, n)

            return inner

        t_py = time_call(run(_kernel_py), args.repeat)
        t_c = time_call(run(_kernel_c), args.repeat)
        for re, im in mats[:5]:
            assert _kernel_py.charpoly(re, im, n) == _kernel_c.charpoly(re, im, n)
        print(f"{n:>3} {t_py * 1e3:>12.2f} {t_c * 1e3:>14.2f} {t_py / t_c:>7.1f}x")

    print()
    print("sum over all 2^f orientations (single call per row, pure side timed once)")
    print(f"{'n':>3} {'f':>3} {'pure [ms]':>12} {'compiled [ms]':>14} {'speedup':>8}")
    for n, f in ((6, 8), (8, 10), (10, 11)):
        # reserve the free pairs first so enough zero entries always exist
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        rng.shuffle(pairs)
        free, fixed = pairs[:f], pairs[f:]
        re = [0] * (n * n)
        im = [0] * (n * n)
        for (u, v) in fixed:
            kind = rng.randrange(4)
            if kind == 1:
                re[u * n + v] = re[v * n + u] = 1
            elif kind == 2:
                im[u * n + v] = 1
                im[v * n + u] = -1
            elif kind == 3:
                im[u * n + v] = -1
                im[v * n + u] = 1
        tails = [e[0] for e in free]
        heads = [e[1] for e in free]
        t0 = time.perf_counter()
        got_py = _kernel_py.sum_orientations(re, im, n, tails, heads)
        t_py = time.perf_counter() - t0
        t_c = time_call(lambda: _kernel_c.sum_orientations(re, im, n, tails, heads), args.repeat)
        assert got_py == _kernel_c.sum_orientations(re, im, n, tails, heads)
        print(f"{n:>3} {f:>3} {t_py * 1e3:>12.2f} {t_c * 1e3:>14.2f} {t_py / t_c:>7.1f}x")


if __name__ == "__main__":
    main()
