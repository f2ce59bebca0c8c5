"""Compare the compiled univariate kernels against the pure-Python ones.

Run: python3 benchmarks/bench_kernels.py
"""

import random
import time

from frobgrow._kernels import _ref

try:
    from frobgrow._kernels import _speedups
except ImportError:
    _speedups = None


def _polys(rng, p, degree, count):
    return [
        _ref.uni_trim([rng.randrange(p) for _ in range(degree + 1)])
        for _ in range(count)
    ]


def bench(label, fn, pairs, p, repeat=3):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        for a, b in pairs:
            fn(a, b, p)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    rng = random.Random(20240824)
    p = 3
    print(f"{'operation':<24}{'pure (s)':>12}{'compiled (s)':>14}{'speedup':>10}")
    for opname in ("uni_mul", "uni_divmod", "uni_gcd"):
        for degree, count in ((8, 4000), (64, 800), (512, 60)):
            a_list = _polys(rng, p, degree, count)
            b_list = _polys(rng, p, max(degree // 2, 1), count)
            pairs = [(a, b) for a, b in zip(a_list, b_list) if b]
            t_pure = bench(opname, getattr(_ref, opname), pairs, p)
            row = f"{opname} deg {degree:<5}"
            if _speedups is None:
                print(f"{row:<24}{t_pure:>12.4f}{'n/a':>14}{'n/a':>10}")
                continue
            t_fast = bench(opname, getattr(_speedups, opname), pairs, p)
            ratio = t_pure / t_fast if t_fast > 0 else float("inf")
            print(f"{row:<24}{t_pure:>12.4f}{t_fast:>14.4f}{ratio:>9.1f}x")


if __name__ == "__main__":
    main()
