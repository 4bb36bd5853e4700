"""Time the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--n 1024] [--repeat 3]
"""

import argparse
import math
import time
from fractions import Fraction

from dotpairs import kernels
from dotpairs.constructions import grid_set, perturbed_grid


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def agree(a, b):
    if isinstance(a, list) and a and isinstance(a[0], float):
        return all(math.isclose(x, y, rel_tol=1e-12) for x, y in zip(a, b))
    return a == b


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=1024)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)

    G = perturbed_grid(args.n, Fraction(7, 4), seed=1).coords
    small = grid_set(min(args.n, 144)).coords
    t = G.target(Fraction(1))
    ts = small.target(Fraction(1))
    cases = [
        ("profile_counts", lambda fp: kernels.profile_counts(G, t, t, force_python=fp)),
        ("min_sep_sq", lambda fp: kernels.min_sep_sq(G, force_python=fp)),
        ("energy_row_sums", lambda fp: kernels.energy_row_sums(G, 0.875, force_python=fp)),
        ("brute_triples(n<=144)", lambda fp: kernels.brute_triples(small, ts, ts, force_python=fp)),
    ]
    print(f"backend={kernels.BACKEND} threads={kernels.get_threads()} n={args.n}")
    print(f"{'kernel':<24}{'compiled s':>12}{'python s':>12}{'speedup':>10}")
    for name, fn in cases:
        py = best_of(lambda: fn(True), args.repeat)
        if kernels.BACKEND == "compiled":
            assert agree(fn(False), fn(True)), name
            c = best_of(lambda: fn(False), args.repeat)
            print(f"{name:<24}{c:>12.4f}{py:>12.4f}{py / c:>10.1f}")
        else:
            print(f"{name:<24}{'n/a':>12}{py:>12.4f}{'':>10}")


if __name__ == "__main__":
    main()
