"""Time the bitmask kernels on the numba and numpy paths.

    python3 benchmarks/bench_kernels.py [--size N] [--repeat R]

The first numba call includes compilation (cached on disk afterwards), so
each path is warmed up once before timing.
"""
import argparse
import time

import numpy as np

from egdp import kernels
from egdp.verify.generate import gen_gdp_exhaustive, unary_scheme


def best(fn, repeat):
    fn()
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t)
    return min(times)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--size", type=int, default=4, help="tuples in the pair-soundness scheme (1-6)")
    ap.add_argument("--rows", type=int, default=20_000, help="relations in the subsumption filter")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    rng = np.random.default_rng(0)
    pos = rng.integers(0, 1 << 16, args.rows).astype(np.uint64)
    neg = rng.integers(0, 1 << 16, args.rows).astype(np.uint64)
    fam = list(gen_gdp_exhaustive(unary_scheme(args.size), 2))
    p, q = kernels.encode_gdps(fam, 2)

    cases = [
        (f"unsubsumed_masks ({args.rows} rows)", lambda nb: kernels.unsubsumed_masks(pos, neg, nb)),
        (f"pair_soundness union ({len(fam)}^2 pairs)",
         lambda nb: kernels.pair_soundness(kernels.UNION, p, q, args.size, nb)),
        (f"pair_soundness intersect ({len(fam)}^2 pairs)",
         lambda nb: kernels.pair_soundness(kernels.INTERSECT, p, q, args.size, nb)),
    ]
    paths = [False] + ([True] if kernels.HAVE_NUMBA else [])
    print(f"{'kernel':<42}{'numpy':>10}{'numba':>10}{'speedup':>9}")
    for name, fn in cases:
        t = {nb: best(lambda: fn(nb), args.repeat) for nb in paths}
        if True in t:
            print(f"{name:<42}{t[False]:>9.3f}s{t[True]:>9.3f}s{t[False] / t[True]:>8.1f}x")
        else:
            print(f"{name:<42}{t[False]:>9.3f}s{'-':>10}")


if __name__ == "__main__":
    main()
