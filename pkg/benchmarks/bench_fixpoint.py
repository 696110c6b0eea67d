"""Benchmark the compiled fixpoint kernel against the pure-Python fallback.

Usage: python benchmarks/bench_fixpoint.py [--repeat N]

Each case solves one (graph, k) instance with both lanes and reports the
best wall time of N runs.  Robber-win instances are cheap for the attractor
(small winning region); cop-win instances with larger k dominate.
"""

import argparse
import time

from copsrobbers import gen_gnp, gen_named, gen_projective_incidence, solve
from copsrobbers._states import state_space_size

CASES = [
    ("petersen k=2 (robber wins)", gen_named("petersen"), 2),
    ("petersen k=3", gen_named("petersen"), 3),
    ("heawood k=3", gen_named("heawood"), 3),
    ("grid 4x4 k=3", gen_named("grid", 4, 4), 3),
    ("dodecahedron k=3", gen_named("dodecahedron"), 3),
    ("gnp(24, 0.25) k=2", gen_gnp(24, 0.25, seed=1), 2),
    ("pg(2,3) k=3 (robber wins)", gen_projective_incidence(3), 3),
]

# cop-win with k=4 on 26 vertices: minutes on the python lane, so opt-in
HEAVY_CASES = [
    ("gnp(24, 0.25) k=3", gen_gnp(24, 0.25, seed=1), 3),
    ("pg(2,3) k=4", gen_projective_incidence(3), 4),
]


def best_time(g, k, kernel, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        started = time.perf_counter()
        result = solve(g, k, kernel=kernel)
        best = min(best, time.perf_counter() - started)
    return best, result


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--heavy", action="store_true",
                        help="include the large cop-win instances (slow python lane)")
    args = parser.parse_args()
    cases = CASES + HEAVY_CASES if args.heavy else CASES

    try:
        import copsrobbers._fixpoint  # noqa: F401

        have_cython = True
    except ImportError:
        have_cython = False
        print("compiled kernel not available; timing the python lane only\n")

    header = f"{'case':<28} {'states':>9} {'python':>10}"
    if have_cython:
        header += f" {'cython':>10} {'speedup':>8}"
    print(header, flush=True)
    print("-" * len(header), flush=True)

    for name, g, k in cases:
        states = state_space_size(g.n, k)
        t_py, r_py = best_time(g, k, "python", args.repeat)
        line = f"{name:<28} {states:>9} {t_py:>9.3f}s"
        if have_cython:
            t_cy, r_cy = best_time(g, k, "cython", args.repeat)
            assert (r_py._levels == r_cy._levels).all(), "lane mismatch!"
            line += f" {t_cy:>9.3f}s {t_py / t_cy:>7.1f}x"
        print(line, flush=True)


if __name__ == "__main__":
    main()
