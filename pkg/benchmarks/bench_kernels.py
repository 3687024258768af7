#!/usr/bin/env python3
"""Time the hot kernels with numba enabled against the interpreted fallback.

The fallback is selected by RBDOM_DISABLE_NUMBA=1 at import time, so this
script re-runs itself in a child process with that flag set and merges the
two sets of timings into one table.

Usage:
    python benchmarks/bench_kernels.py [--n 5000] [--avg-deg 10] [--repeat 3]
"""

import argparse
import json
import os
import subprocess
import sys
import time


def _timings(n, avg_deg, seed, repeat):
    import rbdom
    from rbdom import all_blue, approximate, degeneracy_order, gen_gnp, run_exp_la
    from rbdom.pipeline import reduce_instance

    g = gen_gnp(n, avg_deg, seed)

    # warm up the JIT compilation outside the timed region
    small = gen_gnp(64, 4.0, 0)
    degeneracy_order(small)
    run_exp_la(small)

    def best_of(fn):
        best = float("inf")
        for _ in range(repeat):
            t0 = time.perf_counter()
            fn()
            best = min(best, time.perf_counter() - t0)
        return best

    results = {
        "backend": "numba" if rbdom.NUMBA_ENABLED else "python",
        "n": g.n,
        "m": g.m,
        "degeneracy_order": best_of(lambda: degeneracy_order(g)),
        "reductions": best_of(lambda: reduce_instance(all_blue(g), lossy=True)),
        "greedy_cover": best_of(lambda: approximate(all_blue(g))),
        "full_la_pipeline": best_of(lambda: run_exp_la(g)),
    }
    return results


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=5000)
    parser.add_argument("--avg-deg", type=float, default=10.0)
    parser.add_argument("--seed", type=int, default=1)
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--child", action="store_true", help=argparse.SUPPRESS)
    args = parser.parse_args()

    if args.child:
        print(json.dumps(_timings(args.n, args.avg_deg, args.seed, args.repeat)))
        return

    jit = _timings(args.n, args.avg_deg, args.seed, args.repeat)

    env = dict(os.environ, RBDOM_DISABLE_NUMBA="1")
    cmd = [
        sys.executable,
        os.path.abspath(__file__),
        "--child",
        "--n", str(args.n),
        "--avg-deg", str(args.avg_deg),
        "--seed", str(args.seed),
        "--repeat", str(args.repeat),
    ]
    out = subprocess.run(cmd, env=env, capture_output=True, text=True, check=True)
    pure = json.loads(out.stdout.splitlines()[-1])

    print(f"graph: n={jit['n']} m={jit['m']} (gnp, avg_deg={args.avg_deg})")
    print(f"{'kernel':<20} {'numba':>10} {'python':>10} {'speedup':>9}")
    for key in ("degeneracy_order", "reductions", "greedy_cover", "full_la_pipeline"):
        a, b = jit[key], pure[key]
        print(f"{key:<20} {a:>9.4f}s {b:>9.4f}s {b / a:>8.1f}x")


if __name__ == "__main__":
    main()
