#!/usr/bin/env python3
"""Steady-state maximum refresh time on a grid dual as the number of robots
grows, compared against the n/r and 3n/r reference lines.

Robots are seeded evenly along the single-robot steady tour so the swarm
starts close to its equilibrium spacing.

Example:
    python3 scripts/multi_robot_speedup.py --grid 10 --robots 1,3,9 \
        --policies lrv-v,lfv-e
"""

import argparse
import sys

import numpy as np

from patrolsim.engine import SimConfig, run
from patrolsim.generators import grid_triangulation
from patrolsim.metrics import refresh_series
from patrolsim.policies import PolicyKind


def steady_mean(trace, warmup):
    return float(np.mean(refresh_series(trace).round_max[warmup:]))


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--grid", type=int, default=10, help="grid side length")
    ap.add_argument("--robots", default="1,3,9")
    ap.add_argument("--policies", default="lrv-v,lfv-e")
    ap.add_argument("--horizon", type=int, default=40_000)
    ap.add_argument("--warmup", type=int, default=25_000)
    args = ap.parse_args()

    g = grid_triangulation(args.grid, args.grid).dual
    robot_counts = [int(r) for r in args.robots.split(",")]
    print(f"grid({args.grid},{args.grid}) dual: n={g.n} m={g.m}")

    for name in args.policies.split(","):
        pol = PolicyKind.parse(name)
        pre = run(SimConfig(graph=g, policy=pol, starts=(0,),
                            horizon=args.horizon))
        tour = [e[4] for e in pre.events[-2 * g.m:]]
        single = steady_mean(pre, args.warmup)
        for r in robot_counts:
            if r == 1:
                peak = single
            else:
                starts = tuple(tour[(i * len(tour)) // r] for i in range(r))
                tr = run(SimConfig(graph=g, policy=pol, starts=starts,
                                   horizon=args.horizon))
                peak = steady_mean(tr, args.warmup)
            print(f"{pol.value} r={r}: steady max refresh {peak:8.1f}   "
                  f"n/r={g.n / r:7.1f}   3n/r={3 * g.n / r:7.1f}   "
                  f"speedup {single / peak:5.2f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
