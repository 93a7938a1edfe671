#!/usr/bin/env python3
"""Measure how the last-component peak refresh grows along a chain of
4-cycles and fit a power law to it.

Example:
    python3 scripts/quadratic_growth.py --kmax 12 --policies lfv-v,lrv-e \
        --out growth.csv
"""

import argparse
import csv
import sys

from patrolsim.engine import SimConfig, run
from patrolsim.generators import four_cycle_chain
from patrolsim.metrics import fit_growth, vertex_peak_refresh
from patrolsim.policies import PolicyKind


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--kmin", type=int, default=4)
    ap.add_argument("--kmax", type=int, default=12)
    ap.add_argument("--policies", default="lfv-v,lrv-e")
    ap.add_argument("--horizon-scale", type=int, default=60,
                    help="horizon = scale * k^2")
    ap.add_argument("--out", default="growth.csv")
    args = ap.parse_args()

    policies = [PolicyKind.parse(p) for p in args.policies.split(",")]
    rows = []
    for pol in policies:
        points = []
        for k in range(args.kmin, args.kmax + 1):
            g = four_cycle_chain(k)
            tr = run(SimConfig(graph=g, policy=pol, starts=(0,),
                               horizon=args.horizon_scale * k * k))
            peak = max(vertex_peak_refresh(tr)[4 * (k - 1):])
            points.append((k, peak))
            rows.append((pol.value, k, peak))
            print(f"{pol.value} k={k}: last-component peak {peak}")
        fit = fit_growth(points, "power")
        print(f"{pol.value}: exponent {fit.exponent:.3f}")

    with open(args.out, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["policy", "k", "last_component_peak"])
        w.writerows(rows)
    print(f"wrote {args.out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
