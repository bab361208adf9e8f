#!/usr/bin/env python3
"""Sweep the continuous eigenvector family under the order-8 stabilizer and print the residual profile."""

import argparse

import numpy as np

from quatrefl import catalog as C
from quatrefl.floatcheck import LIMIT, SweepConfig, family_residual, group_f, sweep


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--grid", type=int, default=SweepConfig.grid)
    ap.add_argument("--tol", type=float, default=SweepConfig.tol)
    ap.add_argument("--show", type=int, default=11, help="number of sample points to print")
    args = ap.parse_args()

    H = C.group("G8_family")
    res = sweep(H, SweepConfig(args.grid, args.tol))
    print(f"grid={res.grid} max residual={res.max_residual:.3e} at t={res.worst_t:+.6f} "
          f"({'PASS' if res.passed else 'FAIL'} at tol {res.tol:g})")

    elems = group_f(H)
    others = group_f(C.group("P1"))
    print(f"{'t':>10} {'residual(+)':>12} {'residual(-)':>12} {'under P1':>10}")
    for t in np.linspace(-LIMIT, LIMIT, args.show):
        print(f"{t:+10.6f} {family_residual(elems, t, 1):12.2e} {family_residual(elems, t, -1):12.2e} "
              f"{family_residual(others, t, 1):10.3f}")


if __name__ == "__main__":
    main()
