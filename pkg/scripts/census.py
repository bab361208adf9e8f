#!/usr/bin/env python3
"""Reflection census of each type-P group (and any extra catalog groups named on the command line)."""

import argparse
from collections import Counter

from quatrefl import catalog as C
from quatrefl.reflections import monomial_subgroup, reflection_census, reflection_type


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("groups", nargs="*", default=["K", "P0", "P1", "P2", "P3"])
    args = ap.parse_args()
    print(f"{'group':<8} {'order':>6} {'refl':>5} {'orders':<18} {'|G_M|':>6}  type")
    for name in args.groups:
        G = C.group(name)
        census = reflection_census(G)
        orders = Counter(r.order for r in census)
        GM = monomial_subgroup(G)
        print(f"{name:<8} {G.order:>6} {len(census):>5} {str(dict(sorted(orders.items()))):<18} {GM.order:>6}  "
              f"{reflection_type(G, census)}")


if __name__ == "__main__":
    main()
