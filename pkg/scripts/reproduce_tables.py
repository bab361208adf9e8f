#!/usr/bin/env python3
"""Recompute Tables 1-3 and write the text reports to a directory (default: ./reports)."""

import argparse
import os
import sys

from quatrefl.cli import main as cli_main


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default="reports")
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    os.makedirs(args.out, exist_ok=True)
    worst = 0
    for n in ("1", "2", "3"):
        path = os.path.join(args.out, f"table{n}.{'json' if args.json else 'txt'}")
        with open(path, "w") as fh:
            stdout, sys.stdout = sys.stdout, fh
            try:
                code = cli_main(["table", n] + (["--json"] if args.json else []))
            finally:
                sys.stdout = stdout
        print(f"table {n}: exit {code} -> {path}")
        worst = max(worst, code)
    return worst


if __name__ == "__main__":
    sys.exit(main())
