#!/usr/bin/env python3
"""Emit the full editing-efficiency comparison as CSV.

Covers the six built-in benchmark ontologies across all scenario
permutations, with per-axiom-type rows and session totals with/without
reasoner time.  Output is plot-ready CSV.

Usage:
    python scripts/efficiency_sweep.py [--out sweep.csv] [--params extra.csv]
"""
import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from ontotdd.efficiency import SCENARIOS, TABLE1, load_params_csv, sweep


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default="-", help="output path, '-' for stdout")
    parser.add_argument("--params", help="extra ontologies: CSV with name,tclassify,aC,bC,aOP,bOP,c")
    args = parser.parse_args()

    params = list(TABLE1)
    if args.params:
        params.extend(load_params_csv(Path(args.params).read_text()))
    text = sweep(params, SCENARIOS, per_type=True)
    if args.out == "-":
        sys.stdout.write(text)
    else:
        Path(args.out).write_text(text)
        print(f"wrote {args.out}", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
