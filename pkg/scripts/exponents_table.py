"""Exponent-family table: w-sat(T_k) and its ratio to k^alpha.

    python scripts/exponents_table.py                 # CSV to stdout
    python scripts/exponents_table.py --golden tests/golden
"""

import argparse
import json
import math
import sys
from pathlib import Path

from wsat.classify import EXPONENT_COLUMNS, exponents_rows
from wsat.solver import table_csv


def bounds(rows):
    out = {}
    for alpha in sorted({r["alpha"] for r in rows}, key=float):
        ratios = [float(r["ratio"]) for r in rows if r["alpha"] == alpha]
        out[alpha] = {"c1": math.floor(min(ratios) * 1000) / 1000,
                      "c2": math.ceil(max(ratios) * 1000) / 1000}
    return out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--k-max", type=int, default=40)
    ap.add_argument("--alphas", default="1,1.5,2")
    ap.add_argument("--golden", type=Path, help="write exponents.csv and exponents_bounds.json here")
    a = ap.parse_args()
    rows = exponents_rows(tuple(float(x) for x in a.alphas.split(",")), a.k_max)
    text = table_csv(rows, EXPONENT_COLUMNS)
    if a.golden is None:
        sys.stdout.write(text)
        return
    a.golden.mkdir(parents=True, exist_ok=True)
    (a.golden / "exponents.csv").write_text(text)
    (a.golden / "exponents_bounds.json").write_text(json.dumps(bounds(rows), indent=2) + "\n")


if __name__ == "__main__":
    main()
