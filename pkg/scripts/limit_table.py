"""Limit estimates for every tree up to a given order, next to the best
closed-form bounds.

    python scripts/limit_table.py --max-order 7 > limits.csv
"""

import argparse
import sys

from wsat.canon import enumerate_trees
from wsat.classify import classify_good
from wsat.formulas import wsat_formulas
from wsat.pattern import Pattern
from wsat.solver import table_csv, wsat_limit_estimate

COLUMNS = ["graph6", "v", "lower", "upper", "estimate", "certified", "stabilized", "n_used", "verdict"]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-order", type=int, default=7)
    ap.add_argument("--threads", type=int, default=1)
    a = ap.parse_args()
    rows = []
    for v in range(3, a.max_order + 1):
        for t in enumerate_trees(v):
            rec = wsat_formulas(t)
            est = wsat_limit_estimate(Pattern(t), threads=a.threads)
            rows.append({
                "graph6": t.to_graph6(), "v": v,
                "lower": rec.lower.value, "upper": rec.upper.value if rec.upper else "",
                "estimate": est.value, "certified": est.certified, "stabilized": est.stabilized,
                "n_used": est.n_used, "verdict": classify_good(t).status,
            })
    sys.stdout.write(table_csv(rows, COLUMNS))


if __name__ == "__main__":
    main()
