"""Run every reproduction claim and write one JSON and one CSV per claim.

    python scripts/reproduce_all.py --out results/
"""

import argparse
import json
import time
from pathlib import Path

from wsat.classify import CLAIMS, reproduce


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", type=Path, default=Path("results"))
    ap.add_argument("--only", nargs="*", default=None)
    a = ap.parse_args()
    a.out.mkdir(parents=True, exist_ok=True)
    summary = {}
    for claim in a.only or CLAIMS:
        t0 = time.perf_counter()
        rep = reproduce(claim)
        dt = time.perf_counter() - t0
        csv_text = rep.stats.pop("csv", None)
        (a.out / f"{claim}.json").write_text(rep.to_json() + "\n")
        (a.out / f"{claim}.csv").write_text(csv_text or rep.to_csv())
        bad = [r.instance for r in rep.rows if not r.agree]
        summary[claim] = {"ok": rep.ok, "rows": len(rep.rows), "disagreements": bad}
        print(f"{'ok ' if rep.ok else 'BAD'} {claim:15s} rows={len(rep.rows):3d} "
              f"disagree={len(bad)} {dt:6.1f}s")
    (a.out / "summary.json").write_text(json.dumps(summary, indent=2) + "\n")


if __name__ == "__main__":
    main()
