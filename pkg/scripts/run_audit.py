#!/usr/bin/env python3
"""Run the claim sweep and print a per-claim pass/fail/skipped table.

    python3 scripts/run_audit.py --dmax 8 --report audit.json
"""
import argparse
import json
from collections import Counter, defaultdict

from polyforge.audit import CLAIMS, SweepConfig, audit


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--dmax", type=int, default=8)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--samples", type=int, default=100)
    ap.add_argument("--checks", default="all")
    ap.add_argument("--iso-cross-check", action="store_true")
    ap.add_argument("--report")
    args = ap.parse_args()

    cfg = SweepConfig(dmax=args.dmax, checks=args.checks, seed=args.seed, samples=args.samples,
                      iso_cross_check=args.iso_cross_check, timing=False)
    result = audit(cfg)
    per = defaultdict(Counter)
    first_fail = {}
    for r in result["reports"]:
        per[r["claim_id"]][r["status"]] += 1
        if r["status"] == "fail":
            first_fail.setdefault(r["claim_id"], r)

    print(f"{'claim':20s} {'pass':>6s} {'fail':>6s} {'skip':>6s}")
    for cid in CLAIMS:
        if cid in per:
            c = per[cid]
            print(f"{cid:20s} {c['pass']:6d} {c['fail']:6d} {c['skipped']:6d}")
    for cid, r in first_fail.items():
        print(f"\nfirst failure of {cid}: params={r['params']} "
              f"expected={r['expected']} actual={r['actual']}")
    if args.report:
        with open(args.report, "w") as fh:
            json.dump(result, fh, indent=1, default=str)
    return 1 if result["summary"]["fail"] else 0


if __name__ == "__main__":
    raise SystemExit(main())
