#!/usr/bin/env python3
"""Run every verification campaign and write the report files.

Equivalent to ``mzvkit verify all`` but convenient to tweak as a script.
"""

import argparse
import sys

from mzvkit.verification import CampaignConfig, run_all


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default="reports", help="report directory (default: ./reports)")
    parser.add_argument("--max-weight", type=int, default=3)
    parser.add_argument("--seed", type=int, default=20240801)
    parser.add_argument("--workers", type=int, default=1)
    args = parser.parse_args()

    cfg = CampaignConfig(
        max_weight=args.max_weight,
        seed=args.seed,
        workers=args.workers,
        out_dir=args.out,
    )
    reports, status = run_all(cfg, echo=print)
    print(f"\n{len(reports)} reports written to {args.out}; overall: "
          f"{'PASS' if status == 0 else 'FAIL'}")
    return status


if __name__ == "__main__":
    sys.exit(main())
