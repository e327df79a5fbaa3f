#!/usr/bin/env python3
"""Run every registered verification over a genus range and summarize.

Typical use:

    python scripts/verify_all.py --genus 1 --max-genus 4 --power 0
    python scripts/verify_all.py --genus 2 --json out.json

Checks that only exist at genus 2 are skipped elsewhere, and the growth
check is skipped at genus 1 where the family does not depend on the
power; both are reported as skips rather than counted against the run.
Exit code follows the check contract: 0 all verified, 1 any error or
refutation, 2 inconclusive.
"""

import argparse
import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from braidkit.checks import check_names, exit_code_for, run_check
from braidkit.report import build_report, canonical_json

GENUS_TWO_ONLY = {"homology-invariance", "alexander-module"}
# constant family at genus 1, nothing to measure
NEEDS_STIRRING = {"growth-proxy"}


def _applicable(name: str, genus: int) -> bool:
    if genus != 2 and name in GENUS_TWO_ONLY:
        return False
    if genus == 1 and name in NEEDS_STIRRING:
        return False
    return True


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--genus", type=int, default=2, help="first genus")
    ap.add_argument(
        "--max-genus", type=int, default=None, help="last genus (inclusive)"
    )
    ap.add_argument("--power", type=int, default=0)
    ap.add_argument(
        "--variant", choices=("original", "enhanced"), default="original"
    )
    ap.add_argument(
        "--fixture",
        action="store_true",
        help="allow the fixture stirring word for enhanced genus != 2",
    )
    ap.add_argument("--json", metavar="PATH", help="write the full report")
    args = ap.parse_args()

    last = args.max_genus if args.max_genus is not None else args.genus
    records = []
    skipped = 0
    for genus in range(args.genus, last + 1):
        for name in check_names():
            if not _applicable(name, genus):
                skipped += 1
                continue
            params = {
                "genus": genus,
                "power": args.power,
                "variant": args.variant,
            }
            if args.fixture:
                params["phi_fixture"] = True
            record = run_check(name, params)
            records.append(record)
            status = record["status"]
            extra = record.get("message", "")
            print(f"g={genus} {name:22s} {status:12s} {extra}")

    counts = {}
    for record in records:
        counts[record["status"]] = counts.get(record["status"], 0) + 1
    summary = " ".join(f"{k}={v}" for k, v in sorted(counts.items()))
    print(f"\n{len(records)} checks: {summary}; skipped {skipped} off-genus")

    if args.json:
        document = build_report(records)
        Path(args.json).write_text(canonical_json(document), encoding="utf-8")
        print(f"report -> {args.json}")
    return exit_code_for(records)


if __name__ == "__main__":
    raise SystemExit(main())
