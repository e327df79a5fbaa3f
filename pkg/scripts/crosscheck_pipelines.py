#!/usr/bin/env python3
"""Stress the agreement between the two Alexander pipelines.

Generates random sign-pure (homogeneous) braid words with knot closure
and compares the Burau determinant route against the Seifert matrix of
the Bennequin surface, up to units.  Any mismatch would mean the brick
sign table and the Burau conventions have drifted apart, so this script
is the fast regression alarm for convention changes.

    python scripts/crosscheck_pipelines.py --count 200 --seed 7
"""

import argparse
import random
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from braidkit.braid import BraidWord, closure_components, format_braid_text
from braidkit.invariants import (
    alexander_from_burau,
    alexander_from_seifert,
    brick_seifert,
)


def random_homogeneous_knot(rng, max_strands, max_len):
    while True:
        strands = rng.randint(2, max_strands)
        signs = [rng.choice((1, -1)) for _ in range(strands - 1)]
        length = rng.randint(strands - 1, max_len)
        body = [rng.randint(1, strands - 1) for _ in range(length)]
        body += list(range(1, strands))  # every column occupied
        rng.shuffle(body)
        word = BraidWord(strands, tuple(signs[i - 1] * i for i in body))
        if closure_components(word) == 1:
            return word


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=100)
    ap.add_argument("--seed", type=int, default=7)
    ap.add_argument("--max-strands", type=int, default=5)
    ap.add_argument("--max-len", type=int, default=14)
    ap.add_argument(
        "--verbose", action="store_true", help="print every word checked"
    )
    args = ap.parse_args()

    rng = random.Random(args.seed)
    mismatches = 0
    for index in range(args.count):
        word = random_homogeneous_knot(rng, args.max_strands, args.max_len)
        via_burau = alexander_from_burau(word)
        via_seifert = alexander_from_seifert(brick_seifert(word))
        agree = via_burau.equals_up_to_units(via_seifert)
        if args.verbose or not agree:
            flag = "ok" if agree else "MISMATCH"
            print(
                f"{index:4d} {flag:8s} {format_braid_text(word):40s} "
                f"burau={via_burau.to_text()} seifert={via_seifert.to_text()}"
            )
        if not agree:
            mismatches += 1

    print(f"{args.count} words, {mismatches} mismatches (seed {args.seed})")
    return 1 if mismatches else 0


if __name__ == "__main__":
    raise SystemExit(main())
