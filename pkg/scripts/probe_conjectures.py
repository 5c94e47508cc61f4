#!/usr/bin/env python3
"""Probe the conjectured distance bounds for the n = 8j+2 and 8j+6
families against the brute-force search at increasing grid resolutions.

For each n the claimed closed-form bound is compared with the refined
search minimum; a positive gap means the search could not beat the bound
(the construction looks optimal), a clearly negative gap would refute
sharpness.  Output is a plain text table.

Usage:
    python scripts/probe_conjectures.py [--n 10,14,18,22,26] [--grids 240,360,720]
"""

from __future__ import annotations

import argparse
import time

from bmgon import bm_distance, regular_polygon, theorem2_value


def parse_int_list(text: str) -> list[int]:
    return [int(tok) for tok in text.split(",") if tok.strip()]


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=parse_int_list, default=[10, 14, 18, 22, 26])
    parser.add_argument("--grids", type=parse_int_list, default=[240, 360, 720])
    args = parser.parse_args()

    conjectured = [n for n in args.n if theorem2_value(n).kind == "upper_bound"]
    skipped = sorted(set(args.n) - set(conjectured))
    if skipped:
        print(f"skipping n with proven values: {skipped}")

    header = f"{'n':>4} {'family':>6} {'claimed':>20}"
    for grid in args.grids:
        header += f" {'gap@' + str(grid):>14}"
    header += f" {'seconds':>8}"
    print(header)
    print("-" * len(header))

    for n in conjectured:
        family = theorem2_value(n)
        line = f"{n:>4} {family.family:>6} {family.value:>20.15f}"
        start = time.perf_counter()
        for grid in args.grids:
            lam = bm_distance(regular_polygon(n), grid=grid).lam
            line += f" {family.value - lam:>14.3e}"
        line += f" {time.perf_counter() - start:>8.2f}"
        print(line)

    print()
    print(
        "gap = claimed - search minimum; values near +0 support the "
        "conjectured bounds (evidence, not proof)."
    )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
