#!/usr/bin/env python3
"""Print graded dimension tables for a line bundle and the line-bundle
subtraction identity over a small (s, t) grid.

Example:
    python scripts/braided_tables.py --n 1 --deg -5 --p 3 --grades 4
"""

import argparse
from fractions import Fraction

from perfproj import (
    PAdicFrac,
    bezout_line,
    enumerate_h0_monomials,
    enumerate_hn_monomials,
    euler,
    h0,
    hn_top,
    line_bundle,
)


def dimension_table(n: int, deg: PAdicFrac, p: int, grades: int) -> None:
    bundle = line_bundle(n, deg, p)
    hd = h0(bundle, grades)
    ht = hn_top(bundle, grades)
    chi = euler(bundle, grades)
    print(f"O({deg}) on P^{n}, p={p}")
    print("power of p | monomials | h0 | hn | chi")
    for label in range(grades):
        if deg.num >= 0 and label >= deg.pexp:
            piece = enumerate_h0_monomials(n, deg.num, label - deg.pexp, p)
        elif deg.num < 0 and label >= deg.pexp:
            piece = enumerate_hn_monomials(n, -deg.num, label - deg.pexp, p)
        else:
            piece = None
        cell = ""
        if piece is not None:
            shown = ["(" + ",".join(str(e.scaled(label)) for e in v) + ")"
                     for v in piece.vectors[:6]]
            if piece.count > 6:
                shown.append("...")
            cell = " ".join(shown)
        print(f"{label} | {cell} | {hd.at(label)} | {ht.at(label)} | {chi.at(label)}")


def bezout_grid(p: int, grades: int) -> None:
    print(f"\nhn(-s-t) - hn(-s) - hn(-t) per grade, p={p}")
    for s in range(1, 5):
        row = []
        for t in range(1, 5):
            values = bezout_line(s, t, grades, p).grades_list()
            row.append("".join(str(v) for v in values))
        print(f"s={s}: " + "  ".join(row))


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=1)
    ap.add_argument("--deg", type=Fraction, default=Fraction(2))
    ap.add_argument("--p", type=int, default=3)
    ap.add_argument("--grades", type=int, default=4)
    args = ap.parse_args()
    deg = PAdicFrac.from_fraction(args.deg, args.p)
    dimension_table(args.n, deg, args.p, args.grades)
    bezout_grid(args.p, args.grades)


if __name__ == "__main__":
    main()
