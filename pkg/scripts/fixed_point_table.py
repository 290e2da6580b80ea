"""Vertex counts of the reduction graphs for a range of instance sizes and exponents.

    python scripts/fixed_point_table.py --k 1 2 3 --s 10 16 --c 0 1/8 1/4 --d 0 1
"""

import argparse

from kbalance.numeric import fmt
from kbalance.reductions import solve_count


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--k", type=int, nargs="+", default=[1, 2, 3])
    ap.add_argument("--s", type=int, nargs="+", default=[10, 16])
    ap.add_argument("--c", nargs="+", default=["0", "1/8", "1/4"])
    ap.add_argument("--d", nargs="+", default=["0", "1"])
    args = ap.parse_args()

    print(f"{'family':<13}{'k':>3}{'s':>4}{'c':>6}{'d':>4}  {'n1':>24}  {'u':>16}{'p':>12}{'h':>8}")
    for family in ("grid-fptas", "grid-perfect", "tree"):
        for k in args.k:
            for s in args.s:
                for c in args.c:
                    for d in (["0"] if family == "grid-perfect" else args.d):
                        t = solve_count(family, k, s, c, d)
                        n1 = fmt(t.n1)
                        n1 = n1 if len(n1) <= 24 else n1[:21] + "..."
                        h = "" if t.h is None else t.h
                        print(f"{family:<13}{k:>3}{s:>4}{c:>6}{d:>4}  {n1:>24}  {t.u:>16}{t.p:>12}{h:>8}")


if __name__ == "__main__":
    main()
