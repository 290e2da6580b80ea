"""Most vertices a budget of B edges can split off a full W x H rectangle, against floor(B^2/4).

    python scripts/corner_cut_sweep.py --max-side 7 --max-budget 5
"""

import argparse
import time

from kbalance.cornercut import corner_cut_oracle


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-side", type=int, default=7)
    ap.add_argument("--max-budget", type=int, default=5)
    args = ap.parse_args()

    for b in range(args.max_budget + 1):
        start = time.perf_counter()
        values = {}
        for w in range(b + 1, args.max_side + 1):
            for h in range(w, args.max_side + 1):
                values[(w, h)] = corner_cut_oracle(w, h, b)
        bound = b * b // 4
        worst = max(values.values(), default=None)
        status = "ok" if all(v == bound for v in values.values()) else "MISMATCH"
        print(f"B={b}: floor(B^2/4)={bound}, max over {len(values)} rectangles = {worst} "
              f"[{status}] ({time.perf_counter() - start:.1f} s)")
        for (w, h), v in sorted(values.items()):
            if v != bound:
                print(f"    {w}x{h}: {v}")


if __name__ == "__main__":
    main()
