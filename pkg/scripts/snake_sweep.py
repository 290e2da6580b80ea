"""Snake partition cut versus the (k-1)(min(W,H)+1) bound on full rectangles.

    python scripts/snake_sweep.py --max-side 30 --max-k 8
"""

import argparse

from kbalance.core import GridGraph
from kbalance.solvers import snake_partition


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-side", type=int, default=30)
    ap.add_argument("--max-k", type=int, default=8)
    args = ap.parse_args()

    print(f"{'k':>3}{'cases':>8}{'violations':>12}{'max cut/bound':>16}")
    for k in range(2, args.max_k + 1):
        cases = violations = 0
        worst = 0.0
        for w in range(1, args.max_side + 1):
            for h in range(1, args.max_side + 1):
                if k > w * h:
                    continue
                res = snake_partition(GridGraph.rectangle(w, h), k)
                bound = (k - 1) * (min(w, h) + 1)
                sizes = res.partition.part_sizes
                cases += 1
                violations += res.cut > bound or max(sizes) - min(sizes) > 1
                worst = max(worst, res.cut / bound)
        print(f"{k:>3}{cases:>8}{violations:>12}{worst:>16.3f}")


if __name__ == "__main__":
    main()
