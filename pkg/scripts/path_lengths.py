"""Swap-path length statistics against the 2e bound over all same-sequence pairs at small n.

    python scripts/path_lengths.py [--n 4] [--trim]
"""

import argparse
import itertools
from collections import Counter

from bidegree import swap_path
from bidegree.oracle import catalog, decode


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, default=4)
    parser.add_argument("--trim", action="store_true")
    args = parser.parse_args()

    ratios = Counter()
    worst = 0.0
    pairs = 0
    for masks in catalog(args.n).values():
        graphs = [decode(int(m), args.n) for m in masks]
        for g1, g2 in itertools.combinations(graphs, 2):
            e = len(g1.arcs)
            r = len(swap_path(g1, g2, trimmed=args.trim)) / (2 * e)
            ratios[round(r, 1)] += 1
            worst = max(worst, r)
            pairs += 1
    print(f"n={args.n} pairs={pairs} worst length/2e={worst:.3f}")
    for r in sorted(ratios):
        print(f"  {r:.1f}: {ratios[r]}")


if __name__ == "__main__":
    main()
