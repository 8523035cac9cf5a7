"""Empirical uniformity of the swap chain on small sequences.

    python scripts/sampler_uniformity.py [--steps 100000] [--thinning 10] [--seeds 0 1 2]

Prints one TV distance per (sequence, seed), plus per-realization visit counts with --counts.
"""

import argparse
import time
from collections import Counter

from bidegree import BiDegreeSequence, ChainConfig, empirical_tv, realize_greedy, run_chain
from bidegree.oracle import oracle_realizations

DEFAULT_SEQUENCES = {
    "(1,1)^3": [(1, 1)] * 3,
    "(1,1)^4": [(1, 1)] * 4,
    "(2,2)^4": [(2, 2)] * 4,
    "(1,1)^5": [(1, 1)] * 5,
}


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--steps", type=int, default=100_000)
    parser.add_argument("--thinning", type=int, default=10)
    parser.add_argument("--seeds", type=int, nargs="+", default=[0, 1, 2])
    parser.add_argument("--pair-prob", type=float, default=0.5)
    parser.add_argument("--counts", action="store_true")
    args = parser.parse_args()

    for name, pairs in DEFAULT_SEQUENCES.items():
        bds = BiDegreeSequence.from_pairs(pairs)
        support = oracle_realizations(bds)
        g0 = realize_greedy(bds).result
        for seed in args.seeds:
            t0 = time.perf_counter()
            samples = run_chain(g0, ChainConfig(args.steps, seed, args.pair_prob, args.thinning))
            tv = empirical_tv(samples, support)
            print(f"{name:10s} |R|={len(support):3d} seed={seed} tv={tv:.4f} ({time.perf_counter() - t0:.1f}s)")
            if args.counts:
                counts = Counter(g.key() for g in samples)
                print("   ", sorted(counts.get(g.key(), 0) for g in support))


if __name__ == "__main__":
    main()
