"""Search small vertex counts for a realization the greedy procedure can never output.

Writes the first witness to tests/fixtures/greedy_miss.json.

    python scripts/find_greedy_miss.py [--max-n 5] [--all]
"""

import argparse
import json
import time
from pathlib import Path

from bidegree import realize_greedy
from bidegree.oracle import greedy_misses, oracle_count
from bidegree.realize import greedy_reachable

FIXTURE = Path(__file__).resolve().parent.parent / "tests" / "fixtures" / "greedy_miss.json"


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-n", type=int, default=5)
    parser.add_argument("--all", action="store_true", help="count every witness instead of stopping at the first")
    parser.add_argument("--out", type=Path, default=FIXTURE)
    args = parser.parse_args()

    for n in range(1, args.max_n + 1):
        t0 = time.time()
        found = 0
        first = None
        for bds, g in greedy_misses(n):
            found += 1
            first = first or (bds, g)
            if not args.all:
                break
        print(f"n={n}: {'witnesses' if args.all else 'witness'} found={found} ({time.time() - t0:.1f}s)")
        if first:
            bds, g = first
            record = {
                "n": n,
                "bds": [[v, p.out_deg, p.in_deg] for v, p in bds],
                "arcs": [list(a) for a in g.sorted_arcs()],
                "realizations": oracle_count(bds),
                "greedy_reachable": len(greedy_reachable(bds)),
                "greedy_outputs": {
                    s: [list(a) for a in realize_greedy(bds, s).result.sorted_arcs()] for s in ("max-out", "min-index")
                },
            }
            print(json.dumps(record, indent=2))
            args.out.parent.mkdir(parents=True, exist_ok=True)
            args.out.write_text(json.dumps(record, indent=2) + "\n")
            print(f"wrote {args.out}")
            break


if __name__ == "__main__":
    main()
