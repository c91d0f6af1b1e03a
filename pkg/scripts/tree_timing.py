"""Time Hall-tree enumeration by depth and worker count.

    python scripts/tree_timing.py --max-depth 11 --jobs 1 2 4
"""
import argparse
import time

from pythspin import hall


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-depth", type=int, default=10)
    ap.add_argument("--jobs", type=int, nargs="+", default=[1, 2, 4])
    args = ap.parse_args()
    print(f"{'depth':>5} {'nodes':>8} " + " ".join(f"{'j=' + str(j):>9}" for j in args.jobs))
    for d in range(args.max_depth - 3, args.max_depth + 1):
        times, reference = [], None
        for j in args.jobs:
            t0 = time.perf_counter()
            nodes = hall.enumerate_triples(depth=d, workers=j)
            times.append(time.perf_counter() - t0)
            if reference is None:
                reference = nodes
            assert nodes == reference, "worker count changed the output"
        print(f"{d:>5} {len(reference):>8} " + " ".join(f"{t:>8.3f}s" for t in times))


if __name__ == "__main__":
    main()
