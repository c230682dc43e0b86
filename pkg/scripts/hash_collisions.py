"""Count collisions of the chain-sum tree hash per degree."""
import argparse
from collections import Counter

from tridend.treecode import enumerate_trees, hash_tree


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-degree", type=int, default=7)
    args = ap.parse_args()
    print("n  trees  distinct_hashes  largest_bucket")
    for n in range(args.max_degree + 1):
        buckets = Counter(hash_tree(t) for t in enumerate_trees(n))
        print(f"{n}  {sum(buckets.values()):5d}  {len(buckets):15d}  {max(buckets.values()):14d}")


if __name__ == "__main__":
    main()
