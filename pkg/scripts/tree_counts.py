"""Tabulate Schroeder tree counts, quasi-shuffle counts and coproduct sizes."""
import argparse

from tridend import quasishuffle as qs
from tridend.coalgebra import coproduct, iter_prunings
from tridend.treecode import enumerate_trees, little_schroeder


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-degree", type=int, default=6)
    ap.add_argument("--max-shuffle", type=int, default=5)
    args = ap.parse_args()

    print("n  trees  little_schroeder  prunings  coproduct_terms")
    for n in range(args.max_degree + 1):
        trees = enumerate_trees(n)
        prun = sum(sum(1 for _ in iter_prunings(t)) for t in trees)
        terms = sum(len(coproduct(t)) for t in trees) if n <= 5 else "-"
        print(f"{n}  {len(trees):5d}  {little_schroeder(n):16d}  {prun:8d}  {terms!s:>15}")

    m = args.max_shuffle
    print("\nquasi-shuffle counts (rows k, columns l)")
    print("    " + "".join(f"{l:7d}" for l in range(m + 1)))
    for k in range(m + 1):
        print(f"{k:3d} " + "".join(f"{qs.count(k, l):7d}" for l in range(m + 1)))


if __name__ == "__main__":
    main()
