"""Compute primitive bases up to a degree and print their dimensions.

    python scripts/run_primitives.py --max-degree 5 --cache out/ --check-kernel 4
"""
import argparse
import logging
import time
from pathlib import Path

from tridend.primitives import PipelineConfig


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-degree", type=int, default=4)
    ap.add_argument("--cache", type=Path, default=None)
    ap.add_argument("--check-kernel", type=int, default=4,
                    help="compare the span with the kernel of the reduced coproduct up to this degree")
    ap.add_argument("-v", "--verbose", action="store_true")
    args = ap.parse_args()
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(asctime)s %(name)s %(message)s")
    cfg = PipelineConfig(max_degree=args.max_degree, cache_dir=args.cache,
                         check_kernel_up_to=args.check_kernel)
    t0 = time.perf_counter()
    basis = cfg.run()
    dt = time.perf_counter() - t0
    print("degree  dimension")
    for n, d in enumerate(basis.dimensions(), start=1):
        print(f"{n:6d}  {d:9d}")
    print(f"elapsed {dt:.2f}s")


if __name__ == "__main__":
    main()
