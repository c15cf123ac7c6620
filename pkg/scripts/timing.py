#!/usr/bin/env python3
"""Time nu(G) construction for a list of groups in each mode.

    python scripts/timing.py z4xz4 heis27 gdc:2,2,2
"""

import argparse
import time

from tensorsquare import nu as nm
from tensorsquare.catalog import resolve
from tensorsquare.coset_enum import CosetOverflow, ElementCapExceeded

DEFAULT = ["s3", "d4", "q8", "z4xz4", "heis27", "q16", "gdc:2,2,2"]


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("groups", nargs="*", default=DEFAULT)
    ap.add_argument("--modes", default="full,generators")
    args = ap.parse_args()

    nm.nu_image(resolve("z2"))  # compile or load the kernels outside the timings
    print(f"{'group':<12} {'mode':<10} {'|G|':>4} {'|T|':>8} {'|nu|':>9} {'refine':>6} {'seconds':>8}")
    for ref in args.groups:
        G = resolve(ref)
        for mode in args.modes.split(","):
            if mode == "full" and G.order > nm.FULL_MODE_LIMIT:
                print(f"{ref:<12} {mode:<10} {G.order:>4}  (full mode limited to |G| <= {nm.FULL_MODE_LIMIT})")
                continue
            t0 = time.perf_counter()
            try:
                ni = nm.nu_image(G, mode)
            except (CosetOverflow, ElementCapExceeded) as e:
                print(f"{ref:<12} {mode:<10} {G.order:>4}  overflow after {time.perf_counter() - t0:.1f}s: {e}")
                continue
            dt = time.perf_counter() - t0
            print(f"{ref:<12} {mode:<10} {G.order:>4} {ni.T.order:>8} {ni.nu.order:>9} "
                  f"{ni.stats['refinements']:>6} {dt:>8.2f}")


if __name__ == "__main__":
    main()
