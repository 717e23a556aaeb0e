"""Wall-clock scaling of the transfer-matrix product stage.

Runs the dyadic NLFT product on dense random windows of doubling size and
prints the timing table plus the fitted log-log exponent.  The product is
dominated by FFT polynomial multiplications along a balanced tree, so the
exponent should sit near 1 (linear up to polylog factors).

Usage: python scripts/bench_nlft.py [--sizes 256,1024,4096] [--seed 7]
"""

from __future__ import annotations

import argparse
import math
import time

import numpy as np

from al_ist.datagen import dense_random_sequence
from al_ist.nlft import nlft_forward


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", default="256,1024,4096")
    parser.add_argument("--seed", type=int, default=7)
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()

    sizes = [int(s) for s in args.sizes.split(",")]
    print(f"{'N':>8}  {'seconds':>12}")
    points = []
    for size in sizes:
        datum = dense_random_sequence(args.seed + size, 0, size, 0.5)
        best = math.inf
        for _ in range(args.repeats):
            start = time.perf_counter()
            nlft_forward(datum)
            best = min(best, time.perf_counter() - start)
        points.append((math.log(size), math.log(best)))
        print(f"{size:>8}  {best:>12.6f}")
    slope = np.polyfit([x for x, _ in points], [y for _, y in points], 1)[0]
    print(f"fitted exponent: {slope:.3f}")


if __name__ == "__main__":
    main()
