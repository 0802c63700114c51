"""Time the numba and numpy kernel backends on the same inputs.

    python benchmarks/bench_kernels.py [--n 6] [--repeat 3]

Each kernel runs once untimed per backend (numba compiles or loads its cache
then), followed by ``--repeat`` timed runs; the best run is reported.
"""

from __future__ import annotations

import argparse
import time

from chiforge import kernels
from chiforge._accel import HAVE_NUMBA
from chiforge.generators import class_masks, pattern_table
from chiforge.patterns import CATALOG, PatternId


def best_of(fn, repeat: int) -> float:
    fn()
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=6)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    n = args.n

    all_masks = class_masks(n)
    free = class_masks(n, "2k2")
    gem = PatternId.GEM
    cases = {
        f"contains_pattern gem, all {len(all_masks)} graphs on n={n}": lambda b: kernels.contains_pattern(
            all_masks, n, CATALOG[gem][0], pattern_table(gem), backend=b
        ),
        f"subset_chi_omega, {len(free)} 2K2-free graphs on n={n}": lambda b: kernels.subset_chi_omega(
            free, n, backend=b
        ),
        f"extend_free 2K2, {len(free)} graphs n={n} -> n={n + 1}": lambda b: kernels.extend_free(
            free, n, 4, pattern_table(PatternId.TWO_K2), backend=b
        ),
    }
    backends = ["numba", "numpy"] if HAVE_NUMBA else ["numpy"]
    print(f"{'kernel':<58} " + " ".join(f"{b:>10}" for b in backends) + "   speedup")
    for name, fn in cases.items():
        secs = [best_of(lambda b=b: fn(b), args.repeat) for b in backends]
        speed = f"{secs[1] / secs[0]:8.1f}x" if len(secs) == 2 and secs[0] > 0 else "      n/a"
        print(f"{name:<58} " + " ".join(f"{s * 1e3:8.1f}ms" for s in secs) + f"  {speed}")


if __name__ == "__main__":
    main()
