"""Compare the compiled search kernel against the pure-Python reference.

Runs the same whole-range search through both implementations, checks they
return identical survivors and counters, and reports best-of-N wall times.

    python3 benchmarks/bench_kernel.py
    python3 benchmarks/bench_kernel.py --cells 3,4,3 2,5,4 --repeat 5
"""

import argparse
import time

from circlefp.enumeration import candidate_space_size, point_alphabet
from circlefp import _kernel
from circlefp import _core_py

DEFAULT_CELLS = [(2, 4, 3), (3, 3, 3), (3, 4, 2), (2, 5, 3), (3, 4, 3), (2, 8, 3)]
FLAGS = (True, True, True, True)  # all filters on, effectiveness on


def run(kernel, n, k, w, flat, p, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = kernel(n, k, w, flat, 0, p, *FLAGS)
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument(
        "--cells",
        nargs="+",
        default=["%d,%d,%d" % c for c in DEFAULT_CELLS],
        help="search cells as n,k,max_weight triples",
    )
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    if _kernel._compiled is None:
        print("compiled kernel not available; nothing to compare")
        return

    print(f"{'cell':>12} {'candidates':>14} {'python':>10} {'cython':>10} {'speedup':>8}")
    for cell in args.cells:
        n, k, w = (int(part) for part in cell.split(","))
        points = point_alphabet(n, w)
        flat = [v for pt in points for v in pt]
        space = candidate_space_size(n, k, w)
        t_py, r_py = run(_core_py.search_chunk, n, k, w, flat, len(points), args.repeat)
        t_cy, r_cy = run(
            _kernel._compiled.search_chunk, n, k, w, flat, len(points), args.repeat
        )
        assert r_py[0] == r_cy[0] and tuple(r_py[1]) == tuple(r_cy[1]), cell
        print(
            f"{cell:>12} {space:>14,} {t_py:>9.3f}s {t_cy:>9.3f}s {t_py / t_cy:>7.1f}x"
        )
    print("outputs identical across kernels for every cell")


if __name__ == "__main__":
    main()
