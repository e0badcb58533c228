"""Time the numba and numpy kernels on the same inputs.

    python3 benchmarks/bench_kernels.py [--max-n 8] [--repeat 3]

Each row checks that both backends return the same histogram before
reporting the best wall time of each.
"""

import argparse
import os
import time

import numpy as np

from qthook import _kernels
from qthook.combinat import compositions, permutations


def _best(fn, arg, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(arg)
        best = min(best, time.perf_counter() - t0)
    return best, out


def _both(fn, arg, repeat):
    os.environ.pop("QTHOOK_DISABLE_NUMBA", None)
    fn(arg)  # compile outside the timer
    t_nb, h_nb = _best(fn, arg, repeat)
    os.environ["QTHOOK_DISABLE_NUMBA"] = "1"
    try:
        t_np, h_np = _best(fn, arg, repeat)
    finally:
        os.environ.pop("QTHOOK_DISABLE_NUMBA", None)
    if not np.array_equal(h_nb, h_np):
        raise SystemExit("backends disagree")
    return t_nb, t_np


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=8)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    if not _kernels._HAVE_NUMBA:
        raise SystemExit("numba is not importable; nothing to compare")

    print(f"{'kernel':<22}{'n':>3}{'rows':>8}{'numba s':>12}{'numpy s':>12}{'ratio':>8}")
    for n in range(2, args.max_n + 1):
        perms = np.array(list(permutations(n)), dtype=np.int64)
        t_nb, t_np = _both(_kernels.signed_maj_histogram, perms, args.repeat)
        print(f"{'signed_maj_histogram':<22}{n:>3}{len(perms):>8}{t_nb:>12.5f}{t_np:>12.5f}{t_np / t_nb:>8.1f}")
    for n in range(2, args.max_n + 5):
        evals = list(compositions(n))
        t_nb, t_np = _both(_kernels.spack_histogram, evals, args.repeat)
        print(f"{'spack_histogram':<22}{n:>3}{len(evals):>8}{t_nb:>12.5f}{t_np:>12.5f}{t_np / t_nb:>8.1f}")


if __name__ == "__main__":
    main()
