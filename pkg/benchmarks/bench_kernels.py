"""Time the compiled and pure-Python kernel backends on the same inputs.

    python benchmarks/bench_kernels.py [--repeat 5] [--n 7]

Each kernel is run on identical data under both backends; the table shows
the best-of-``repeat`` wall time and the speed-up of the compiled core.
"""

import argparse
import time

import numpy as np

from compoundnorms._backend import available_backends
from compoundnorms.compound import subset_table
from compoundnorms.config import DEFAULTS


def best_time(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def cases(n, rng):
    a = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / np.sqrt(2)
    k = n // 2
    rows = subset_table(n, k)
    big = (rng.standard_normal((35, 35)) + 1j * rng.standard_normal((35, 35))) / np.sqrt(2)
    herm = big.conj().T @ big
    return {
        f"minors n={n} k={k}": lambda K: K.minors(a, rows, rows),
        "lu_det 35x35": lambda K: K.lu_det(big),
        "hessenberg+QR 35x35": lambda K: K.hessenberg_eigvals(big, DEFAULTS.deflation, DEFAULTS.qr_sweeps_per_n),
        "jacobi 35x35": lambda K: K.jacobi_eigh(herm, DEFAULTS.jacobi, DEFAULTS.jacobi_max_sweeps),
    }


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=5)
    p.add_argument("--n", type=int, default=7)
    p.add_argument("--seed", type=int, default=0)
    args = p.parse_args(argv)

    backends = available_backends()
    rng = np.random.default_rng(args.seed)
    table = cases(args.n, rng)
    names = sorted(backends)
    print(f"{'kernel':<24}" + "".join(f"{b:>12}" for b in names) + ("     speed-up" if len(names) == 2 else ""))
    for label, fn in table.items():
        times = {b: best_time(lambda: fn(backends[b]), args.repeat) for b in names}
        line = f"{label:<24}" + "".join(f"{times[b] * 1e3:>10.3f}ms" for b in names)
        if "cython" in times and "python" in times:
            line += f"{times['python'] / times['cython']:>12.1f}x"
        print(line)
    if "cython" not in backends:
        print("compiled extension not built; only the python backend was timed")


if __name__ == "__main__":
    main()
