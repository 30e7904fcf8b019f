#!/usr/bin/env python3
"""Benchmark the compiled kernels against the NumPy fallback.

Run as ``python benchmarks/bench_kernels.py``.  Shapes cover the workloads
that dominate sweeps: a handful of components evaluated over grids of a few
thousand points, many times over.
"""

import time

import numpy as np

from posys._kernels import _numpy as np_backend

try:
    from posys._kernels import _core as c_backend
except ImportError:
    c_backend = None

KERNELS = ("po_sf", "series_log_sf", "series_hazard_factor",
           "parallel_log_cdf", "parallel_rhr_factor")
SHAPES = ((3, 500), (6, 2000), (10, 2000), (6, 20000))
REPEATS = 200


def _args(kernel, n, m, rng):
    lams = rng.uniform(0.2, 6.0, size=n)
    sbar = np.exp(-np.geomspace(1e-3, 40.0, m))
    if kernel == "po_sf":
        return (float(lams[0]), sbar)
    return (lams, sbar)


def _time(fn, args):
    best = float("inf")
    for _ in range(5):
        t0 = time.perf_counter()
        for _ in range(REPEATS):
            fn(*args)
        best = min(best, (time.perf_counter() - t0) / REPEATS)
    return best


def main():
    rng = np.random.default_rng(0)
    if c_backend is None:
        print("compiled backend unavailable; benchmarking NumPy fallback only")
    header = f"{'kernel':<22}{'shape':>12}{'numpy':>12}"
    if c_backend is not None:
        header += f"{'compiled':>12}{'speedup':>10}"
    print(header)
    for kernel in KERNELS:
        for n, m in SHAPES:
            args = _args(kernel, n, m, rng)
            t_np = _time(getattr(np_backend, kernel), args)
            line = f"{kernel:<22}{f'{n}x{m}':>12}{t_np * 1e6:>10.1f}us"
            if c_backend is not None:
                t_c = _time(getattr(c_backend, kernel), args)
                line += f"{t_c * 1e6:>10.1f}us{t_np / t_c:>10.2f}x"
            print(line)


if __name__ == "__main__":
    main()
