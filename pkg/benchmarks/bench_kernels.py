#!/usr/bin/env python3
"""Benchmark the numba kernels against the pure-numpy fallback.

Both implementations are imported directly (side-stepping the
``LERCHKIT_BACKEND`` selection) so one process can time them head to head.
Each kernel is first checked for agreement between the two backends, then
timed on the workloads that dominate the verification suite and the brute
force oracles.

Usage:
    python3 benchmarks/bench_kernels.py [--repeats N] [--quick]
"""
from __future__ import annotations

import argparse
import math
import time

import numpy as np

from lerchkit import _kernels_numpy as knp

try:
    from lerchkit import _kernels_numba as knb
except ImportError:  # pragma: no cover - numba missing in this environment
    knb = None


def _time(fn, repeats: int) -> float:
    best = math.inf
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def _cases(quick: bool):
    n_big = 1 << 20 if quick else 1 << 23
    n_partial = 1 << 14 if quick else 1 << 17
    n_grid = 1 << 14 if quick else 1 << 17
    t = np.linspace(1e-6, 40.0, n_grid)
    u = np.linspace(0.0, 1.0, n_grid)
    a = complex(math.cos(2.0), math.sin(2.0))
    return [
        ("sum_inv_pow", f"{n_big:.1e} terms",
         lambda k: k.sum_inv_pow(0.25, 2, 1, n_big)),
        ("sum_alt_inv_pow", f"{n_big:.1e} terms",
         lambda k: k.sum_alt_inv_pow(0.25, 2, 1, n_big)),
        ("lerch_sum", f"{n_big:.1e} terms",
         lambda k: k.lerch_sum(a, 0.5, 2, 0, n_big, 1.0 + 0.0j)),
        ("lerch_partial_sums", f"{n_partial:.1e} terms",
         lambda k: k.lerch_partial_sums(a, 0.5, 3, n_partial, 0, 1.0 + 0.0j, 0j)),
        ("eta_integrand", f"{n_grid:.1e} points",
         lambda k: k.eta_integrand(t, -0.7 + 0.4j, 0.75, 3)),
        ("segment_integrand", f"{n_grid:.1e} points",
         lambda k: k.segment_integrand(u, 2.0, 0.25, 2, True)),
    ]


def _agree(x, y) -> float:
    x = np.asarray(x, dtype=np.complex128).ravel()
    y = np.asarray(y, dtype=np.complex128).ravel()
    scale = max(1.0, float(np.max(np.abs(x))))
    return float(np.max(np.abs(x - y))) / scale


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeats", type=int, default=3,
                    help="timing repeats per kernel; best-of is reported")
    ap.add_argument("--quick", action="store_true",
                    help="use smaller workloads (CI-sized)")
    args = ap.parse_args()

    cases = _cases(args.quick)
    if knb is None:
        print("numba unavailable; timing the numpy fallback only\n")
    else:
        print("warming up the numba kernels (jit compile) ...")
        for _, _, call in _cases(quick=True):
            call(knb)
        print()

    header = (f"{'kernel':20s} {'workload':>14s} {'numpy':>10s} "
              f"{'numba':>10s} {'speedup':>8s} {'max rel diff':>13s}")
    print(header)
    print("-" * len(header))
    for name, size, call in cases:
        t_np = _time(lambda: call(knp), args.repeats)
        if knb is None:
            print(f"{name:20s} {size:>14s} {t_np*1e3:9.2f}ms {'-':>10s} "
                  f"{'-':>8s} {'-':>13s}")
            continue
        t_nb = _time(lambda: call(knb), args.repeats)
        diff = _agree(call(knp), call(knb))
        print(f"{name:20s} {size:>14s} {t_np*1e3:9.2f}ms {t_nb*1e3:9.2f}ms "
              f"{t_np/t_nb:7.1f}x {diff:13.2e}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
