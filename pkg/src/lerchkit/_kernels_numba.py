"""Numba-compiled implementations of the hot numeric kernels.

Signatures and semantics match ``_kernels_numpy`` exactly; ``backend`` picks
one set at import time.  Scalar loops here avoid the temporaries the numpy
versions allocate, which is what matters for the 10^6..10^7-term brute force
oracle sums.
"""
from __future__ import annotations

import cmath
import math

import numpy as np
from numba import njit

__all__ = [
    "sum_inv_pow",
    "sum_alt_inv_pow",
    "lerch_sum",
    "lerch_partial_sums",
    "eta_integrand",
    "segment_integrand",
]


@njit(cache=True)
def sum_inv_pow(b: float, s: int, k0: int, k1: int) -> float:
    # descending + Kahan compensation: small terms accumulate first, so the
    # 10^7-term oracle stays at a few ulps instead of sqrt(N)*eps
    total = 0.0
    comp = 0.0
    for k in range(k1 - 1, k0 - 1, -1):
        term = (k + b) ** (-s)
        y = term - comp
        t = total + y
        comp = (t - total) - y
        total = t
    return total


@njit(cache=True)
def sum_alt_inv_pow(b: float, s: int, k0: int, k1: int) -> float:
    total = 0.0
    comp = 0.0
    for k in range(k1 - 1, k0 - 1, -1):
        term = (k + b) ** (-s)
        if k % 2 == 1:
            term = -term
        y = term - comp
        t = total + y
        comp = (t - total) - y
        total = t
    return total


@njit(cache=True)
def lerch_sum(a: complex, b: float, s: int, k0: int, k1: int, p0: complex) -> complex:
    # powers are re-anchored to exp(i k arg a) every chunk so the iterated
    # multiply cannot drift in phase over 10^7 terms
    mag = abs(a)
    ang = math.atan2(a.imag, a.real)
    total = 0j
    comp = 0j  # Kahan compensation; plain accumulation drifts ~sqrt(n) ulp
    p = p0
    for k in range(k0, k1):
        if k > k0 and k % 1048576 == 0:
            p = mag**k * complex(math.cos(ang * k), math.sin(ang * k))
        term = p * (k + b) ** (-s) - comp
        t = total + term
        comp = (t - total) - term
        total = t
        p *= a
    return total


@njit(cache=True)
def lerch_partial_sums(a: complex, b: float, s: int, n: int,
                       k0: int, p0: complex, acc0: complex) -> np.ndarray:
    out = np.empty(n, np.complex128)
    acc = acc0
    p = p0
    for i in range(n):
        k = k0 + i
        acc += p * (k + b) ** (-s)
        out[i] = acc
        p *= a
    return out


@njit(cache=True)
def eta_integrand(t: np.ndarray, a: complex, b: complex, k: int) -> np.ndarray:
    out = np.empty(t.shape[0], np.complex128)
    one_minus_a = 1.0 - a
    bc = complex(b)
    for i in range(t.shape[0]):
        ti = t[i]
        den = one_minus_a - a * math.expm1(-ti)
        out[i] = ti**k * cmath.exp(-bc * ti) / den
    return out


@njit(cache=True)
def segment_integrand(u: np.ndarray, phi: float, b: float, n: int,
                      euler_kind: bool) -> np.ndarray:
    out = np.empty(u.shape[0], np.complex128)
    for i in range(u.shape[0]):
        y = phi * u[i]
        if y == 0.0:
            if euler_kind:
                out[i] = 0.5 if n == 0 else 0.0
            else:
                out[i] = 1.0 if n == 1 else 0.0
            continue
        c = (0.5 - b) * y
        w = complex(math.cos(c), math.sin(c))
        iy_n = (1j * y) ** n
        if euler_kind:
            out[i] = iy_n * w / (2.0 * math.cos(0.5 * y))
        else:
            out[i] = iy_n * w / (2j * math.sin(0.5 * y))
    return out
