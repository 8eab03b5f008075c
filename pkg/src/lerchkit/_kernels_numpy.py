"""Pure-numpy implementations of the hot numeric kernels.

Same signatures and semantics as the numba twins in ``_kernels_numba``; the
active set is chosen in ``backend``.  Large sums are chunked so the brute
force oracles can run to 10^7 terms without allocating 100+ MB at once.
"""
from __future__ import annotations

import math

import numpy as np

__all__ = [
    "sum_inv_pow",
    "sum_alt_inv_pow",
    "lerch_sum",
    "lerch_partial_sums",
    "eta_integrand",
    "segment_integrand",
]

_CHUNK = 1 << 20


def sum_inv_pow(b: float, s: int, k0: int, k1: int) -> float:
    """sum_{k=k0}^{k1-1} (k + b)^(-s); chunks are summed small-terms-first."""
    totals = []
    for lo in range(k0, k1, _CHUNK):
        hi = min(lo + _CHUNK, k1)
        k = np.arange(lo, hi, dtype=np.float64)
        totals.append(np.sum((k + b) ** (-float(s))))
    return float(math.fsum(reversed(totals)))


def sum_alt_inv_pow(b: float, s: int, k0: int, k1: int) -> float:
    """sum_{k=k0}^{k1-1} (-1)^k (k + b)^(-s)."""
    totals = []
    for lo in range(k0, k1, _CHUNK):
        hi = min(lo + _CHUNK, k1)
        k = np.arange(lo, hi, dtype=np.float64)
        signs = np.where(np.arange(lo, hi) % 2 == 0, 1.0, -1.0)
        totals.append(np.sum(signs * (k + b) ** (-float(s))))
    return float(math.fsum(reversed(totals)))


def lerch_sum(a: complex, b: float, s: int, k0: int, k1: int, p0: complex) -> complex:
    """sum_{k=k0}^{k1-1} a^k (k + b)^(-s), given p0 = a^{k0}.

    Powers restart from an exact exp(i k log a) anchor each chunk, so phase
    drift never accumulates across the full range.
    """
    total = 0j
    mag, ang = abs(a), math.atan2(a.imag, a.real)
    for lo in range(k0, k1, _CHUNK):
        hi = min(lo + _CHUNK, k1)
        n = hi - lo
        if lo == k0:
            anchor = p0
        else:
            anchor = mag ** lo * complex(math.cos(ang * lo), math.sin(ang * lo))
        powers = anchor * a ** np.arange(n)
        k = np.arange(lo, hi, dtype=np.float64)
        total += complex(np.sum(powers * (k + b) ** (-float(s))))
    return total


def lerch_partial_sums(a: complex, b: float, s: int, n: int,
                       k0: int, p0: complex, acc0: complex) -> np.ndarray:
    """Partial sums acc0 + sum_{k=k0}^{k0+i} a^k (k+b)^(-s) for i < n."""
    k = np.arange(k0, k0 + n, dtype=np.float64)
    powers = p0 * a ** np.arange(n)
    terms = powers * (k + b) ** (-float(s))
    return acc0 + np.cumsum(terms)


def eta_integrand(t: np.ndarray, a: complex, b: float, k: int) -> np.ndarray:
    """t^k e^{-b t} / ((1 - a) - a expm1(-t)), elementwise over t > 0.

    This is the Mellin integrand for the Lerch series written so that the
    denominator 1 - a e^{-t} never suffers cancellation near t = 0.
    """
    den = (1.0 - a) - a * np.expm1(-t)
    return t ** float(k) * np.exp(-b * t) / den


def segment_integrand(u: np.ndarray, phi: float, b: float, n: int,
                      euler_kind: bool) -> np.ndarray:
    """(i y)^n e^{(1-b) i y} / (e^{i y} -+ 1) at y = phi*u, on the unit segment.

    Uses e^{iy} - 1 = 2i sin(y/2) e^{iy/2} and e^{iy} + 1 = 2 cos(y/2) e^{iy/2},
    which are exact and cancellation-free.  The y = 0 point is the removable
    limit: 1 for the pole-cancelling index, 0 above it.
    """
    y = phi * u
    zero = y == 0.0
    ysafe = np.where(zero, 1.0, y)
    w = np.exp(1j * (0.5 - b) * ysafe)
    iy_n = (1j * ysafe) ** n
    if euler_kind:
        out = iy_n * w / (2.0 * np.cos(0.5 * ysafe))
        limit = 0.5 if n == 0 else 0.0
    else:
        out = iy_n * w / (2j * np.sin(0.5 * ysafe))
        limit = 1.0 if n == 1 else 0.0
    if np.any(zero):
        out = np.where(zero, complex(limit), out)
    return np.asarray(out, dtype=np.complex128)
