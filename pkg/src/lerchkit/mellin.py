"""Integral-representation oracles for the Lerch family.

Two independent references live here:

* brute_force_lerch : plain partial sums of a^k (k+b)^{-s} with a rigorous
  tail bound (geometric, integral-comparison, or Abel depending on a).

* mellin_transform  : Gauss-Kronrod quadrature of

      M(s) = int_0^inf t^{s-1} e^{-bt} / (1 - a e^{-t}) dt = (s-1)! Phi(a,s,b)

  written with expm1 so the denominator never cancels, plus a closed-form
  tail moment (the denominator is 1 + O(e^{-T}) past the cut T).

mellin_phi_check pits the quadrature value against a summation-only
evaluation of Phi; strip_shift_check verifies the contour identity

    M(n+1) = sum_k C(n,k) (i phi)^{n-k} M_phi(k+1)
             + i phi int_0^1 (i phi u)^n g(i phi u) du

obtained by shifting the integration ray from [0, inf) to
[i phi, i phi + inf) - every piece is computed by quadrature on a
different integrand, so the three routes share no code with the series
evaluators.
"""
from __future__ import annotations

import cmath
import math
from typing import Union

import numpy as np

from . import backend
from .checks import CheckResult
from .errors import DomainError
from .quadrature import geometric_breakpoints, integrate
from .special import (DEFAULT_PARAMS, EvalResult, SeriesParams,
                      lerch_phi_direct_sum, params_for_tolerance,
                      _split_b, _check_s, _NEAR)

__all__ = [
    "brute_force_lerch",
    "mellin_transform",
    "mellin_phi_check",
    "strip_shift_check",
]

Number = Union[int, float]


# ----------------------------------------------------------------------
# brute-force reference sums
# ----------------------------------------------------------------------

def brute_force_lerch(a: Union[Number, complex], s: int, b: Number,
                      n_terms: int = 1_000_000) -> EvalResult:
    """Partial sum of a^k (k+b)^{-s} over k < n_terms with a rigorous tail bound.

    Deliberately unaccelerated: this is the slow, obviously-correct route that
    everything faster is checked against.  Tail bounds:

        |a| < 1 : |a|^N (N+b)^{-s} / (1-|a|)          (geometric)
        a = 1   : (N-1+b)^{1-s} / (s-1)               (integral comparison)
        |a| = 1 : 2 (N+b)^{-s} / |1-a|                (Abel summation)
    """
    _check_s(s, 1, "brute_force_lerch")
    bc, br = _split_b(b, "brute_force_lerch")
    if br is None:
        raise DomainError("brute_force_lerch requires real b")
    ac = complex(a)
    mag = abs(ac)
    if mag > 1.0 + _NEAR:
        raise DomainError("brute_force_lerch requires |a| <= 1")
    n = int(n_terms)
    if n < 2:
        raise DomainError("n_terms must be at least 2")

    if abs(ac - 1.0) <= _NEAR:
        if s < 2:
            raise DomainError("series diverges at a = 1, s = 1")
        value = complex(backend.sum_inv_pow(br, s, 0, n))
        tail = (n - 1 + br) ** (1 - s) / (s - 1)
    elif abs(ac + 1.0) <= _NEAR:
        value = complex(backend.sum_alt_inv_pow(br, s, 0, n))
        tail = (n + br) ** (-s)
    elif mag < 1.0 - _NEAR:
        value = complex(backend.lerch_sum(ac, br, s, 0, n, 1.0 + 0j))
        tail = mag ** n * (n + br) ** (-s) / (1.0 - mag)
    else:
        if s < 2 and n < 4096:
            raise DomainError("conditionally convergent: use more terms")
        value = complex(backend.lerch_sum(ac, br, s, 0, n, 1.0 + 0j))
        tail = 2.0 * (n + br) ** (-s) / abs(1.0 - ac)

    # rounding: compensated summation costs ~2 eps * sum |terms| and each
    # term's power evaluation a few ulp more; 2e-15 covers both with margin.
    # sum |terms| is bounded by the s-decay envelope.
    if s >= 2:
        abs_sum = br ** (-s) + br ** (1 - s) / (s - 1)
    else:
        abs_sum = br ** (-1) + math.log((n + br) / br)
    est = tail + 2e-15 * abs_sum
    return EvalResult(value=value, terms_used=n, error_estimate=est)


# ----------------------------------------------------------------------
# Mellin quadrature oracle
# ----------------------------------------------------------------------

def _tail_moment(m: int, b: float, t_cut: float) -> float:
    """int_{T}^inf t^m e^{-bt} dt = e^{-bT} sum_j (m!/j!) T^j b^{j-m-1}."""
    acc = 0.0
    coeff = 1.0  # m!/j! built downward from j = m
    for j in range(m, -1, -1):
        acc += coeff * t_cut ** j / b ** (m - j + 1)
        coeff *= j  # now m!/ (j-1)!
    return math.exp(-b * t_cut) * acc


def _rough_scale(s: int, br: float) -> float:
    """Order-of-magnitude of (s-1)! Phi(a, s, b) used to size quad tolerances."""
    if s >= 2:
        phi_mag = br ** (-s) + br ** (1 - s) / (s - 1)
    else:
        phi_mag = br ** (-1) + 5.0
    return math.factorial(s - 1) * phi_mag


def mellin_transform(a: Union[Number, complex], s: int, b: Number,
                     params: SeriesParams | None = None) -> EvalResult:
    """Quadrature value of int_0^inf t^{s-1} e^{-bt} / (1 - a e^{-t}) dt.

    Equals (s-1)! Phi(a, s, b) for integer s >= 1, real b > 0, |a| <= 1
    (a = 1 needs s >= 2 for integrability at the origin).
    """
    params = params or DEFAULT_PARAMS
    _check_s(s, 1, "mellin_transform")
    bc, br = _split_b(b, "mellin_transform")
    if br is None:
        raise DomainError("mellin_transform requires real b")
    ac = complex(a)
    if abs(ac) > 1.0 + _NEAR:
        raise DomainError("mellin_transform requires |a| <= 1")
    if abs(ac - 1.0) <= _NEAR and s < 2:
        raise DomainError("integrand is non-integrable at a = 1, s = 1")
    k = s - 1
    t_cut = max(50.0, 60.0 / br, 2.0 * k / br + 50.0)
    scale = _rough_scale(s, br)
    quad_tol = max(params.tolerance, 1e-14 * scale) * 0.5

    def f(t: np.ndarray) -> np.ndarray:
        return backend.eta_integrand(t, ac, br, k)

    res = integrate(f, geometric_breakpoints(t_cut), abs_tol=quad_tol)
    tail = _tail_moment(k, br, t_cut)
    # replacing the denominator by 1 on the tail errs by <= |a| e^{-T} relatively
    tail_err = 2.0 * abs(ac) * math.exp(-t_cut) * tail
    value = res.value + tail
    est = res.error_estimate + tail_err + 4e-16 * abs(value)
    return EvalResult(value=value, terms_used=res.intervals, error_estimate=est)


def mellin_phi_check(a: Union[Number, complex], s: int, b: Number,
                     tol: float = 1e-9,
                     params: SeriesParams | None = None) -> CheckResult:
    """Quadrature vs series: (s-1)! Phi(a,s,b) against the Mellin integral.

    The left side only ever sums/accelerates the series; the right side only
    integrates.  Agreement is evidence for both routes at once.
    """
    params = params if params is not None else params_for_tolerance(tol)
    series = lerch_phi_direct_sum(a, s, b, params)
    lhs = math.factorial(s - 1) * series.value
    rhs = mellin_transform(a, s, b, params).value
    return CheckResult(
        name="mellin_phi",
        lhs=lhs, rhs=rhs, tol=tol,
        params={"a": complex(a), "s": s, "b": float(b)},
    )


# ----------------------------------------------------------------------
# contour (strip) shift
# ----------------------------------------------------------------------

def strip_shift_check(kind: str, n: int, phi: float, b: Number,
                      tol: float = 1e-8,
                      params: SeriesParams | None = None) -> CheckResult:
    """Verify the ray-shift identity behind the recurrence machinery.

    With g(t) = e^{-bt}/(1 -+ e^{-t}) (bernoulli / euler kind) and moments
    M(m+1) = int_0^inf t^m g(t) dt, shifting the ray to i*phi + [0, inf)
    gives

        M(n+1) = sum_{k=0}^n C(n,k) (i phi)^{n-k} e^{-i b phi} M_shift(k+1)
                 + i phi int_0^1 (i phi u)^n g(i phi u) du

    where M_shift uses the denominator 1 -+ e^{-i phi} e^{-t}.  All three
    pieces are quadratures of different integrands; no series code runs.

    bernoulli: n >= 1, 0 < |phi| < 2 pi.   euler: n >= 0, 0 < |phi| < pi.
    """
    params = params if params is not None else params_for_tolerance(tol)
    if kind not in ("bernoulli", "euler"):
        raise DomainError(f"kind must be 'bernoulli' or 'euler', got {kind!r}")
    euler_kind = kind == "euler"
    if not isinstance(n, int) or n < (0 if euler_kind else 1):
        raise DomainError(f"{kind} shift requires integer n >= "
                          f"{0 if euler_kind else 1}")
    limit = math.pi if euler_kind else 2.0 * math.pi
    if not (0.0 < abs(phi) < limit):
        raise DomainError(f"{kind} shift requires 0 < |phi| < {limit:.6f}")
    bc, br = _split_b(b, "strip_shift_check")
    if br is None or not (br <= 1.0):
        raise DomainError("strip_shift_check requires real 0 < b <= 1")

    a_base = -1.0 + 0j if euler_kind else 1.0 + 0j
    a_shift = -cmath.exp(-1j * phi) if euler_kind else cmath.exp(-1j * phi)
    t_cut = max(50.0, 60.0 / br, 2.0 * n / br + 50.0)
    scale = _rough_scale(n + 1, br)
    # GK error estimates bottom out around 2e-15 * |integral|; 3e-14 * scale
    # stays certifiable while keeping the check far below its tolerance.
    quad_tol = max(params.tolerance, 3e-14 * scale) * 0.25
    breaks = geometric_breakpoints(t_cut)

    def moment(ac: complex, k: int) -> complex:
        res = integrate(lambda t: backend.eta_integrand(t, ac, br, k),
                        breaks, abs_tol=quad_tol)
        return res.value + _tail_moment(k, br, t_cut)

    lhs = moment(a_base, n)

    shift_phase = cmath.exp(-1j * br * phi)
    rhs = 0j
    for k in range(n + 1):
        rhs += (math.comb(n, k) * (1j * phi) ** (n - k)
                * shift_phase * moment(a_shift, k))
    seg = integrate(
        lambda u: backend.segment_integrand(u, float(phi), br, n, euler_kind),
        [0.0, 0.25, 0.5, 0.75, 1.0], abs_tol=quad_tol)
    rhs += 1j * phi * seg.value

    return CheckResult(
        name=f"strip_shift_{kind}",
        lhs=lhs, rhs=rhs, tol=tol,
        params={"kind": kind, "n": n, "phi": float(phi), "b": float(b)},
    )
