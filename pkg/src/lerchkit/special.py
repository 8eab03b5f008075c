"""Floating-point evaluators for the Lerch transcendent family.

Everything is built on Phi(a, s, b) = sum_{k>=0} a^k / (k+b)^s with integer
s >= 1, Re(b) > 0 and |a| <= 1.  Specialisations:

    hurwitz_zeta(s, b)        = Phi(1, s, b)              (s >= 2)
    riemann_zeta(s)           = Phi(1, s, 1)              (s >= 2)
    dirichlet_beta(s)         = sum (-1)^k (2k+1)^{-s}
    polylog_unit(s, phi)      = Li_s(e^{i phi})
    l_series(chi, s)          = mod-8 Dirichlet L-function (chi in {1, 2})

Each route picks the summation strategy by where a sits:

    a = 0                 -> single term
    |a| < 1               -> direct geometric summation (truncation bound)
    a = 1                 -> Euler-Maclaurin (hurwitz_zeta)
    a = -1, real b        -> Cohen-Rodriguez Villegas-Zagier acceleration
    |a| = 1, a != 1, s>=2 -> Aitken extrapolation of partial sums
    |a| = 1, a != 1, s=1  -> Gauss-Kronrod quadrature of the Mellin integrand

All evaluators return an EvalResult whose error_estimate is a conservative
bound on |value - truth| (truncation + extrapolation + rounding).
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

import numpy as np

from . import backend
from .bernoulli_euler import bernoulli_numbers, euler_numbers
from .errors import DomainError, NonConvergence
from .quadrature import geometric_breakpoints, integrate

__all__ = [
    "SeriesParams",
    "params_for_tolerance",
    "EvalResult",
    "ExactPiForm",
    "factorial",
    "binomial",
    "riemann_zeta_even",
    "beta_odd_exact",
    "zeta_even_float",
    "beta_odd_float",
    "hurwitz_zeta",
    "riemann_zeta",
    "dirichlet_beta",
    "polylog_unit",
    "polylog",
    "lerch_phi",
    "lerch_phi_direct_sum",
    "lerch_phi_i_half",
    "l_series",
]

Number = Union[int, float, Fraction]


@dataclass(frozen=True)
class SeriesParams:
    """Accuracy/budget knobs shared by every evaluator."""
    tolerance: float = 1e-13
    max_terms: int = 10_000_000

    def __post_init__(self) -> None:
        if not (self.tolerance > 0.0):
            raise ValueError("tolerance must be positive")
        if self.max_terms < 16:
            raise ValueError("max_terms must be at least 16")


DEFAULT_PARAMS = SeriesParams()


def params_for_tolerance(tol: float, max_terms: int | None = None) -> SeriesParams:
    """Evaluator params that comfortably resolve a comparison at ``tol``.

    Asks for three digits more than the comparison needs, floored at 5e-13:
    unit-circle sequence extrapolation cannot reliably certify better than
    a few 1e-13 absolute, and no shipped check tolerance requires it.
    """
    inner = max(DEFAULT_PARAMS.tolerance, tol * 1e-3, 5e-13)
    return SeriesParams(tolerance=inner,
                        max_terms=max_terms or DEFAULT_PARAMS.max_terms)


@dataclass(frozen=True)
class EvalResult:
    value: complex
    terms_used: int
    error_estimate: float

    @property
    def real(self) -> float:
        return self.value.real


@dataclass(frozen=True)
class ExactPiForm:
    """A number of the form rational * pi**pi_power, kept exact."""
    rational: Fraction
    pi_power: int

    def __float__(self) -> float:
        return float(self.rational) * math.pi ** self.pi_power

    @property
    def value(self) -> float:
        return float(self)


def factorial(n: int) -> int:
    """n! for non-negative integer n (exact)."""
    if not isinstance(n, int) or n < 0:
        raise DomainError("factorial requires a non-negative integer")
    return math.factorial(n)


def binomial(n: int, k: int) -> int:
    """C(n, k), zero outside 0 <= k <= n."""
    if not isinstance(n, int) or not isinstance(k, int) or n < 0:
        raise DomainError("binomial requires non-negative integer n")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


# ----------------------------------------------------------------------
# exact even-zeta / odd-beta values
# ----------------------------------------------------------------------

def riemann_zeta_even(k: int) -> ExactPiForm:
    """zeta(2k) = (-1)^{k-1} (2 pi)^{2k} B_{2k} / (2 (2k)!); zeta(0) = -1/2."""
    if not isinstance(k, int) or k < 0:
        raise DomainError("riemann_zeta_even requires integer k >= 0")
    if k == 0:
        return ExactPiForm(Fraction(-1, 2), 0)
    b2k = bernoulli_numbers(2 * k)[2 * k]
    rational = Fraction((-1) ** (k - 1) * 2 ** (2 * k), 2 * math.factorial(2 * k)) * b2k
    return ExactPiForm(rational, 2 * k)


def beta_odd_exact(k: int) -> ExactPiForm:
    """beta(2k+1) = (-1)^k (pi/2)^{2k+1} E_{2k} / (2 (2k)!)."""
    if not isinstance(k, int) or k < 0:
        raise DomainError("beta_odd_exact requires integer k >= 0")
    e2k = euler_numbers(2 * k)[2 * k]
    rational = Fraction((-1) ** k, 2 ** (2 * k + 2) * math.factorial(2 * k)) * e2k
    return ExactPiForm(rational, 2 * k + 1)


@lru_cache(maxsize=None)
def zeta_even_float(k: int) -> float:
    # zeta(2k) - 1 < 2^(-2k) + 2*3^(-2k); beyond k = 64 the value rounds to 1.0,
    # so skip the (huge) exact rational.
    if k > 64:
        return 1.0
    return float(riemann_zeta_even(k))


@lru_cache(maxsize=None)
def beta_odd_float(k: int) -> float:
    return float(beta_odd_exact(k))


# ----------------------------------------------------------------------
# argument validation helpers
# ----------------------------------------------------------------------

def _check_s(s: int, minimum: int, who: str) -> None:
    if not isinstance(s, int):
        raise DomainError(f"{who} requires integer s, got {s!r}")
    if s < minimum:
        raise DomainError(f"{who} requires s >= {minimum}, got {s}")


def _split_b(b: Union[Number, complex], who: str):
    """Return (b_complex, b_real_or_None) after validating Re(b) > 0."""
    if isinstance(b, Fraction):
        b = float(b)
    bc = complex(b)
    if not (bc.real > 0.0):
        raise DomainError(f"{who} requires Re(b) > 0, got {b!r}")
    if bc.imag == 0.0:
        return bc, bc.real
    return bc, None


# ----------------------------------------------------------------------
# Hurwitz zeta via Euler-Maclaurin
# ----------------------------------------------------------------------

def hurwitz_zeta(s: int, b: Union[Number, complex],
                 params: SeriesParams | None = None) -> EvalResult:
    """zeta(s, b) = sum_{k>=0} (k+b)^{-s} for integer s >= 2, Re(b) > 0.

    Direct sum over k < N plus the Euler-Maclaurin tail

        (N+b)^{1-s}/(s-1) + (N+b)^{-s}/2
        + sum_j B_{2j}/(2j)! * (s)_{2j-1} (N+b)^{-s-2j+1}

    with N sized so the correction series converges fast.
    """
    params = params or DEFAULT_PARAMS
    _check_s(s, 2, "hurwitz_zeta")
    bc, br = _split_b(b, "hurwitz_zeta")
    tol = params.tolerance

    # For b < 1 the leading (k+b)^{-s} terms dwarf the rest of the sum and
    # would cost several ulps at their scale inside the compensated loop.
    # Peel them off exactly and add them back in a single final rounding.
    peel = 0.0
    peel_terms = 0
    if br is not None:
        lead: list[float] = []
        while br < 1.0:
            lead.append(br ** (-s))
            br += 1.0
            peel_terms += 1
        bc = complex(br)
        peel = math.fsum(lead)

    n_direct = max(24, s)
    max_j = 16
    bern = bernoulli_numbers(2 * max_j)
    last_exc: NonConvergence | None = None
    while n_direct <= max(2048, 4 * s):
        if br is not None:
            direct: complex = complex(backend.sum_inv_pow(br, s, 0, n_direct))
        else:
            direct = sum((k + bc) ** (-s) for k in range(n_direct - 1, -1, -1))
        w = n_direct + bc
        corr = w ** (1 - s) / (s - 1) + 0.5 * w ** (-s)
        poch = float(s)            # (s)_{2j-1} built incrementally
        wpow = w ** (-s - 1)
        tail_est = math.inf
        prev_mag = math.inf
        for j in range(1, max_j + 1):
            term = float(bern[2 * j] / math.factorial(2 * j)) * poch * wpow
            mag = abs(term)
            if mag > prev_mag:     # asymptotic series started diverging
                tail_est = 4.0 * prev_mag
                break
            corr += term
            prev_mag = mag
            if mag <= tol / 16.0:
                tail_est = 4.0 * mag
                break
            poch *= (s + 2 * j - 1) * (s + 2 * j)
            wpow /= w * w
        value = peel + (direct + corr)
        rounding = 4e-16 * (abs(direct) + abs(corr) + abs(peel)) + 1e-16 * n_direct
        est = tail_est + rounding
        if tail_est <= tol:
            return EvalResult(value=value, terms_used=n_direct + peel_terms,
                              error_estimate=est)
        last_exc = NonConvergence(
            f"hurwitz_zeta({s}, {b!r}) Euler-Maclaurin tail {tail_est:.3e} > {tol:.3e}",
            value=value, error_estimate=est, terms_used=n_direct + peel_terms)
        n_direct *= 2
    raise last_exc if last_exc is not None else NonConvergence("hurwitz_zeta failed")


def riemann_zeta(s: int, params: SeriesParams | None = None) -> EvalResult:
    """zeta(s) for integer s >= 2."""
    _check_s(s, 2, "riemann_zeta")
    if s % 2 == 0:
        return EvalResult(value=complex(zeta_even_float(s // 2)),
                          terms_used=0, error_estimate=4e-16 * zeta_even_float(s // 2))
    return hurwitz_zeta(s, 1.0, params)


# ----------------------------------------------------------------------
# alternating acceleration (Cohen-Rodriguez Villegas-Zagier)
# ----------------------------------------------------------------------

def _cvz_alternating(coeff, n: int) -> float:
    """sum_{k>=0} (-1)^k coeff(k) for positive decreasing coeff.

    Chebyshev-based acceleration; error ~ 5.83^{-n} * coeff(0).
    """
    d = (3.0 + math.sqrt(8.0)) ** n
    d = 0.5 * (d + 1.0 / d)
    b = -1.0
    c = -d
    terms = []
    for k in range(n):
        c = b - c
        terms.append(c * coeff(k))
        b *= (k + n) * (k - n) / ((k + 0.5) * (k + 1.0))
    return math.fsum(terms) / d


def _cvz_n(tol: float) -> int:
    return max(12, int(math.log(max(16.0, 8.0 / tol)) / 1.7627) + 7)


@lru_cache(maxsize=None)
def _cheby_d(n: int) -> int:
    """((3+sqrt8)^n + (3-sqrt8)^n) / 2, an integer (Chebyshev T_n(3))."""
    lo, hi = 1, 3
    if n == 0:
        return lo
    for _ in range(n - 1):
        lo, hi = hi, 6 * hi - lo
    return hi


@lru_cache(maxsize=None)
def _beta_cvz_exact(s: int, n: int) -> Fraction:
    """CVZ acceleration of beta(s) in exact rational arithmetic.

    All weights are rational (the normalizer is the integer T_n(3)), so the
    only error left is the acceleration's own 5.83^{-n} truncation; the
    float() of the result is then correctly rounded.
    """
    d = _cheby_d(n)
    b = Fraction(-1)
    c = Fraction(-d)
    total = Fraction(0)
    for k in range(n):
        c = b - c
        total += c / (2 * k + 1) ** s
        b *= Fraction(4 * (k + n) * (k - n), (2 * k + 1) * (2 * k + 2))
    return total / d


def dirichlet_beta(s: int, params: SeriesParams | None = None) -> EvalResult:
    """beta(s) = sum_{k>=0} (-1)^k (2k+1)^{-s} for integer s >= 1."""
    params = params or DEFAULT_PARAMS
    _check_s(s, 1, "dirichlet_beta")
    n = _cvz_n(params.tolerance) + 4
    val = float(_beta_cvz_exact(s, n))
    est = 8.0 * 5.83 ** (-n) + 2e-16 * abs(val)
    return EvalResult(value=complex(val), terms_used=n, error_estimate=est)


# ----------------------------------------------------------------------
# Aitken extrapolation for |a| = 1, a != 1
# ----------------------------------------------------------------------

def _aitken_tail(partial: np.ndarray, sweeps: int = 3, tail: int = 64):
    """Repeated Aitken delta^2 on the last `tail` partial sums.

    Returns (value, |last delta| of the final usable sweep).
    """
    seq = np.asarray(partial[-tail:], dtype=np.complex128)
    delta = abs(seq[-1] - seq[-2]) if len(seq) >= 2 else math.inf
    for _ in range(sweeps):
        if len(seq) < 3:
            break
        d1 = np.diff(seq)
        d2 = np.diff(d1)
        bad = np.abs(d2) <= 1e-280
        if bad.any():
            cut = int(np.argmax(bad))  # truncate before the first flat spot
            if cut < 1:
                break
            seq = seq[: cut + 2]
            d1 = np.diff(seq)
            d2 = np.diff(d1)
            if len(d2) == 0 or (np.abs(d2) <= 1e-280).any():
                break
        nxt = seq[:-2] - d1[:-1] ** 2 / d2
        if len(nxt) >= 2:
            delta = abs(nxt[-1] - nxt[-2])
        seq = nxt
    return complex(seq[-1]), delta


def _lerch_unit_aitken(a: complex, s: int, b: complex,
                       params: SeriesParams) -> EvalResult:
    """Phi(a, s, b) for |a| = 1, a not near 1, s >= 2 by Aitken on partials."""
    tol = params.tolerance
    n = 512
    p0 = 1.0 + 0j
    partial = backend.lerch_partial_sums(a, b, s, n, 0, p0, 0j)
    total_n = n
    best: EvalResult | None = None
    while True:
        val, delta = _aitken_tail(partial, sweeps=3, tail=64)
        est = 8.0 * delta + 2e-15 * (abs(val) + 1.0)
        cand = EvalResult(value=val, terms_used=total_n, error_estimate=est)
        if best is None or cand.error_estimate < best.error_estimate:
            best = cand
        if est <= tol:
            return cand
        if 2 * total_n > min(params.max_terms, 1 << 18):
            if s >= 2:
                # absolute-convergence fallback bound for the raw tail
                raw_bound = (total_n + b.real) ** (1 - s) / (s - 1)
                if raw_bound <= tol:
                    return EvalResult(value=best.value, terms_used=total_n,
                                      error_estimate=max(best.error_estimate, raw_bound))
            raise NonConvergence(
                f"Phi({a!r}, {s}, {b!r}) Aitken stalled at {best.error_estimate:.3e}",
                value=best.value, error_estimate=best.error_estimate,
                terms_used=total_n)
        ang = cmath.phase(a)
        p_next = cmath.exp(1j * ang * total_n)
        ext = backend.lerch_partial_sums(a, b, s, total_n, total_n, p_next,
                                         complex(partial[-1]))
        partial = np.concatenate([partial, ext])
        total_n *= 2


# ----------------------------------------------------------------------
# s = 1 on the unit circle: integral representation
# ----------------------------------------------------------------------

def _lerch_integral(a: complex, b: complex, s: int,
                    params: SeriesParams) -> EvalResult:
    """Phi(a, s, b) = (1/(s-1)!) * int_0^inf t^{s-1} e^{-bt} / (1 - a e^{-t}) dt.

    Used for s = 1 with |a| = 1, a != 1 (the series is only conditionally
    convergent there); the integrand is smooth and decays like e^{-Re(b) t}.
    """
    br = b.real
    t_max = max(50.0, 60.0 / br)
    k = s - 1

    def f(t: np.ndarray) -> np.ndarray:
        return backend.eta_integrand(t, a, b, k)

    res = integrate(f, geometric_breakpoints(t_max), abs_tol=params.tolerance / 8.0)
    # tail: |1 - a e^{-t}| >= 1 - e^{-t} for |a| <= 1
    tail = math.exp(-br * t_max) * t_max ** k / (br * (1.0 - math.exp(-t_max)))
    value = res.value / math.factorial(k)
    est = (res.error_estimate + tail) / math.factorial(k) + 4e-16 * abs(value)
    return EvalResult(value=value, terms_used=res.intervals, error_estimate=est)


# ----------------------------------------------------------------------
# the dispatcher
# ----------------------------------------------------------------------

_NEAR = 1e-12


def lerch_phi(a: Union[Number, complex], s: int, b: Union[Number, complex],
              params: SeriesParams | None = None) -> EvalResult:
    """Phi(a, s, b) = sum_{k>=0} a^k (k+b)^{-s}.

    integer s >= 1, Re(b) > 0, |a| <= 1; a = 1 additionally needs s >= 2.
    """
    params = params or DEFAULT_PARAMS
    _check_s(s, 1, "lerch_phi")
    bc, br = _split_b(b, "lerch_phi")
    if isinstance(a, Fraction):
        a = float(a)
    ac = complex(a)
    mag = abs(ac)
    if mag > 1.0 + _NEAR:
        raise DomainError(f"lerch_phi requires |a| <= 1, got |a| = {mag}")

    if ac == 0:
        v = bc ** (-s)
        return EvalResult(value=v, terms_used=1, error_estimate=4e-16 * abs(v))

    if abs(ac - 1.0) <= _NEAR:
        if s < 2:
            raise DomainError("lerch_phi diverges at a = 1, s = 1")
        return hurwitz_zeta(s, b if br is None else br, params)

    if abs(ac + 1.0) <= _NEAR and br is not None:
        # Peel leading terms while b < 1 so the acceleration runs at O(1)
        # scale; b^{-s} can dominate the limit by orders of magnitude.
        lead: list[float] = []
        sign = 1.0
        while br < 1.0:
            lead.append(sign * br ** (-s))
            sign = -sign
            br += 1.0
        n = _cvz_n(params.tolerance)
        val = math.fsum(lead) + sign * _cvz_alternating(
            lambda k: (k + br) ** (-s), n)
        est = (8.0 * br ** (-s) * 5.83 ** (-n)
               + 4e-16 * (abs(val) + sum(abs(t) for t in lead)))
        return EvalResult(value=complex(val), terms_used=n + len(lead),
                          error_estimate=est)

    if mag < 1.0 - _NEAR:
        return _lerch_direct(ac, s, bc, br, mag, params)

    if s == 1:
        return _lerch_integral(ac, bc, 1, params)
    return _unit_aitken_peeled(ac, s, bc, br, params)


def _unit_aitken_peeled(ac: complex, s: int, bc: complex, br: float | None,
                        params: SeriesParams) -> EvalResult:
    """Aitken evaluation with leading terms peeled while real b < 1.

    The raw partial sums otherwise start at b^{-s}, which can exceed the
    limit by orders of magnitude and drags rounding at that scale through
    the extrapolation; peeled, the extrapolated piece is O(1).
    """
    if br is None or br >= 1.0:
        return _lerch_unit_aitken(ac, s, bc, params)
    lead = 0.0 + 0.0j
    apow = 1.0 + 0.0j
    peeled = 0
    while br < 1.0:
        lead += apow * br ** (-s)
        apow *= ac
        br += 1.0
        peeled += 1
    inner = _lerch_unit_aitken(ac, s, complex(br), params)
    value = lead + apow * inner.value
    est = inner.error_estimate + 3e-16 * (abs(lead) + abs(value))
    return EvalResult(value=value, terms_used=inner.terms_used + peeled,
                      error_estimate=est)


def lerch_phi_direct_sum(a: Union[Number, complex], s: int,
                         b: Union[Number, complex],
                         params: SeriesParams | None = None) -> EvalResult:
    """Phi(a, s, b) by summation/acceleration only, never quadrature.

    Identical dispatch to lerch_phi except the conditionally convergent
    unit-circle s = 1 case, which is Aitken-extrapolated instead of routed
    through the integral representation.  This keeps the value fully
    independent of the quadrature engine, so it can sit on the series side
    of an integral-representation cross-check.
    """
    params = params or DEFAULT_PARAMS
    _check_s(s, 1, "lerch_phi_direct_sum")
    bc, br = _split_b(b, "lerch_phi_direct_sum")
    if isinstance(a, Fraction):
        a = float(a)
    ac = complex(a)
    if abs(ac) >= 1.0 - _NEAR and abs(ac - 1.0) > _NEAR and not (
            abs(ac + 1.0) <= _NEAR and br is not None):
        if abs(ac) > 1.0 + _NEAR:
            raise DomainError(f"lerch_phi_direct_sum requires |a| <= 1")
        return _unit_aitken_peeled(ac, s, bc, br, params)
    return lerch_phi(a, s, b, params)


def _lerch_direct(ac: complex, s: int, bc: complex, br: float | None,
                  mag: float, params: SeriesParams) -> EvalResult:
    """Plain geometric summation; tail bound mag^N (N+Re b)^{-s} / (1-mag)."""
    tol = params.tolerance
    brr = bc.real
    log_mag = math.log(mag)

    def bound(n: int) -> float:
        return math.exp(n * log_mag) * (n + brr) ** (-s) / (1.0 - mag)

    n = 64
    while bound(n) > tol / 4.0 and n < params.max_terms:
        n *= 2
    if bound(n) > tol / 4.0:
        raise NonConvergence(
            f"direct sum needs more than {params.max_terms} terms",
            terms_used=params.max_terms)
    val = complex(backend.lerch_sum(ac, bc, s, 0, n, 1.0 + 0j))
    est = bound(n) + 4e-16 * (1.0 / (1.0 - mag)) * brr ** (-s)
    return EvalResult(value=val, terms_used=n, error_estimate=est)


def polylog_unit(s: int, phi: float,
                 params: SeriesParams | None = None) -> EvalResult:
    """Li_s(e^{i phi}) = sum_{k>=1} e^{i k phi} / k^s for integer s >= 1.

    s = 1 uses the closed form -log(1 - e^{i phi}); phi = 0 (mod 2 pi)
    requires s >= 2.
    """
    params = params or DEFAULT_PARAMS
    _check_s(s, 1, "polylog_unit")
    a = cmath.exp(1j * phi)
    if abs(a - 1.0) <= _NEAR:
        if s < 2:
            raise DomainError("polylog_unit diverges at phi = 0, s = 1")
        return riemann_zeta(s, params)
    if s == 1:
        v = -cmath.log(1.0 - a)
        return EvalResult(value=v, terms_used=1, error_estimate=4e-16 * (abs(v) + 1.0))
    if abs(a + 1.0) <= _NEAR:
        n = _cvz_n(params.tolerance)
        val = -_cvz_alternating(lambda k: (k + 1.0) ** (-s), n)
        est = 8.0 * 5.83 ** (-n) + 4e-16 * abs(val)
        return EvalResult(value=complex(val), terms_used=n, error_estimate=est)
    inner = _lerch_unit_aitken(a, s, 1.0 + 0j, params)
    return EvalResult(value=a * inner.value, terms_used=inner.terms_used,
                      error_estimate=inner.error_estimate)


def polylog(s: int, a: Union[Number, complex],
            params: SeriesParams | None = None) -> EvalResult:
    """Li_s(a) = sum_{k>=1} a^k / k^s for integer s >= 1, |a| <= 1.

    a = 1 requires s >= 2 (the series is zeta(s)); other unit-circle points
    converge for s >= 1.
    """
    params = params or DEFAULT_PARAMS
    _check_s(s, 1, "polylog")
    if isinstance(a, Fraction):
        a = float(a)
    ac = complex(a)
    if ac == 0:
        return EvalResult(value=0j, terms_used=1, error_estimate=0.0)
    inner = lerch_phi(ac, s, 1.0, params)
    value = ac * inner.value
    return EvalResult(value=value, terms_used=inner.terms_used,
                      error_estimate=abs(ac) * inner.error_estimate
                      + 2e-16 * abs(value))


# ----------------------------------------------------------------------
# mod-8 Dirichlet L-series
# ----------------------------------------------------------------------

_CHI = {
    1: {1: 1, 3: 1, 5: -1, 7: -1},
    2: {1: 1, 3: -1, 5: -1, 7: 1},
}


def _chi_key(chi) -> int:
    if chi in (1, 2):
        return chi
    if isinstance(chi, str):
        c = chi.strip().lower()
        if c in ("chi1", "1"):
            return 1
        if c in ("chi2", "2"):
            return 2
    raise DomainError(f"unknown character {chi!r}; use 1/'chi1' or 2/'chi2'")


def _l1_blocks(key: int, params: SeriesParams) -> EvalResult:
    """L(1, chi) by Aitken on half-period blocks.

    Pairing residues 1,3 (and 5,7 via the sign flip) gives the alternating
    series sum_j (-1)^j [1/(4j+1) +- 1/(4j+3)] whose partial sums
    extrapolate cleanly.
    """
    sign_inner = 1.0 if key == 1 else -1.0
    tol = params.tolerance
    m = 512
    while True:
        j = np.arange(m, dtype=np.float64)
        blocks = ((-1.0) ** j) * (1.0 / (4.0 * j + 1.0)
                                  + sign_inner / (4.0 * j + 3.0))
        partial = np.cumsum(blocks)
        val, delta = _aitken_tail(partial.astype(np.complex128), sweeps=4, tail=64)
        est = 8.0 * delta + 4e-15
        if est <= tol or m >= 1 << 16:
            if est > tol:
                raise NonConvergence(
                    f"L(1, chi{key}) stalled at {est:.3e}",
                    value=val, error_estimate=est, terms_used=2 * m)
            return EvalResult(value=complex(val.real), terms_used=2 * m,
                              error_estimate=est)
        m *= 2


def l_series(chi, s: int, params: SeriesParams | None = None) -> EvalResult:
    """L(s, chi) = sum_{k>=1} chi(k) k^{-s} for the two real mod-8 characters.

    chi1: +1 at 1,3 and -1 at 5,7 (odd);  chi2: +1 at 1,7 and -1 at 3,5 (even).
    Integer s >= 1; s >= 2 goes through 8^{-s} sum_r chi(r) zeta(s, r/8).
    """
    params = params or DEFAULT_PARAMS
    key = _chi_key(chi)
    _check_s(s, 1, "l_series")
    if s == 1:
        # closed forms; the block-accelerated numeric route (_l1_blocks)
        # stays available as an independent cross-check
        if key == 1:
            v = math.pi * 2.0 ** -1.5            # pi / (2 sqrt 2)
        else:
            v = math.asinh(1.0) / math.sqrt(2.0)  # log(1 + sqrt 2) / sqrt 2
        return EvalResult(value=complex(v), terms_used=1,
                          error_estimate=5e-16 * v)
    table = _CHI[key]
    total = 0j
    est = 0.0
    terms = 0
    scale = 8.0 ** (-s)
    for r, sign in table.items():
        hz = hurwitz_zeta(s, r / 8.0, params)
        total += sign * hz.value
        est += hz.error_estimate
        terms += hz.terms_used
    value = scale * total
    return EvalResult(value=value, terms_used=terms,
                      error_estimate=scale * est + 4e-16 * abs(value))


def lerch_phi_i_half(s: int, params: SeriesParams | None = None) -> EvalResult:
    """Phi(i, s, 1/2) through mod-8 residue classes (independent of lerch_phi).

    Splitting k mod 4 gives
        Phi(i, s, 1/2) = 4^{-s} [zeta(s,1/8) - zeta(s,5/8)
                                 + i (zeta(s,3/8) - zeta(s,7/8))]
    for s >= 2, and the s = 1 value follows from the two mod-8 L-values:
        Phi(i, 1, 1/2) = sqrt(2) e^{i pi/4} (L(1,chi1) - i L(1,chi2)).
    """
    params = params or DEFAULT_PARAMS
    _check_s(s, 1, "lerch_phi_i_half")
    if s == 1:
        l1 = _l1_blocks(1, params)
        l2 = _l1_blocks(2, params)
        value = math.sqrt(2.0) * cmath.exp(1j * math.pi / 4.0) * (
            l1.value - 1j * l2.value)
        est = math.sqrt(2.0) * (l1.error_estimate + l2.error_estimate)
        return EvalResult(value=value, terms_used=l1.terms_used + l2.terms_used,
                          error_estimate=est + 4e-16 * abs(value))
    scale = 4.0 ** (-s)
    parts = [hurwitz_zeta(s, r / 8.0, params) for r in (1, 5, 3, 7)]
    value = scale * ((parts[0].value - parts[1].value)
                     + 1j * (parts[2].value - parts[3].value))
    est = scale * sum(p.error_estimate for p in parts)
    terms = sum(p.terms_used for p in parts)
    return EvalResult(value=value, terms_used=terms,
                      error_estimate=est + 4e-16 * abs(value))
