"""Dual-route checks for the recurrence identities tying zeta, beta and Lerch values.

Every public function evaluates one identity twice — once per side, through
genuinely different code paths — and returns the two values in a
:class:`~lerchkit.checks.CheckResult`.  The two routes never share an
intermediate quantity:

* "evaluator" route: `hurwitz_zeta`, `lerch_phi`, `dirichlet_beta`,
  `polylog_unit`, `l_series` (Euler–Maclaurin, accelerated alternating sums,
  sequence extrapolation, quadrature);
* "coefficient" route: finite or rapidly convergent sums whose ingredients are
  exact Bernoulli/Euler rationals (`scaled_poly_floats`, `zeta_even_float`,
  `beta_odd_float`).

Conventions used throughout:

* `sum over k >= 0 of zeta(2k) * x**k` style series always include the k = 0
  term with zeta(0) = -1/2;
* the two "master" sums are, for integer n and 0 < |phi| < 2*pi (Bernoulli
  family) or 0 < |phi| < pi (Euler family), with w = i*phi and a = exp(-i*phi):

      S_B(n, phi, b) = n! w**-n zeta(n+1, b)
                       - exp(-i b phi) * sum_{k=0..n} C(n,k) w**-k k! Phi(a, k+1, b)
      S_E(n, phi, b) = n! w**-n Phi(-1, n+1, b)
                       - exp(-i b phi) * sum_{k=0..n} C(n,k) w**-k k! Phi(-a, k+1, b)

  and they equal the Bernoulli/Euler polynomial series checked by
  `master_bernoulli` / `master_euler`.
"""
from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache
from numbers import Real
from typing import Mapping, Union

from .bernoulli_euler import SCALE_BASE, euler_numbers, scaled_poly_floats
from .checks import CheckResult
from .errors import DomainError, NonConvergence
from .special import (
    EvalResult,
    SeriesParams,
    beta_odd_float,
    binomial,
    dirichlet_beta,
    factorial,
    hurwitz_zeta,
    l_series,
    lerch_phi,
    params_for_tolerance,
    polylog_unit,
    riemann_zeta,
    zeta_even_float,
)

__all__ = [
    "master_bernoulli",
    "master_euler",
    "even_zeta_power_sum",
    "omega4_real_part_odd",
    "omega4_real_part_even",
    "beta_recurrence",
    "zeta_from_beta",
    "beta_even_series",
    "zeta_odd_series",
    "companion_beta_series",
    "l_series_relations",
    "reflection_pair",
]

NumberLike = Union[int, float, Fraction]

_LOG2 = math.log(2.0)
_SQRT2 = math.sqrt(2.0)


# ----------------------------------------------------------------------
# small cached fronts for the evaluator route
#
# Grid runs ask for the same Phi/zeta/beta values under many different n;
# the caches only ever sit on one side of a check, so the two routes stay
# independent.
# ----------------------------------------------------------------------

@lru_cache(maxsize=None)
def _phi_cached(a: complex, s: int, b: float, params: SeriesParams) -> EvalResult:
    return lerch_phi(a, s, b, params)


@lru_cache(maxsize=None)
def _hz_cached(s: int, b: float, params: SeriesParams) -> EvalResult:
    return hurwitz_zeta(s, b, params)


@lru_cache(maxsize=None)
def _beta_cached(s: int, params: SeriesParams) -> EvalResult:
    return dirichlet_beta(s, params)


@lru_cache(maxsize=None)
def _li_cached(s: int, phi: float, params: SeriesParams) -> EvalResult:
    return polylog_unit(s, phi, params)


@lru_cache(maxsize=None)
def _l_cached(chi: int, s: int, params: SeriesParams) -> EvalResult:
    return l_series(chi, s, params)


# ----------------------------------------------------------------------
# argument validation
# ----------------------------------------------------------------------

def _require_int(n, minimum: int, who: str) -> int:
    if not isinstance(n, int) or isinstance(n, bool) or n < minimum:
        raise DomainError(f"{who} requires an integer n >= {minimum}, got {n!r}")
    return n


def _check_phi(phi, limit: float, who: str) -> float:
    try:
        phi = float(phi)
    except (TypeError, ValueError):
        raise DomainError(f"{who} requires a real phi") from None
    if not (0.0 < abs(phi) < limit) or not math.isfinite(phi):
        raise DomainError(f"{who} requires 0 < |phi| < {limit:.6g}, got {phi!r}")
    return phi


def _check_b_unit(b, who: str, *, open_right: bool = False) -> tuple[float, Fraction]:
    """Validate a real offset b in (0, 1] (or (0, 1)); return (float, Fraction)."""
    if isinstance(b, Real) and not isinstance(b, bool):
        bf = Fraction(b)
    else:
        raise DomainError(f"{who} requires a real b, got {b!r}")
    upper_ok = bf < 1 if open_right else bf <= 1
    if not (bf > 0 and upper_ok):
        rng = "(0, 1)" if open_right else "(0, 1]"
        raise DomainError(f"{who} requires b in {rng}, got {b!r}")
    return float(bf), bf


def _check_omega(omega, who: str) -> float:
    try:
        w = float(omega)
    except (TypeError, ValueError):
        raise DomainError(f"{who} requires a real omega") from None
    if not math.isfinite(w) or abs(w) <= 1.0:
        raise DomainError(f"{who} requires |omega| > 1, got {omega!r}")
    return w


def _perturb_factor(perturb: Mapping[str, float] | None, site: str) -> float:
    if not perturb:
        return 1.0
    return float(perturb.get(site, 1.0))


def _check_sites(perturb: Mapping[str, float] | None,
                 valid: frozenset[str], who: str) -> None:
    """Reject unknown perturbation sites; a tamper test that silently
    perturbs nothing would pass for the wrong reason."""
    if perturb:
        unknown = set(perturb) - valid
        if unknown:
            raise DomainError(
                f"{who}: unknown perturbation site(s) {sorted(unknown)}; "
                f"valid sites are {sorted(valid)}")


_ODD_SITES = frozenset({"lhs_beta", "lhs_zeta", "rhs_log2", "rhs_sum"})
_EVEN_SITES = frozenset(
    {"lhs_zeta_lead", "lhs_beta", "lhs_zeta", "rhs_log2", "rhs_sum"})


def _inner_params(params: SeriesParams | None, tol: float) -> SeriesParams:
    """Evaluator accuracy for a check at tolerance ``tol``.

    Explicitly supplied params are honoured verbatim; otherwise derive them
    from the check tolerance.
    """
    return params if params is not None else params_for_tolerance(tol)


# ----------------------------------------------------------------------
# coefficient route: Bernoulli / Euler polynomial series
# ----------------------------------------------------------------------

def _master_series(kind: str, x: Fraction, z: complex, shift: int,
                   tol: float) -> tuple[complex, int]:
    """sum_{k>=0} P_k(x) z**k / (k! (k + shift)) for the Bernoulli/Euler family.

    P_k is the Bernoulli polynomial (radius 2*pi in |z|) or the Euler
    polynomial (radius pi).  Terms come from cached float tables of
    P_k(x) * base**k / k! paired with (z/base)**k so neither factor can
    overflow; for x in [0, 1] the table entries are bounded and
    |P_k(x) z**k / k!| <= 4 * r**k with r = |z| / radius, which gives the
    geometric tail envelope used as the stopping rule.
    """
    base = SCALE_BASE[kind]
    radius = 2.0 * math.pi if kind == "bernoulli" else math.pi
    r = abs(z) / radius
    if not r < 1.0:
        raise DomainError(f"{kind} polynomial series needs |z| < {radius:.6g}")
    zq = z / base
    count = 128
    table = scaled_poly_floats(kind, x, count)
    total = 0.0 + 0.0j
    zpow = 1.0 + 0.0j
    k = 0
    cap = 6000
    while True:
        if k >= count:
            count = min(cap, count * 2)
            table = scaled_poly_floats(kind, x, count)
        term = table[k] * zpow / (k + shift)
        total += term
        zpow *= zq
        k += 1
        if k >= 8:
            envelope = 8.0 * r ** k / ((k + shift) * (1.0 - r))
            if envelope <= tol and abs(term) <= tol:
                return total, k
        if k >= cap:
            raise NonConvergence(
                f"{kind} polynomial series did not settle (|z|/radius = {r:.4f})",
                value=total, error_estimate=abs(term), terms_used=k)


# ----------------------------------------------------------------------
# evaluator route: the two master left-hand sides
# ----------------------------------------------------------------------

def _master_lhs(kind: str, n: int, phi: float, b: float,
                params: SeriesParams) -> tuple[complex, int]:
    """S_B(n, phi, b) or S_E(n, phi, b) built purely from Phi/zeta evaluators."""
    w = 1j * phi
    terms = 0
    if kind == "bernoulli":
        head = _hz_cached(n + 1, b, params)
        a = cmath.exp(-1j * phi)
    else:
        head = _phi_cached(-1.0 + 0.0j, n + 1, b, params)
        a = -cmath.exp(-1j * phi)
    terms += head.terms_used
    acc = 0.0 + 0.0j
    for k in range(n + 1):
        res = _phi_cached(a, k + 1, b, params)
        acc += binomial(n, k) * w ** (-k) * factorial(k) * res.value
        terms += res.terms_used
    value = factorial(n) * w ** (-n) * head.value - cmath.exp(-1j * b * phi) * acc
    return value, terms


def master_bernoulli(n: int, phi: float, b: NumberLike,
                     tol: float = 1e-9,
                     params: SeriesParams | None = None) -> CheckResult:
    """Check S_B(n, phi, b) against its Bernoulli-polynomial series.

    Valid for integer n >= 1, 0 < |phi| < 2*pi and real b in (0, 1].
    """
    params = _inner_params(params, tol)
    n = _require_int(n, 1, "master_bernoulli")
    phi = _check_phi(phi, 2.0 * math.pi, "master_bernoulli")
    bfl, bfr = _check_b_unit(b, "master_bernoulli")
    lhs, lhs_terms = _master_lhs("bernoulli", n, phi, bfl, params)
    rhs, rhs_terms = _master_series("bernoulli", 1 - bfr, 1j * phi, n,
                                    params.tolerance / 10.0)
    return CheckResult("master_bernoulli", lhs, rhs, tol,
                       params={"n": n, "phi": phi, "b": bfl},
                       lhs_terms=lhs_terms, rhs_terms=rhs_terms)


def master_euler(n: int, phi: float, b: NumberLike,
                 tol: float = 1e-9,
                 params: SeriesParams | None = None) -> CheckResult:
    """Check S_E(n, phi, b) against its Euler-polynomial series.

    Valid for integer n >= 0, 0 < |phi| < pi and real b in (0, 1].  The
    right-hand side is (1/2) * sum_{k>=0} E_k(1-b) (i phi)**(k+1) / (k! (k+n+1)).
    """
    params = _inner_params(params, tol)
    n = _require_int(n, 0, "master_euler")
    phi = _check_phi(phi, math.pi, "master_euler")
    bfl, bfr = _check_b_unit(b, "master_euler")
    lhs, lhs_terms = _master_lhs("euler", n, phi, bfl, params)
    z = 1j * phi
    series, rhs_terms = _master_series("euler", 1 - bfr, z, n + 1,
                                       params.tolerance / 10.0)
    rhs = 0.5 * z * series
    return CheckResult("master_euler", lhs, rhs, tol,
                       params={"n": n, "phi": phi, "b": bfl},
                       lhs_terms=lhs_terms, rhs_terms=rhs_terms)


# ----------------------------------------------------------------------
# power sums of zeta(2k) against polylogarithm data
# ----------------------------------------------------------------------

def _zeta_even_power_tail(n: int, q: float, tol: float,
                          cap: int = 200_000) -> tuple[float, int]:
    """sum_{k>=0} zeta(2k) * q**k / (2k + n) for 0 < q < 1 (zeta(0) = -1/2)."""
    total = 0.0
    qpow = 1.0
    k = 0
    while True:
        term = zeta_even_float(k) * qpow / (2 * k + n)
        total += term
        qpow *= q
        k += 1
        if k >= 6 and 1.7 * qpow / ((2 * k + n) * (1.0 - q)) <= tol:
            return total, k
        if k >= cap:
            raise NonConvergence("zeta(2k) power sum stalled",
                                 value=complex(total),
                                 error_estimate=abs(term), terms_used=k)


def even_zeta_power_sum(n: int, omega: float, corrected: bool = True,
                        tol: float = 1e-9,
                        params: SeriesParams | None = None) -> CheckResult:
    """Check sum_{k>=0} zeta(2k) / ((2k+n) omega**(2k)) against polylog data.

    For integer n >= 1 and real |omega| > 1 the sum equals

        i*pi/(2(n+1)*omega) - (1/2) log(1 - u) - (n!/2) (i*omega/(2*pi))**n zeta(n+1)
        + (1/2) sum_{k=1..n} C(n,k) k! (i*omega/(2*pi))**k Li_{k+1}(u),
        u = exp(2*pi*i/omega).

    ``corrected=False`` lowers the polylogarithm order to Li_k, a seemingly
    plausible variant that is wrong for n >= 2; it is kept so the test suite
    can demonstrate the check has teeth.
    """
    params = _inner_params(params, tol)
    n = _require_int(n, 1, "even_zeta_power_sum")
    w = _check_omega(omega, "even_zeta_power_sum")
    lhs_val, lhs_terms = _zeta_even_power_tail(n, 1.0 / (w * w),
                                               params.tolerance / 4.0)
    theta = 2.0 * math.pi / w
    u = cmath.exp(1j * theta)
    factor = 1j * w / (2.0 * math.pi)
    zr = riemann_zeta(n + 1, params)
    rhs = (1j * math.pi / (2.0 * (n + 1) * w)
           - 0.5 * cmath.log(1.0 - u)
           - 0.5 * factorial(n) * factor ** n * zr.value)
    rhs_terms = zr.terms_used
    for k in range(1, n + 1):
        order = k + 1 if corrected else k
        li = _li_cached(order, theta, params)
        rhs += 0.5 * binomial(n, k) * factorial(k) * factor ** k * li.value
        rhs_terms += li.terms_used
    name = "even_zeta_power_sum" if corrected else "even_zeta_power_sum_uncorrected"
    return CheckResult(name, complex(lhs_val), rhs, tol,
                       params={"n": n, "omega": w},
                       lhs_terms=lhs_terms, rhs_terms=rhs_terms)


def omega4_real_part_odd(n: int, tol: float = 1e-9,
                         params: SeriesParams | None = None,
                         perturb: Mapping[str, float] | None = None) -> CheckResult:
    """Real-part relation at omega = 4, odd weight (integer n >= 0).

    sum_{k=0..n} C(2n+1, 2k+1) [2**(2k+1) (-1)**k (2k+1)! / pi**(2k+1)] beta(2k+2)
    + sum_{k=1..n} C(2n+1, 2k) [2**(2k) (2**(2k)-1) (-1)**k (2k)! / (2**(4k+1) pi**(2k))] zeta(2k+1)
      = -log(2)/2 - 2 sum_{k>=0} zeta(2k) / (2**(4k) (2k+2n+1))

    Perturbation sites (for tamper tests): ``lhs_beta``, ``lhs_zeta``
    (active for n >= 1), ``rhs_log2``, ``rhs_sum``.
    """
    params = _inner_params(params, tol)
    n = _require_int(n, 0, "omega4_real_part_odd")
    _check_sites(perturb, _ODD_SITES, "omega4_real_part_odd")
    pieces: list[float] = []
    lhs_terms = 0
    for k in range(n + 1):
        coeff = (2.0 ** (2 * k + 1) * (-1.0) ** k * factorial(2 * k + 1)
                 / math.pi ** (2 * k + 1))
        coeff *= _perturb_factor(perturb, "lhs_beta")
        bres = _beta_cached(2 * k + 2, params)
        pieces.append(binomial(2 * n + 1, 2 * k + 1) * coeff * bres.value.real)
        lhs_terms += bres.terms_used
    for k in range(1, n + 1):
        coeff = (2.0 ** (2 * k) * (2.0 ** (2 * k) - 1.0) * (-1.0) ** k
                 * factorial(2 * k) / (2.0 ** (4 * k + 1) * math.pi ** (2 * k)))
        coeff *= _perturb_factor(perturb, "lhs_zeta")
        zres = _hz_cached(2 * k + 1, 1.0, params)
        pieces.append(binomial(2 * n + 1, 2 * k) * coeff * zres.value.real)
        lhs_terms += zres.terms_used
    lhs = math.fsum(pieces)
    tail, rhs_terms = _zeta_even_power_tail(2 * n + 1, 1.0 / 16.0,
                                            params.tolerance / 4.0)
    rhs = (-0.5 * _perturb_factor(perturb, "rhs_log2") * _LOG2
           - 2.0 * _perturb_factor(perturb, "rhs_sum") * tail)
    return CheckResult("omega4_real_part_odd", complex(lhs), complex(rhs), tol,
                       params={"n": n},
                       lhs_terms=lhs_terms, rhs_terms=rhs_terms)


def omega4_real_part_even(n: int, tol: float = 1e-9,
                          params: SeriesParams | None = None,
                          perturb: Mapping[str, float] | None = None) -> CheckResult:
    """Real-part relation at omega = 4, even weight (integer n >= 1).

    (-1)**n (2/pi)**(2n) (2n)! zeta(2n+1)
    + sum_{k=1..n} C(2n, 2k-1) [pi**(1-2k) (-1)**(1-k) (2k-1)! / 2**(1-2k)] beta(2k)
    + sum_{k=1..n} C(2n, 2k) [2**(2k) (2**(2k)-1) (-1)**k (2k)! / (2**(4k+1) pi**(2k))] zeta(2k+1)
      = -log(2)/2 - 2 sum_{k>=0} zeta(2k) / (2**(4k) (2k+2n))

    Perturbation sites: ``lhs_zeta_lead``, ``lhs_beta``, ``lhs_zeta``
    (the last is active for n >= 1), ``rhs_log2``, ``rhs_sum``.
    """
    params = _inner_params(params, tol)
    n = _require_int(n, 1, "omega4_real_part_even")
    _check_sites(perturb, _EVEN_SITES, "omega4_real_part_even")
    zlead = _hz_cached(2 * n + 1, 1.0, params)
    pieces: list[float] = [
        (-1.0) ** n * (2.0 / math.pi) ** (2 * n) * factorial(2 * n)
        * _perturb_factor(perturb, "lhs_zeta_lead") * zlead.value.real]
    lhs_terms = zlead.terms_used
    for k in range(1, n + 1):
        coeff = (math.pi ** (1 - 2 * k) * (-1.0) ** (1 - k) * factorial(2 * k - 1)
                 / 2.0 ** (1 - 2 * k))
        coeff *= _perturb_factor(perturb, "lhs_beta")
        bres = _beta_cached(2 * k, params)
        pieces.append(binomial(2 * n, 2 * k - 1) * coeff * bres.value.real)
        lhs_terms += bres.terms_used
        coeff = (2.0 ** (2 * k) * (2.0 ** (2 * k) - 1.0) * (-1.0) ** k
                 * factorial(2 * k) / (2.0 ** (4 * k + 1) * math.pi ** (2 * k)))
        coeff *= _perturb_factor(perturb, "lhs_zeta")
        zres = _hz_cached(2 * k + 1, 1.0, params)
        pieces.append(binomial(2 * n, 2 * k) * coeff * zres.value.real)
        lhs_terms += zres.terms_used
    lhs = math.fsum(pieces)
    tail, rhs_terms = _zeta_even_power_tail(2 * n, 1.0 / 16.0,
                                            params.tolerance / 4.0)
    rhs = (-0.5 * _perturb_factor(perturb, "rhs_log2") * _LOG2
           - 2.0 * _perturb_factor(perturb, "rhs_sum") * tail)
    return CheckResult("omega4_real_part_even", complex(lhs), complex(rhs), tol,
                       params={"n": n},
                       lhs_terms=lhs_terms, rhs_terms=rhs_terms)


# ----------------------------------------------------------------------
# finite beta relations
# ----------------------------------------------------------------------

def beta_recurrence(n: int, tol: float = 1e-12,
                    params: SeriesParams | None = None) -> CheckResult:
    """Check sum_{k=0..n} 2**(2k) (-1)**k beta(2k+1) / ((2n-2k)! pi**(2k)) = 0.

    The left side uses numerically evaluated beta values; the right side is
    the same combination collapsed through the closed form of beta(2k+1),
    which reduces to (pi/4) * sum_k E_{2k} / ((2k)! (2n-2k)!) — an exact
    rational multiple of pi that the Euler numbers force to vanish.  A
    transcription error on either route breaks the agreement.
    """
    params = _inner_params(params, tol)
    n = _require_int(n, 1, "beta_recurrence")
    lhs = 0.0
    lhs_terms = 0
    for k in range(n + 1):
        bres = _beta_cached(2 * k + 1, params)
        lhs += (4.0 ** k * (-1.0) ** k * bres.value.real
                / (factorial(2 * n - 2 * k) * math.pi ** (2 * k)))
        lhs_terms += bres.terms_used
    eul = euler_numbers(2 * n)
    residue = sum(Fraction(eul[2 * k], factorial(2 * k) * factorial(2 * n - 2 * k))
                  for k in range(n + 1))
    rhs = float(residue) * math.pi / 4.0
    return CheckResult("beta_recurrence", complex(lhs), complex(rhs), tol,
                       params={"n": n, "exact_zero": residue == 0},
                       lhs_terms=lhs_terms, rhs_terms=n + 1, absolute=True)


def zeta_from_beta(n: int, tol: float = 1e-12,
                   params: SeriesParams | None = None) -> CheckResult:
    """Check the finite formula for zeta(2n+2) in terms of beta(1..2n+1).

    zeta(2n+2) = [(-1)**n pi**(2n+1) / (2**(2n+2)-1)]
                 * sum_{k=0..n} 2**(2k+1) (-1)**k beta(2k+1) / ((2n-2k+1)! pi**(2k))

    for integer n >= 0.  The left side is the exact Bernoulli closed form.
    """
    params = _inner_params(params, tol)
    n = _require_int(n, 0, "zeta_from_beta")
    lhs = zeta_even_float(n + 1)
    acc = 0.0
    rhs_terms = 0
    for k in range(n + 1):
        bres = _beta_cached(2 * k + 1, params)
        acc += (2.0 ** (2 * k + 1) * (-1.0) ** k * bres.value.real
                / (factorial(2 * n - 2 * k + 1) * math.pi ** (2 * k)))
        rhs_terms += bres.terms_used
    rhs = (-1.0) ** n * math.pi ** (2 * n + 1) / (2.0 ** (2 * n + 2) - 1.0) * acc
    return CheckResult("zeta_from_beta", complex(lhs), complex(rhs), tol,
                       params={"n": n}, lhs_terms=1, rhs_terms=rhs_terms)


def _half_weighted_zeta_tail(n: int, scale: float, tol: float) -> tuple[float, int]:
    """sum_{k>=0} scale * (2**(2k-1)-1) zeta(2k) / (2**(4k) (2k+n)).

    The weight (2**(2k-1)-1)/2**(4k) = (4**k - 2)/(2*16**k) is bounded by
    4**(-k)/2, so the tail envelope is geometric with ratio 1/4.
    """
    total = 0.0
    k = 0
    while True:
        weight = (0.5 * 4.0 ** k - 1.0) / 16.0 ** k
        term = scale * weight * zeta_even_float(k) / (2 * k + n)
        total += term
        k += 1
        if k >= 6 and abs(scale) * 1.2 * 4.0 ** (-k) / (2 * k + n) <= tol:
            return total, k


def beta_even_series(n: int, tol: float = 1e-9,
                     params: SeriesParams | None = None) -> CheckResult:
    """Check the finite beta(2k+2) combination against a zeta(2k) series.

    sum_{k=0..n} C(2n+1, 2k+1) [2**(2k+1) (2k+1)! / pi**(2k+1)] (-1)**k beta(2k+2)
      = sum_{k>=0} (2**(2k-1)-1) zeta(2k) / (2**(4k-1) (2k+2n+1))

    for integer n >= 0.
    """
    params = _inner_params(params, tol)
    n = _require_int(n, 0, "beta_even_series")
    lhs = 0.0
    lhs_terms = 0
    for k in range(n + 1):
        bres = _beta_cached(2 * k + 2, params)
        lhs += (binomial(2 * n + 1, 2 * k + 1)
                * 2.0 ** (2 * k + 1) * factorial(2 * k + 1) / math.pi ** (2 * k + 1)
                * (-1.0) ** k * bres.value.real)
        lhs_terms += bres.terms_used
    rhs, rhs_terms = _half_weighted_zeta_tail(2 * n + 1, 2.0,
                                              params.tolerance / 4.0)
    return CheckResult("beta_even_series", complex(lhs), complex(rhs), tol,
                       params={"n": n}, lhs_terms=lhs_terms, rhs_terms=rhs_terms)


def zeta_odd_series(n: int, tol: float = 1e-9,
                    params: SeriesParams | None = None) -> CheckResult:
    """Check the rapidly convergent representation of zeta(2n+1).

    zeta(2n+1) = [(-1)**n pi**(2n) / ((2n)! (2**(2n+1)-1))] *
        ( sum_{k>=0} (2**(2k-1)-1) zeta(2k) / (2**(4k-2) (2k+2n))
          - sum_{k=0..n-1} C(2n, 2k+1) [2**(2k+2) (2k+1)! / pi**(2k+1)] (-1)**k beta(2k+2) )

    for integer n >= 1, compared against the Euler–Maclaurin value of
    zeta(2n+1).
    """
    params = _inner_params(params, tol)
    n = _require_int(n, 1, "zeta_odd_series")
    head = _hz_cached(2 * n + 1, 1.0, params)
    lhs = head.value.real
    lhs_terms = head.terms_used
    tail, rhs_terms = _half_weighted_zeta_tail(2 * n, 4.0, params.tolerance / 4.0)
    acc = tail
    for k in range(n):
        bres = _beta_cached(2 * k + 2, params)
        acc -= (binomial(2 * n, 2 * k + 1)
                * 2.0 ** (2 * k + 2) * factorial(2 * k + 1) / math.pi ** (2 * k + 1)
                * (-1.0) ** k * bres.value.real)
        rhs_terms += bres.terms_used
    rhs = ((-1.0) ** n * math.pi ** (2 * n)
           / (factorial(2 * n) * (2.0 ** (2 * n + 1) - 1.0)) * acc)
    return CheckResult("zeta_odd_series", complex(lhs), complex(rhs), tol,
                       params={"n": n}, lhs_terms=lhs_terms, rhs_terms=rhs_terms)


# ----------------------------------------------------------------------
# beta power sums against Lerch data
# ----------------------------------------------------------------------

def _beta_odd_power_tail(n: int, omega: float, tol: float,
                         cap: int = 200_000) -> tuple[float, int]:
    """sum_{k>=0} beta(2k+1) / (omega**(2k+1) (2k+n+1)) via exact beta values.

    beta(2k+1) < 1 for every k, so the tail from index k is below
    q**k / (omega (2k+n+1) (1-q)) with q = omega**(-2).
    """
    q = 1.0 / (omega * omega)
    inv_omega = 1.0 / omega
    total = 0.0
    wpow = inv_omega
    k = 0
    while True:
        total += beta_odd_float(k) * wpow / (2 * k + n + 1)
        wpow *= q
        k += 1
        if k >= 4 and abs(wpow) / ((2 * k + n + 1) * (1.0 - q)) <= tol:
            return total, k
        if k >= cap:
            raise NonConvergence("beta(2k+1) power sum stalled",
                                 value=complex(total),
                                 error_estimate=abs(wpow), terms_used=k)


def companion_beta_series(n: int, omega: float, tol: float = 1e-9,
                          params: SeriesParams | None = None) -> CheckResult:
    """Check the beta(2k+1) power sum against shifted Lerch values.

    i * sum_{k>=0} beta(2k+1) / (omega**(2k+1) (2k+n+1))
      = -n! (2*omega*i/pi)**n beta(n+1)
        + (1/2) e**(i*pi/(2*omega)) sum_{k=0..n} C(n,k) (i*omega/pi)**k k!
              Phi(-e**(i*pi/omega), k+1, 1/2)

    for integer n >= 1 and real |omega| > 1.
    """
    params = _inner_params(params, tol)
    n = _require_int(n, 1, "companion_beta_series")
    w = _check_omega(omega, "companion_beta_series")
    tail, lhs_terms = _beta_odd_power_tail(n, w, params.tolerance / 4.0)
    lhs = 1j * tail
    bres = _beta_cached(n + 1, params)
    rhs = -factorial(n) * (2j * w / math.pi) ** n * bres.value
    rhs_terms = bres.terms_used
    a = -cmath.exp(1j * math.pi / w)
    factor = 1j * w / math.pi
    acc = 0.0 + 0.0j
    for k in range(n + 1):
        pres = _phi_cached(a, k + 1, 0.5, params)
        acc += binomial(n, k) * factor ** k * factorial(k) * pres.value
        rhs_terms += pres.terms_used
    rhs += 0.5 * cmath.exp(1j * math.pi / (2.0 * w)) * acc
    return CheckResult("companion_beta_series", lhs, rhs, tol,
                       params={"n": n, "omega": w},
                       lhs_terms=lhs_terms, rhs_terms=rhs_terms)


def l_series_relations(n: int, parity: str, tol: float = 1e-9,
                       params: SeriesParams | None = None) -> CheckResult:
    """Check the mod-8 L-series combinations against beta(2k+1) power sums.

    parity="odd" (integer n >= 0):
      sum_{k=0..n-1} C(2n, 2k+1) (-1)**k 2**(4k+5/2) (2k+1)! / pi**(2k+1) * L(2k+2, chi1)
      + sum_{k=0..n} C(2n, 2k) (-1)**k 2**(4k+1/2) (2k)! / pi**(2k) * L(2k+1, chi2)
        = sum_{k>=0} beta(2k+1) / (2**(2k) (2k+2n+1))

    parity="even" (integer n >= 0):
      (-1)**(n-1) 2**(4n+3) (2n+1)! / pi**(2n+1) * beta(2n+2)
      + sum_{k=0..n} C(2n+1, 2k+1) (-1)**k 2**(4k+5/2) (2k+1)! / pi**(2k+1) * L(2k+2, chi1)
      + sum_{k=0..n} C(2n+1, 2k) (-1)**k 2**(4k+1/2) (2k)! / pi**(2k) * L(2k+1, chi2)
        = sum_{k>=0} beta(2k+1) / (2**(2k) (2k+2n+2))

    chi1 and chi2 are the two real non-principal characters mod 8.
    """
    params = _inner_params(params, tol)
    n = _require_int(n, 0, "l_series_relations")
    if parity not in ("odd", "even"):
        raise DomainError("l_series_relations parity must be 'odd' or 'even'")
    pieces: list[float] = []
    lhs_terms = 0
    if parity == "odd":
        top1, top2 = n - 1, n
        choose = lambda j: binomial(2 * n, j)
        shift = 2 * n  # rhs denominators run over 2k + shift + 1
    else:
        top1 = top2 = n
        choose = lambda j: binomial(2 * n + 1, j)
        shift = 2 * n + 1
        blead = _beta_cached(2 * n + 2, params)
        pieces.append((-1.0) ** (n - 1) * 2.0 ** (4 * n + 3) * factorial(2 * n + 1)
                      / math.pi ** (2 * n + 1) * blead.value.real)
        lhs_terms += blead.terms_used
    for k in range(top1 + 1):
        lres = _l_cached(1, 2 * k + 2, params)
        pieces.append(choose(2 * k + 1) * (-1.0) ** k * 16.0 ** k * 4.0 * _SQRT2
                      * factorial(2 * k + 1) / math.pi ** (2 * k + 1) * lres.value.real)
        lhs_terms += lres.terms_used
    for k in range(top2 + 1):
        lres = _l_cached(2, 2 * k + 1, params)
        pieces.append(choose(2 * k) * (-1.0) ** k * 16.0 ** k * _SQRT2
                      * factorial(2 * k) / math.pi ** (2 * k) * lres.value.real)
        lhs_terms += lres.terms_used
    lhs = math.fsum(pieces)
    rhs, rhs_terms = _beta_odd_power_tail(shift, 2.0, params.tolerance / 4.0)
    rhs *= 2.0  # beta tail helper carries 1/omega = 1/2; the relation has 2**(-2k)
    return CheckResult(f"l_series_relation_{parity}", complex(lhs), complex(rhs),
                       tol, params={"n": n, "parity": parity},
                       lhs_terms=lhs_terms, rhs_terms=rhs_terms)


# ----------------------------------------------------------------------
# reflection symmetries of the master sums
# ----------------------------------------------------------------------

def reflection_pair(kind: str, n: int, phi: float, b: NumberLike,
                    tol: float = 1e-10,
                    params: SeriesParams | None = None) -> tuple[CheckResult, CheckResult]:
    """Check the two reflection symmetries of a master sum under b -> 1-b.

    For real b in (0, 1):

      kind="bernoulli" (n >= 1, 0 < |phi| < 2*pi):
          S_B(n, phi, b) =  conj(S_B(n, phi, 1-b)) =  S_B(n, -phi, 1-b)
      kind="euler"     (n >= 0, 0 < |phi| < pi):
          S_E(n, phi, b) = -conj(S_E(n, phi, 1-b)) = -S_E(n, -phi, 1-b)

    Both equalities are checked with an absolute error bound; all three
    evaluations go through the same evaluator route at different arguments.
    """
    params = _inner_params(params, tol)
    if kind == "bernoulli":
        n = _require_int(n, 1, "reflection_pair")
        phi = _check_phi(phi, 2.0 * math.pi, "reflection_pair")
        sign = 1.0
    elif kind == "euler":
        n = _require_int(n, 0, "reflection_pair")
        phi = _check_phi(phi, math.pi, "reflection_pair")
        sign = -1.0
    else:
        raise DomainError("reflection_pair kind must be 'bernoulli' or 'euler'")
    bfl, bfr = _check_b_unit(b, "reflection_pair", open_right=True)
    brefl = float(1 - bfr)
    base, base_terms = _master_lhs(kind, n, phi, bfl, params)
    mirror, mirror_terms = _master_lhs(kind, n, phi, brefl, params)
    flipped, flipped_terms = _master_lhs(kind, n, -phi, brefl, params)
    meta = {"n": n, "phi": phi, "b": bfl}
    conj_check = CheckResult(f"reflection_{kind}_conj", base,
                             sign * mirror.conjugate(), tol, params=meta,
                             lhs_terms=base_terms, rhs_terms=mirror_terms,
                             absolute=True)
    flip_check = CheckResult(f"reflection_{kind}_flip", base, sign * flipped,
                             tol, params=meta,
                             lhs_terms=base_terms, rhs_terms=flipped_terms,
                             absolute=True)
    return conj_check, flip_check
