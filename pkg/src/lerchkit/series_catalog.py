"""Catalog of rapidly convergent series for zeta/beta/log constants.

Every entry has the shape

    value = prefactor * pi**pi_power * sqrt(2)**sqrt2_power
            * ( log2_coeff * log(2) + sum_coeff * S )

    S = sum_{k>=0} kernel(k) * halfweight(k) * poly(k)
                   / ( 2**(pow2_per_k * k) * prod_j (2k + offset_j) )

with kernel(k) = zeta(2k) (zeta(0) = -1/2) or beta(2k+1), both taken from the
exact Bernoulli/Euler closed forms, and halfweight(k) = 2**(2k-1) - 1 when
enabled.  Per index the terms shrink by an exact power of two — 1/4 or 1/16 —
which is what the convergence-profile report measures.

References for the target constants come from a different code path
entirely: multi-million-term brute-force sums (`brute_force_lerch`) or
elementary closed forms, never from the evaluators being exercised
elsewhere, so a transcription slip in either place shows up as a mismatch.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Sequence

from .checks import CheckResult
from .errors import DomainError, NonConvergence, UnknownSeries
from .mellin import brute_force_lerch
from .special import (
    DEFAULT_PARAMS,
    EvalResult,
    SeriesParams,
    beta_odd_float,
    zeta_even_float,
)

__all__ = [
    "SeriesSpec",
    "ConvergenceProfile",
    "CATALOG",
    "catalog",
    "series_names",
    "get_series",
    "evaluate_named_series",
    "convergence_profile",
    "reference_value",
    "series_check",
]


@dataclass(frozen=True)
class SeriesSpec:
    """One catalog entry; see the module docstring for the value template."""
    name: str
    description: str
    target: str                       # key understood by reference_value()
    kernel: str                       # "zeta_even" | "beta_odd"
    pow2_per_k: int                   # 2**(this * k) in the denominator
    den_offsets: tuple[int, ...]      # prod of (2k + offset)
    prefactor: Fraction
    pi_power: int = 0
    sqrt2_power: int = 0
    log2_coeff: Fraction = Fraction(0)
    sum_coeff: Fraction = Fraction(1)
    num_poly: tuple[int, ...] = (1,)  # polynomial in k, ascending coefficients
    half_weight: bool = False         # multiply terms by (2**(2k-1) - 1)

    @property
    def term_ratio(self) -> float:
        """Exact per-index decay of |term_k| (up to the slowly varying part)."""
        ratio = 2.0 ** (-self.pow2_per_k)
        if self.half_weight:
            ratio *= 4.0  # (2**(2k-1)-1) grows like 4**k / 2
        return ratio

    @property
    def digits_per_term(self) -> float:
        return -math.log10(self.term_ratio)

    @property
    def perturbation_sites(self) -> tuple[str, ...]:
        sites = ["prefactor", "sum_coeff"]
        if self.log2_coeff:
            sites.append("log2_coeff")
        sites.extend(f"poly_c{i}" for i in range(len(self.num_poly)))
        return tuple(sites)

    # ---- term machinery -------------------------------------------------

    def _kernel_value(self, k: int) -> float:
        if self.kernel == "zeta_even":
            return zeta_even_float(k)
        return beta_odd_float(k)

    def raw_term(self, k: int, poly_scale: Mapping[str, float] | None = None) -> float:
        poly = 0.0
        for i in reversed(range(len(self.num_poly))):
            c = float(self.num_poly[i])
            if poly_scale:
                c *= poly_scale.get(f"poly_c{i}", 1.0)
            poly = poly * k + c
        den = 2.0 ** (self.pow2_per_k * k)
        for off in self.den_offsets:
            den *= 2 * k + off
        weight = (0.5 * 4.0 ** k - 1.0) if self.half_weight else 1.0
        return self._kernel_value(k) * weight * poly / den

    def outer_factor(self, perturb: Mapping[str, float] | None = None) -> float:
        fac = float(self.prefactor) * math.pi ** self.pi_power
        if self.sqrt2_power:
            fac *= math.sqrt(2.0) ** self.sqrt2_power
        if perturb:
            fac *= perturb.get("prefactor", 1.0)
        return fac

    def tail_bound(self, k: int) -> float:
        """Upper bound on sum_{j>=k} |raw_term(j)| (valid for k >= 2)."""
        # kernel values are bounded by zeta(2) resp. 1; the polynomial over
        # the denominator product decays once k exceeds the polynomial degree
        poly = sum(abs(c) * k ** i for i, c in enumerate(self.num_poly))
        den = 2.0 ** (self.pow2_per_k * k)
        for off in self.den_offsets:
            den *= 2 * k + off
        weight = 0.5 * 4.0 ** k if self.half_weight else 1.0
        head = 1.7 * weight * poly / den
        r = 1.4 * self.term_ratio  # covers the slowly growing polynomial part
        return head / (1.0 - r)


# ----------------------------------------------------------------------
# the sixteen entries
# ----------------------------------------------------------------------

def _F(p: int, q: int = 1) -> Fraction:
    return Fraction(p, q)


CATALOG: tuple[SeriesSpec, ...] = (
    SeriesSpec(
        name="euler_zeta3",
        description="zeta(3) = -(4 pi^2/7) sum zeta(2k) / ((2k+1)(2k+2) 4^k)",
        target="zeta3", kernel="zeta_even", pow2_per_k=2, den_offsets=(1, 2),
        prefactor=_F(-4, 7), pi_power=2),
    SeriesSpec(
        name="zeta3_log_a",
        description="zeta(3) = (2 pi^2/9) (log 2 + 2 sum zeta(2k) / (4^k (2k+3)))",
        target="zeta3", kernel="zeta_even", pow2_per_k=2, den_offsets=(3,),
        prefactor=_F(2, 9), pi_power=2, log2_coeff=_F(1), sum_coeff=_F(2)),
    SeriesSpec(
        name="zeta3_log_b",
        description="zeta(3) = (2 pi^2/7) (log 2 + 2 sum zeta(2k) / (4^k (2k+2)))",
        target="zeta3", kernel="zeta_even", pow2_per_k=2, den_offsets=(2,),
        prefactor=_F(2, 7), pi_power=2, log2_coeff=_F(1), sum_coeff=_F(2)),
    SeriesSpec(
        name="zeta3_combined",
        description="zeta(3) = -2 pi^2 sum zeta(2k) / (4^k (2k+2)(2k+3))",
        target="zeta3", kernel="zeta_even", pow2_per_k=2, den_offsets=(2, 3),
        prefactor=_F(-2), pi_power=2),
    SeriesSpec(
        name="log2_combined",
        description="log 2 = -sum zeta(2k) (4k+13) / (4^k (2k+2)(2k+3))",
        target="log2", kernel="zeta_even", pow2_per_k=2, den_offsets=(2, 3),
        prefactor=_F(-1), num_poly=(13, 4)),
    SeriesSpec(
        name="catalan_omega4",
        description="beta(2) = -(pi/4) (log 2 + 4 sum zeta(2k) / (16^k (2k+1)))",
        target="catalan", kernel="zeta_even", pow2_per_k=4, den_offsets=(1,),
        prefactor=_F(-1, 4), pi_power=1, log2_coeff=_F(1), sum_coeff=_F(4)),
    SeriesSpec(
        name="zeta3_omega4",
        description="zeta(3) = -(2 pi^2/35) (log 2 + 4 sum zeta(2k)(2k+3) / (16^k (2k+1)(2k+2)))",
        target="zeta3", kernel="zeta_even", pow2_per_k=4, den_offsets=(1, 2),
        prefactor=_F(-2, 35), pi_power=2, log2_coeff=_F(1), sum_coeff=_F(4),
        num_poly=(3, 2)),
    SeriesSpec(
        name="beta4_omega4",
        description=("beta(4) = -(pi^3/10080) (183 log 2 + 12 sum zeta(2k)"
                     "(244k^2+732k+479) / (16^k (2k+1)(2k+2)(2k+3)))"),
        target="beta4", kernel="zeta_even", pow2_per_k=4, den_offsets=(1, 2, 3),
        prefactor=_F(-1, 10080), pi_power=3, log2_coeff=_F(183), sum_coeff=_F(12),
        num_poly=(479, 732, 244)),
    SeriesSpec(
        name="zeta5_omega4",
        description=("zeta(5) = -(pi^4/166005) (942 log 2 + 48 sum zeta(2k)"
                     "(628k^3+3140k^2+5111k+2581) / (16^k (2k+1)(2k+2)(2k+3)(2k+4)))"),
        target="zeta5", kernel="zeta_even", pow2_per_k=4, den_offsets=(1, 2, 3, 4),
        prefactor=_F(-1, 166005), pi_power=4, log2_coeff=_F(942), sum_coeff=_F(48),
        num_poly=(2581, 5111, 3140, 628)),
    SeriesSpec(
        name="beta2_half",
        description="beta(2) = pi sum (2^(2k-1)-1) zeta(2k) / (16^k (2k+1))",
        target="catalan", kernel="zeta_even", pow2_per_k=4, den_offsets=(1,),
        prefactor=_F(1), pi_power=1, half_weight=True),
    SeriesSpec(
        name="beta4_half",
        description="beta(4) = (pi^3/6) sum (2^(2k-1)-1) (k+2) zeta(2k) / (16^k (2k+1)(2k+3))",
        target="beta4", kernel="zeta_even", pow2_per_k=4, den_offsets=(1, 3),
        prefactor=_F(1, 6), pi_power=3, num_poly=(2, 1), half_weight=True),
    SeriesSpec(
        name="zeta3_half",
        description="zeta(3) = (2 pi^2/7) sum (2^(2k-1)-1) (2k+3) zeta(2k) / (16^k (2k+1)(2k+2))",
        target="zeta3", kernel="zeta_even", pow2_per_k=4, den_offsets=(1, 2),
        prefactor=_F(2, 7), pi_power=2, num_poly=(3, 2), half_weight=True),
    SeriesSpec(
        name="zeta5_half",
        description=("zeta(5) = (pi^4/186) sum (2^(2k-1)-1) (20k^2+80k+83) zeta(2k)"
                     " / (16^k (2k+1)(2k+3)(2k+4))"),
        target="zeta5", kernel="zeta_even", pow2_per_k=4, den_offsets=(1, 3, 4),
        prefactor=_F(1, 186), pi_power=4, num_poly=(83, 80, 20), half_weight=True),
    SeriesSpec(
        name="beta_sum_log",
        description="sum beta(2k+1) / (4^k (2k+1)) = log(1 + sqrt 2)",
        target="log1psqrt2", kernel="beta_odd", pow2_per_k=2, den_offsets=(1,),
        prefactor=_F(1)),
    SeriesSpec(
        name="l1chi2_sum",
        description="L(1, chi2) = (1/sqrt 2) sum beta(2k+1) / (4^k (2k+1))",
        target="l1chi2", kernel="beta_odd", pow2_per_k=2, den_offsets=(1,),
        prefactor=_F(1), sqrt2_power=-1),
    SeriesSpec(
        name="zeta_sum_log2",
        description="sum zeta(2k) / (4^k (2k+1)) = -(1/2) log 2",
        target="neg_half_log2", kernel="zeta_even", pow2_per_k=2, den_offsets=(1,),
        prefactor=_F(1)),
)

_BY_NAME = {spec.name: spec for spec in CATALOG}


def series_names() -> tuple[str, ...]:
    return tuple(spec.name for spec in CATALOG)


def get_series(name: str) -> SeriesSpec:
    try:
        return _BY_NAME[name]
    except KeyError:
        raise UnknownSeries(
            f"unknown series {name!r}; run the catalog listing (--list) "
            f"to see the {len(CATALOG)} available names") from None


def catalog() -> list[dict]:
    """Summaries of every entry (name, formula, target, decay rate)."""
    return [
        {
            "name": spec.name,
            "description": spec.description,
            "target": spec.target,
            "kernel": spec.kernel,
            "term_ratio": spec.term_ratio,
            "digits_per_term": spec.digits_per_term,
            "perturbation_sites": list(spec.perturbation_sites),
        }
        for spec in CATALOG
    ]


# ----------------------------------------------------------------------
# evaluation
# ----------------------------------------------------------------------

def evaluate_named_series(name: str, params: SeriesParams | None = None,
                          perturb: Mapping[str, float] | None = None) -> EvalResult:
    """Sum a catalog entry to the requested tolerance.

    ``perturb`` maps perturbation-site names (see
    ``SeriesSpec.perturbation_sites``) to multipliers; it exists so tests can
    prove that every printed constant in the formula is load-bearing.
    """
    spec = get_series(name)
    params = params or DEFAULT_PARAMS
    if perturb:
        unknown = set(perturb) - set(spec.perturbation_sites)
        if unknown:
            raise DomainError(
                f"{name}: unknown perturbation site(s) {sorted(unknown)}; "
                f"valid sites are {list(spec.perturbation_sites)}")
    outer = spec.outer_factor(perturb)
    sum_c = float(spec.sum_coeff) * (perturb.get("sum_coeff", 1.0) if perturb else 1.0)
    log_c = float(spec.log2_coeff) * (perturb.get("log2_coeff", 1.0) if perturb else 1.0)
    inner_tol = params.tolerance / max(1.0, abs(outer * sum_c))
    total = 0.0
    k = 0
    while True:
        total += spec.raw_term(k, perturb)
        k += 1
        if k >= 6 and spec.tail_bound(k) <= inner_tol:
            break
        if k >= min(params.max_terms, 100_000):
            raise NonConvergence(f"series {name} did not settle",
                                 value=complex(total), terms_used=k)
    value = outer * (log_c * math.log(2.0) + sum_c * total)
    est = abs(outer * sum_c) * spec.tail_bound(k) + 4e-16 * (abs(value) + 1.0)
    return EvalResult(value=complex(value), terms_used=k, error_estimate=est)


@dataclass(frozen=True)
class ConvergenceProfile:
    """Truncation-error report for one catalog entry.

    ``rows`` holds (terms_used, abs_error, correct_digits) triples where
    abs_error is the exact truncation error of the assembled value — the
    remaining tail summed forward at full precision, which stays accurate in
    relative terms long after |partial - reference| would drown in the
    reference's own noise.
    """
    name: str
    digits_per_term: float
    rows: tuple[tuple[int, float, float], ...] = field(default_factory=tuple)


def _truncation_error(spec: SeriesSpec, n_terms: int) -> float:
    """|tail| of the assembled value when the sum stops before index n_terms."""
    tail = 0.0
    k = n_terms
    while True:
        tail += spec.raw_term(k)
        k += 1
        if k - n_terms >= 4 and spec.tail_bound(k) <= 1e-4 * abs(tail):
            break
        if k - n_terms >= 600:
            break
    return abs(float(spec.outer_factor()) * float(spec.sum_coeff) * tail)


def convergence_profile(name: str,
                        checkpoints: Sequence[int] = (5, 10, 20, 40)) -> ConvergenceProfile:
    """Measured truncation error and correct digits at each checkpoint."""
    spec = get_series(name)
    pts = sorted({int(p) for p in checkpoints})
    if not pts or pts[0] < 1:
        raise DomainError("checkpoints must be positive integers")
    rows = []
    for n in pts:
        err = _truncation_error(spec, n)
        digits = -math.log10(err) if err > 0.0 else float("inf")
        rows.append((n, err, digits))
    return ConvergenceProfile(name=name, digits_per_term=spec.digits_per_term,
                              rows=tuple(rows))


# ----------------------------------------------------------------------
# independent references
# ----------------------------------------------------------------------

@lru_cache(maxsize=None)
def reference_value(key: str) -> float:
    """Target constants via brute force or elementary closed forms only."""
    if key == "zeta3":
        return brute_force_lerch(1.0, 3, 1.0).value.real
    if key == "zeta5":
        return brute_force_lerch(1.0, 5, 1.0).value.real
    if key == "catalan":
        return brute_force_lerch(-1.0, 2, 0.5).value.real / 4.0
    if key == "beta4":
        return brute_force_lerch(-1.0, 4, 0.5).value.real / 16.0
    if key == "log2":
        return math.log(2.0)
    if key == "log1psqrt2":
        return math.log1p(math.sqrt(2.0))
    if key == "l1chi2":
        return math.log1p(math.sqrt(2.0)) / math.sqrt(2.0)
    if key == "neg_half_log2":
        return -0.5 * math.log(2.0)
    raise UnknownSeries(f"unknown reference key {key!r}")


def series_check(name: str, tol: float = 1e-10,
                 params: SeriesParams | None = None) -> CheckResult:
    """CheckResult comparing a catalog entry against its independent reference."""
    spec = get_series(name)
    res = evaluate_named_series(name, params)
    ref = reference_value(spec.target)
    return CheckResult(name=f"series_{name}", lhs=res.value, rhs=complex(ref),
                       tol=tol, params={"series": name, "target": spec.target},
                       lhs_terms=res.terms_used, rhs_terms=1)
