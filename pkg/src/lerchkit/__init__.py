"""Numerics for the Lerch transcendent family with a self-verifying suite.

Three layers:

* exact integer/rational arithmetic for Bernoulli and Euler numbers and
  polynomials (:mod:`lerchkit.bernoulli_euler`);
* floating-point evaluators for the Hurwitz zeta, Dirichlet beta,
  polylogarithm, Lerch Phi, and mod-8 L-series functions
  (:mod:`lerchkit.special`), plus Mellin-transform quadrature routes
  (:mod:`lerchkit.mellin`) that never touch the series code;
* identity checks that pit independent evaluation routes against each
  other (:mod:`lerchkit.identities`, :mod:`lerchkit.series_catalog`),
  collected into a deterministic suite (:mod:`lerchkit.suite`) behind the
  ``lerchkit`` command line (:mod:`lerchkit.cli`).

Set ``LERCHKIT_BACKEND=numpy`` or ``numba`` before import to pin the
kernel backend; by default numba is used when importable.
"""

from .bernoulli_euler import (
    bernoulli_numbers,
    bernoulli_polynomial,
    check_euler_number_identity,
    euler_numbers,
    euler_polynomial,
)
from .checks import CheckResult
from .errors import DomainError, LerchkitError, NonConvergence, UnknownSeries
from .identities import (
    beta_even_series,
    beta_recurrence,
    companion_beta_series,
    even_zeta_power_sum,
    l_series_relations,
    master_bernoulli,
    master_euler,
    omega4_real_part_even,
    omega4_real_part_odd,
    reflection_pair,
    zeta_from_beta,
    zeta_odd_series,
)
from .mellin import (
    brute_force_lerch,
    mellin_phi_check,
    mellin_transform,
    strip_shift_check,
)
from .series_catalog import (
    CATALOG,
    ConvergenceProfile,
    SeriesSpec,
    catalog,
    convergence_profile,
    evaluate_named_series,
    get_series,
    reference_value,
    series_check,
    series_names,
)
from .special import (
    EvalResult,
    ExactPiForm,
    SeriesParams,
    beta_odd_exact,
    beta_odd_float,
    dirichlet_beta,
    hurwitz_zeta,
    l_series,
    lerch_phi,
    lerch_phi_direct_sum,
    lerch_phi_i_half,
    params_for_tolerance,
    polylog,
    polylog_unit,
    riemann_zeta,
    riemann_zeta_even,
    zeta_even_float,
)
from .suite import SuiteReport, run_suite, suite_check_names

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # errors
    "LerchkitError", "DomainError", "NonConvergence", "UnknownSeries",
    # exact arithmetic
    "bernoulli_numbers", "euler_numbers", "bernoulli_polynomial",
    "euler_polynomial", "check_euler_number_identity",
    # evaluators
    "SeriesParams", "params_for_tolerance", "EvalResult", "ExactPiForm",
    "riemann_zeta", "riemann_zeta_even", "zeta_even_float",
    "hurwitz_zeta", "dirichlet_beta", "beta_odd_exact", "beta_odd_float",
    "polylog", "polylog_unit", "lerch_phi", "lerch_phi_direct_sum",
    "lerch_phi_i_half", "l_series",
    # quadrature routes
    "brute_force_lerch", "mellin_transform", "mellin_phi_check",
    "strip_shift_check",
    # identity checks
    "CheckResult", "master_bernoulli", "master_euler", "even_zeta_power_sum",
    "omega4_real_part_odd", "omega4_real_part_even", "beta_recurrence",
    "zeta_from_beta", "beta_even_series", "zeta_odd_series",
    "companion_beta_series", "l_series_relations", "reflection_pair",
    # series catalog
    "SeriesSpec", "ConvergenceProfile", "CATALOG", "catalog", "series_names",
    "get_series", "evaluate_named_series", "convergence_profile",
    "reference_value", "series_check",
    # suite
    "SuiteReport", "run_suite", "suite_check_names",
]
