"""Verification suite: every identity check run over its documented grid.

The suite is a flat list of entries, each naming one check at one grid
point.  ``run_suite`` executes the (optionally filtered) entries, applies
a uniform tolerance override when one is given, and returns a
``SuiteReport`` whose check list is sorted by (name, parameters) so that
two runs with the same flags produce identical output apart from
``wall_time``.

Tolerance semantics: every entry carries the tolerance documented for its
grid (1e-9 for the floating identities, 1e-7 for boundary stress points,
1e-12 for the exact-backed finite sums, 1e-10 for reflection and catalog
checks, 1e-8 for the quadrature cross-checks).  Passing ``tolerance=``
replaces all of them with a single value; the checks then derive their
internal series accuracy from it, so loose tolerances also run faster.
"""

from __future__ import annotations

import fnmatch
import json
import math
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Sequence

from .checks import CheckResult
from .errors import NonConvergence
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
from .mellin import mellin_phi_check, strip_shift_check
from .series_catalog import series_check, series_names
from .special import SeriesParams, params_for_tolerance

__all__ = ["SuiteReport", "run_suite", "suite_check_names", "json_safe"]

_PI = math.pi

# Grid shared by both master identities: moderate angles on both sides of
# zero and b values spanning the unit interval (b = 1 exercises the
# endpoint where the Hurwitz head reduces to the ordinary zeta).
_PHI_GRID = (_PI / 4, -_PI / 4, _PI / 2, -_PI / 2, 2 * _PI / 3, -2 * _PI / 3)
_B_GRID = (1.0, 0.75, 0.5, 0.25)

_OMEGA_GRID = (-2.0, 2.0, 3.0, 4.0, 8.0)
_COMPANION_OMEGA = (-2.0, 3.0, 4.0, 8.0)

# Reflection symmetry needs b strictly inside (0,1); keep the grid at the
# sizes where the absolute 1e-10 budget holds with two orders of margin
# (the finite binomial sums amplify rounding roughly like n! phi^-n).
_REFL_PHI = (_PI / 4, 2 * _PI / 3)
_REFL_B = (0.25, 0.75)

_MELLIN_A = (1.0, -1.0, 1j, complex(math.cos(_PI / 3), math.sin(_PI / 3)), 0.5)
_MELLIN_B = (1.0, 0.5, 0.25)

_STRIP_BERNOULLI_PHI = (_PI / 2, -2 * _PI / 3, 1.5 * _PI)
_STRIP_EULER_PHI = (_PI / 2, -_PI / 3, 0.8 * _PI)

GRID_NOTES: dict[str, str] = {
    "master_bernoulli": "n=1..5 x phi={+-pi/4,+-pi/2,+-2pi/3} x b={1,3/4,1/2,1/4} @1e-9; "
                        "stress n={1,3,5} x phi=+-1.9pi x b={1,1/2} @1e-7",
    "master_euler": "n=0..5 x phi={+-pi/4,+-pi/2,+-2pi/3} x b={1,3/4,1/2,1/4} @1e-9; "
                    "stress n={0,2,4} x phi=+-0.95pi x b={1,1/2} @1e-7",
    "even_zeta_power_sum": "n=1..5 x omega={-2,2,3,4,8} @1e-9",
    "omega4_real_part_odd": "n=0..5 @1e-9",
    "omega4_real_part_even": "n=1..5 @1e-9",
    "beta_recurrence": "n=1..10 @1e-12 (absolute)",
    "zeta_from_beta": "n=0..5 @1e-12",
    "beta_even_series": "n=0..5 @1e-9",
    "zeta_odd_series": "n=1..5 @1e-9",
    "companion_beta_series": "n=1..5 x omega={-2,3,4,8} @1e-9",
    "l_series_relation_odd": "n=0..4 @1e-9",
    "l_series_relation_even": "n=0..4 @1e-9",
    "reflection_*": "kind x n<=3 x phi={pi/4,2pi/3} x b={1/4,3/4} @1e-10 (absolute)",
    "mellin_phi": "a={1,-1,i,e^(i pi/3),1/2} x s=1..5 (s>=2 for a=1) x b={1,1/2,1/4} @1e-8",
    "strip_shift_*": "bernoulli n=1..3, euler n=0..2 x three phi x b={1,1/2,1/4} @1e-8",
    "series_*": "all catalog entries vs brute-force references @1e-10",
}


def json_safe(value: Any) -> Any:
    """Map a params/report value onto plain JSON types (complex -> [re, im])."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, (int, float, str)):
        return value
    if isinstance(value, complex):
        return [value.real, value.imag]
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, dict):
        return {str(k): json_safe(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [json_safe(v) for v in value]
    return str(value)


def _params_key(params: dict[str, Any]) -> str:
    return json.dumps(json_safe(params), sort_keys=True)


@dataclass(frozen=True)
class _Entry:
    """One check at one grid point, runnable with overridden settings."""

    name: str
    default_tol: float
    echo: dict[str, Any]          # grid point, echoed if the check raises
    fn: Callable[..., Any]
    args: tuple[Any, ...]
    pick: int | None = None       # index for checks returning a pair

    def run(self, tolerance: float | None, max_terms: int | None) -> CheckResult:
        tol = self.default_tol if tolerance is None else tolerance
        params: SeriesParams | None = None
        if max_terms is not None:
            params = params_for_tolerance(tol, max_terms)
        try:
            out = self.fn(*self.args, tol=tol, params=params)
        except NonConvergence as exc:
            nan = complex(math.nan, 0.0)
            return CheckResult(name=self.name, lhs=nan, rhs=nan, tol=tol,
                               params={**self.echo, "error": str(exc)})
        if self.pick is not None:
            out = out[self.pick]
        return out


def _build_entries() -> list[_Entry]:
    entries: list[_Entry] = []

    def add(fn: Callable[..., Any], name: str, default_tol: float,
            echo: dict[str, Any], *args: Any, pick: int | None = None) -> None:
        entries.append(_Entry(name=name, default_tol=default_tol, echo=echo,
                              fn=fn, args=args, pick=pick))

    # -- master identities, documented grid -------------------------------
    for n in range(1, 6):
        for phi in _PHI_GRID:
            for b in _B_GRID:
                add(master_bernoulli, "master_bernoulli", 1e-9,
                    {"n": n, "phi": phi, "b": b}, n, phi, b)
    for n in range(0, 6):
        for phi in _PHI_GRID:
            for b in _B_GRID:
                add(master_euler, "master_euler", 1e-9,
                    {"n": n, "phi": phi, "b": b}, n, phi, b)

    # -- boundary stress at 95% of the domain radius ----------------------
    for n in (1, 3, 5):
        for phi in (1.9 * _PI, -1.9 * _PI):
            for b in (1.0, 0.5):
                add(master_bernoulli, "master_bernoulli", 1e-7,
                    {"n": n, "phi": phi, "b": b}, n, phi, b)
    for n in (0, 2, 4):
        for phi in (0.95 * _PI, -0.95 * _PI):
            for b in (1.0, 0.5):
                add(master_euler, "master_euler", 1e-7,
                    {"n": n, "phi": phi, "b": b}, n, phi, b)

    # -- even-zeta power sums (corrected form only) ------------------------
    for n in range(1, 6):
        for omega in _OMEGA_GRID:
            add(even_zeta_power_sum, "even_zeta_power_sum", 1e-9,
                {"n": n, "omega": omega}, n, omega)

    # -- omega = 4 real-part relations -------------------------------------
    for n in range(0, 6):
        add(omega4_real_part_odd, "omega4_real_part_odd", 1e-9, {"n": n}, n)
    for n in range(1, 6):
        add(omega4_real_part_even, "omega4_real_part_even", 1e-9, {"n": n}, n)

    # -- finite beta/zeta combinations --------------------------------------
    for n in range(1, 11):
        add(beta_recurrence, "beta_recurrence", 1e-12, {"n": n}, n)
    for n in range(0, 6):
        add(zeta_from_beta, "zeta_from_beta", 1e-12, {"n": n}, n)
    for n in range(0, 6):
        add(beta_even_series, "beta_even_series", 1e-9, {"n": n}, n)
    for n in range(1, 6):
        add(zeta_odd_series, "zeta_odd_series", 1e-9, {"n": n}, n)
    for n in range(1, 6):
        for omega in _COMPANION_OMEGA:
            add(companion_beta_series, "companion_beta_series", 1e-9,
                {"n": n, "omega": omega}, n, omega)

    # -- mod-8 L-series relations -------------------------------------------
    for n in range(0, 5):
        add(l_series_relations, "l_series_relation_odd", 1e-9,
            {"n": n, "parity": "odd"}, n, "odd")
    for n in range(0, 5):
        add(l_series_relations, "l_series_relation_even", 1e-9,
            {"n": n, "parity": "even"}, n, "even")

    # -- reflection symmetries ------------------------------------------------
    for kind, n_lo in (("bernoulli", 1), ("euler", 0)):
        for n in range(n_lo, n_lo + 3):
            for phi in _REFL_PHI:
                for b in _REFL_B:
                    echo = {"kind": kind, "n": n, "phi": phi, "b": b}
                    add(reflection_pair, f"reflection_{kind}_conj", 1e-10,
                        echo, kind, n, phi, b, pick=0)
                    add(reflection_pair, f"reflection_{kind}_flip", 1e-10,
                        echo, kind, n, phi, b, pick=1)

    # -- quadrature cross-checks ----------------------------------------------
    for a in _MELLIN_A:
        for s in range(1, 6):
            if a == 1.0 and s < 2:
                continue
            for b in _MELLIN_B:
                add(mellin_phi_check, "mellin_phi", 1e-8,
                    {"a": a, "s": s, "b": b}, a, s, b)
    for n in (1, 2, 3):
        for phi in _STRIP_BERNOULLI_PHI:
            for b in _MELLIN_B:
                add(strip_shift_check, "strip_shift_bernoulli", 1e-8,
                    {"kind": "bernoulli", "n": n, "phi": phi, "b": b},
                    "bernoulli", n, phi, b)
    for n in (0, 1, 2):
        for phi in _STRIP_EULER_PHI:
            for b in _MELLIN_B:
                add(strip_shift_check, "strip_shift_euler", 1e-8,
                    {"kind": "euler", "n": n, "phi": phi, "b": b},
                    "euler", n, phi, b)

    # -- catalog entries vs brute-force references ------------------------------
    for name in series_names():
        add(series_check, f"series_{name}", 1e-10, {"series": name}, name)

    return entries


def suite_check_names() -> tuple[str, ...]:
    """Distinct check names in the default suite, sorted."""
    return tuple(sorted({e.name for e in _build_entries()}))


@dataclass(frozen=True)
class SuiteReport:
    """Outcome of a suite run, ordered deterministically."""

    checks: tuple[CheckResult, ...]
    pass_count: int
    fail_count: int
    wall_time: float
    config: dict[str, Any]

    @property
    def ok(self) -> bool:
        return self.fail_count == 0

    def to_dict(self) -> dict[str, Any]:
        """JSON-ready document; floats survive a round trip via repr."""
        return {
            "config": json_safe(self.config),
            "pass_count": self.pass_count,
            "fail_count": self.fail_count,
            "wall_time": self.wall_time,
            "checks": [
                {
                    "name": c.name,
                    "params": json_safe(c.params),
                    "lhs": [c.lhs.real, c.lhs.imag],
                    "rhs": [c.rhs.real, c.rhs.imag],
                    "abs_err": c.abs_err,
                    "rel_err": c.rel_err,
                    "tol": c.tol,
                    "absolute": c.absolute,
                    "pass": c.passed,
                }
                for c in self.checks
            ],
        }


def run_suite(filter_glob: str | None = None,
              tolerance: float | None = None,
              max_terms: int | None = None) -> SuiteReport:
    """Run the (optionally filtered) verification suite.

    ``filter_glob`` matches check names (fnmatch syntax).  ``tolerance``
    replaces every entry's documented tolerance; ``max_terms`` caps the
    series evaluators underneath.  Checks that fail to converge are
    reported as failed checks (NaN sides), not exceptions.
    """
    entries = _build_entries()
    if filter_glob is not None:
        entries = [e for e in entries if fnmatch.fnmatchcase(e.name, filter_glob)]
    start = time.perf_counter()
    results = [entry.run(tolerance, max_terms) for entry in entries]
    wall = time.perf_counter() - start
    results.sort(key=lambda c: (c.name, _params_key(c.params)))
    passed = sum(1 for c in results if c.passed)
    config: dict[str, Any] = {
        "filter": filter_glob,
        "tolerance": tolerance,
        "max_terms": max_terms,
        "entries": len(results),
        "grids": GRID_NOTES,
    }
    return SuiteReport(checks=tuple(results), pass_count=passed,
                       fail_count=len(results) - passed, wall_time=wall,
                       config=config)
