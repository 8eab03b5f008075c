"""Command-line front end: verify, eval, and series subcommands.

Exit codes: 0 when everything passed, 1 when a check failed or an
evaluation did not converge, 2 for usage and configuration errors.
Output is deterministic for fixed flags (JSON differs only in the
``wall_time`` field between runs); no environment variables are read.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from typing import Any, Callable, Sequence

from .errors import DomainError, NonConvergence, UnknownSeries
from .series_catalog import catalog, convergence_profile, evaluate_named_series
from .special import (
    SeriesParams,
    dirichlet_beta,
    hurwitz_zeta,
    l_series,
    lerch_phi,
    polylog,
    riemann_zeta,
)
from .suite import GRID_NOTES, json_safe, run_suite, suite_check_names

__all__ = ["main", "build_parser"]


class _UsageError(Exception):
    """Bad arguments detected after argparse (unknown keys, bad values)."""


def _fmt(x: float) -> str:
    """Full-precision float formatting (17 significant digits)."""
    return f"{x:.17g}"


def _fmt_complex(z: complex) -> str:
    if z.imag == 0.0:
        return _fmt(z.real)
    return f"{_fmt(z.real)}{z.imag:+.17g}j"


# ----------------------------------------------------------------------
# key=value argument parsing for `eval`
# ----------------------------------------------------------------------

_FRACTION_RE = re.compile(r"[+-]?\d+/\d+\Z")
_COMPLEX_CHARS = re.compile(r"[0-9eEij.+\-\s]+\Z")


def _parse_scalar(text: str) -> Any:
    """int | Fraction | float | complex | str, tried in that order."""
    try:
        return int(text)
    except ValueError:
        pass
    if _FRACTION_RE.match(text):
        return Fraction(text)
    try:
        return float(text)
    except ValueError:
        pass
    if _COMPLEX_CHARS.match(text):
        try:
            return complex(text.replace("i", "j"))
        except ValueError:
            pass
    return text


def _parse_kv(pairs: Sequence[str]) -> dict[str, Any]:
    out: dict[str, Any] = {}
    for item in pairs:
        key, sep, value = item.partition("=")
        if not sep or not key:
            raise _UsageError(f"expected key=value, got {item!r}")
        if key in out:
            raise _UsageError(f"duplicate argument {key!r}")
        out[key] = _parse_scalar(value)
    return out


# Each entry: required argument names (in call order) -> callable(args, params).
_EVAL_FUNCTIONS: dict[str, tuple[tuple[str, ...], Callable[..., Any]]] = {
    "zeta": (("s",), lambda a, p: riemann_zeta(a["s"], p)),
    "hurwitz_zeta": (("s", "b"), lambda a, p: hurwitz_zeta(a["s"], a["b"], p)),
    "beta": (("s",), lambda a, p: dirichlet_beta(a["s"], p)),
    "polylog": (("s", "a"), lambda a, p: polylog(a["s"], a["a"], p)),
    "lerch_phi": (("a", "s", "b"), lambda a, p: lerch_phi(a["a"], a["s"], a["b"], p)),
    "l_series": (("chi", "s"), lambda a, p: l_series(a["chi"], a["s"], p)),
}


def _eval_params(ns: argparse.Namespace) -> SeriesParams | None:
    if ns.tolerance is None and ns.max_terms is None:
        return None
    base = SeriesParams()
    return SeriesParams(tolerance=ns.tolerance or base.tolerance,
                        max_terms=ns.max_terms or base.max_terms)


# ----------------------------------------------------------------------
# subcommands
# ----------------------------------------------------------------------

def _cmd_verify(ns: argparse.Namespace) -> int:
    if ns.list:
        print("identity checks:")
        for name in suite_check_names():
            print(f"  {name}")
        print("\ngrids:")
        for key in sorted(GRID_NOTES):
            print(f"  {key}: {GRID_NOTES[key]}")
        print("\nseries catalog:")
        for entry in catalog():
            print(f"  {entry['name']:16s} -> {entry['target']}")
        return 0
    report = run_suite(filter_glob=ns.filter, tolerance=ns.tolerance,
                       max_terms=ns.max_terms)
    if ns.format == "json":
        print(json.dumps(report.to_dict(), indent=2))
    else:
        for c in report.checks:
            err = c.abs_err if c.absolute else c.rel_err
            kind = "abs_err" if c.absolute else "rel_err"
            status = "PASS" if c.passed else "FAIL"
            params = json.dumps(json_safe(c.params), sort_keys=True)
            print(f"{status} {c.name} {params} {kind}={err:.3e} tol={c.tol:.1e}")
        print(f"{report.pass_count + report.fail_count} checks: "
              f"{report.pass_count} passed, {report.fail_count} failed "
              f"in {report.wall_time:.2f}s")
    return 0 if report.fail_count == 0 else 1


def _cmd_eval(ns: argparse.Namespace) -> int:
    if ns.function not in _EVAL_FUNCTIONS:
        raise _UsageError(
            f"unknown function {ns.function!r}; choose from "
            f"{', '.join(sorted(_EVAL_FUNCTIONS))}")
    required, fn = _EVAL_FUNCTIONS[ns.function]
    args = _parse_kv(ns.args)
    missing = [k for k in required if k not in args]
    extra = [k for k in args if k not in required]
    if missing:
        raise _UsageError(f"{ns.function} needs {'='.join(missing)}= argument(s): "
                          f"missing {', '.join(missing)}")
    if extra:
        raise _UsageError(f"{ns.function} does not take {', '.join(extra)}")
    try:
        result = fn(args, _eval_params(ns))
    except (TypeError, ValueError) as exc:
        raise _UsageError(f"bad arguments for {ns.function}: {exc}") from exc
    if ns.format == "json":
        doc = {
            "function": ns.function,
            "args": json_safe(args),
            "value": [result.value.real, result.value.imag],
            "terms_used": result.terms_used,
            "error_estimate": result.error_estimate,
        }
        print(json.dumps(doc, indent=2))
    else:
        print(_fmt_complex(result.value))
        print(f"terms_used: {result.terms_used}")
        print(f"error_estimate: {_fmt(result.error_estimate)}")
    return 0


def _checkpoints(text: str) -> tuple[int, ...]:
    try:
        pts = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"checkpoints must be comma-separated integers, got {text!r}")
    if not pts or any(p <= 0 for p in pts):
        raise argparse.ArgumentTypeError("checkpoints must be positive")
    return pts


def _cmd_series(ns: argparse.Namespace) -> int:
    if ns.list:
        for entry in catalog():
            print(f"{entry['name']:16s} target={entry['target']:13s} "
                  f"digits/term={entry['digits_per_term']:.3f}  "
                  f"{entry['description']}")
        return 0
    if ns.name is None:
        raise _UsageError("series needs a name (or --list)")
    profile = convergence_profile(ns.name, checkpoints=ns.checkpoints)
    value = evaluate_named_series(ns.name)
    if ns.format == "json":
        doc = {
            "name": profile.name,
            "digits_per_term": profile.digits_per_term,
            "value": [value.value.real, value.value.imag],
            "rows": [{"terms": t, "abs_error": e, "digits": d}
                     for t, e, d in profile.rows],
        }
        print(json.dumps(doc, indent=2))
    else:
        print(f"{profile.name}: value {_fmt_complex(value.value)} "
              f"({profile.digits_per_term:.3f} digits/term predicted)")
        print(f"{'terms':>8s} {'abs_error':>14s} {'digits':>8s}")
        for terms, abs_error, digits in profile.rows:
            print(f"{terms:8d} {abs_error:14.4e} {digits:8.2f}")
    return 0


# ----------------------------------------------------------------------
# parser / entry point
# ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lerchkit",
        description="Verify recurrence identities and evaluate the "
                    "zeta/beta/polylog/Lerch family.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run the identity check suite")
    p_verify.add_argument("--filter", default=None, metavar="GLOB",
                          help="only run checks whose name matches GLOB")
    p_verify.add_argument("--tolerance", type=float, default=None,
                          help="replace every check's documented tolerance")
    p_verify.add_argument("--max-terms", type=int, default=None,
                          help="cap series evaluators at this many terms")
    p_verify.add_argument("--format", choices=("text", "json"), default="text")
    p_verify.add_argument("--list", action="store_true",
                          help="print check names and the series catalog")
    p_verify.set_defaults(func=_cmd_verify)

    p_eval = sub.add_parser("eval", help="evaluate one function")
    p_eval.add_argument("function",
                        help=f"one of: {', '.join(sorted(_EVAL_FUNCTIONS))}")
    p_eval.add_argument("args", nargs="*", metavar="key=value",
                        help="function arguments, e.g. s=2 b=1/2 a=i")
    p_eval.add_argument("--tolerance", type=float, default=None)
    p_eval.add_argument("--max-terms", type=int, default=None)
    p_eval.add_argument("--format", choices=("text", "json"), default="text")
    p_eval.set_defaults(func=_cmd_eval)

    p_series = sub.add_parser("series", help="print a convergence profile")
    p_series.add_argument("name", nargs="?", default=None,
                          help="catalog entry name (see --list)")
    p_series.add_argument("--checkpoints", type=_checkpoints,
                          default=(5, 10, 20, 40),
                          help="comma-separated truncation points")
    p_series.add_argument("--format", choices=("text", "json"), default="text")
    p_series.add_argument("--list", action="store_true",
                          help="print the series catalog")
    p_series.set_defaults(func=_cmd_series)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        return ns.func(ns)
    except (_UsageError, UnknownSeries, DomainError) as exc:
        # KeyError reprs quote the message; unwrap for readability
        message = exc.args[0] if exc.args else str(exc)
        print(f"error: {message}", file=sys.stderr)
        return 2
    except NonConvergence as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
