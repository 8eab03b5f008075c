"""Shared result type for dual-route identity checks.

Every check computes a left side and a right side through genuinely
different code paths and reports both, so a bug in one route cannot mask
itself.  The pass criterion is the scaled error

    |lhs - rhs| / max(1, |lhs|, |rhs|) <= tol

which behaves like an absolute tolerance for order-one quantities and a
relative one when either side is large.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any

__all__ = ["CheckResult"]


@dataclass(frozen=True)
class CheckResult:
    name: str
    lhs: complex
    rhs: complex
    tol: float
    params: dict[str, Any] = field(default_factory=dict)
    lhs_terms: int = 0
    rhs_terms: int = 0
    # When True the pass criterion is abs_err <= tol with no rescaling
    # (used by checks whose contract is a plain absolute bound).
    absolute: bool = False

    @property
    def abs_err(self) -> float:
        return abs(self.lhs - self.rhs)

    @property
    def scale(self) -> float:
        return max(1.0, abs(self.lhs), abs(self.rhs))

    @property
    def rel_err(self) -> float:
        return self.abs_err / self.scale

    # Older spellings kept so call sites can use either.
    abs_error = abs_err
    error = rel_err

    @property
    def passed(self) -> bool:
        if not math.isfinite(self.abs_err):
            return False
        err = self.abs_err if self.absolute else self.rel_err
        return err <= self.tol

    def describe(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (f"{status} {self.name}: |lhs-rhs| = {self.abs_err:.3e} "
                f"(scaled {self.rel_err:.3e}, tol {self.tol:.1e})")
