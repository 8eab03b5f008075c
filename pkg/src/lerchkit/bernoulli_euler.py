"""Exact rational arithmetic for Bernoulli and Euler numbers and polynomials.

Everything in this module is computed in exact arithmetic (`fractions.Fraction`
and Python integers); floating point never enters.  Conventions:

* ``B_1 = -1/2`` (so ``B_k(0) = B_k`` for every k).
* Odd-index Euler numbers are zero; even-index ones are integers.
* Polynomials store ascending coefficients and drop trailing zeros, so the
  leading coefficient of a nonzero polynomial is never zero.

The number caches grow on demand and are safe for concurrent readers: a lock
serialises growth and entries are never mutated after publication.
"""
from __future__ import annotations

import threading
from fractions import Fraction
from math import comb, factorial
from typing import Iterable, Sequence, Union

__all__ = [
    "BigRational",
    "RationalPolynomial",
    "bernoulli_numbers",
    "euler_numbers",
    "bernoulli_polynomial",
    "euler_polynomial",
    "eval_polynomial",
    "check_euler_number_identity",
    "bernoulli_values",
    "euler_values",
    "warm_caches",
]

# Arbitrary-precision rational with normalized lowest terms and positive
# denominator -- exactly the contract fractions.Fraction already provides.
BigRational = Fraction

Scalar = Union[Fraction, int, float, complex]

_ZERO = Fraction(0)
_HALF = Fraction(1, 2)


class RationalPolynomial:
    """Polynomial with exact rational coefficients, ascending order."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Union[Fraction, int]]):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @property
    def degree(self) -> int:
        """Degree, with the convention that the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    def __call__(self, x: Scalar) -> Scalar:
        return eval_polynomial(self, x)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RationalPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __neg__(self) -> "RationalPolynomial":
        return RationalPolynomial([-c for c in self.coeffs])

    def __add__(self, other: "RationalPolynomial") -> "RationalPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return RationalPolynomial(out)

    def __sub__(self, other: "RationalPolynomial") -> "RationalPolynomial":
        return self + (-other)

    def __mul__(self, other: Union["RationalPolynomial", Fraction, int]) -> "RationalPolynomial":
        if isinstance(other, (Fraction, int)):
            return RationalPolynomial([c * other for c in self.coeffs])
        out = [_ZERO] * (len(self.coeffs) + len(other.coeffs) - 1 or 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return RationalPolynomial(out)

    __rmul__ = __mul__

    def compose(self, inner: "RationalPolynomial") -> "RationalPolynomial":
        """Exact substitution self(inner(x)), by Horner in polynomial arithmetic."""
        result = RationalPolynomial([])
        for c in reversed(self.coeffs):
            result = result * inner + RationalPolynomial([c])
        return result

    def __repr__(self) -> str:
        return f"RationalPolynomial({list(self.coeffs)!r})"


def eval_polynomial(p: RationalPolynomial, x: Scalar) -> Scalar:
    """Evaluate by Horner's rule; exact when x is a Fraction or int."""
    if isinstance(x, (Fraction, int)):
        acc = _ZERO
        for c in reversed(p.coeffs):
            acc = acc * x + c
        return acc
    acc_c = 0j if isinstance(x, complex) else 0.0
    for c in reversed(p.coeffs):
        acc_c = acc_c * x + float(c)
    return acc_c


# ---------------------------------------------------------------------------
# number caches

_lock = threading.Lock()
_bern: list[Fraction] = [Fraction(1), Fraction(-1, 2)]
_euler: list[int] = [1, 0]


def _grow_bernoulli(n: int) -> None:
    with _lock:
        m = len(_bern)
        while m <= n:
            if m % 2 == 1:
                _bern.append(_ZERO)
            else:
                # from sum_{k=0}^{m} C(m+1, k) B_k = 0; odd B_k vanish past k=1
                acc = Fraction(comb(m + 1, 1), -2)  # the k=1 term
                acc += 1  # the k=0 term
                for k in range(2, m, 2):
                    acc += comb(m + 1, k) * _bern[k]
                _bern.append(-acc / (m + 1))
            m += 1


def _grow_euler(n: int) -> None:
    with _lock:
        m = len(_euler)
        while m <= n:
            if m % 2 == 1:
                _euler.append(0)
            else:
                acc = 0
                for k in range(0, m, 2):
                    acc += comb(m, k) * _euler[k]
                _euler.append(-acc)
            m += 1


def bernoulli_numbers(n: int) -> list[Fraction]:
    """Exact B_0..B_n with the B_1 = -1/2 convention."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n >= len(_bern):
        _grow_bernoulli(n)
    return _bern[: n + 1]


def euler_numbers(n: int) -> list[int]:
    """Exact integer E_0..E_n; odd entries are zero."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n >= len(_euler):
        _grow_euler(n)
    return _euler[: n + 1]


def warm_caches(n_max: int = 64) -> None:
    """Precompute both number caches up to index n_max."""
    bernoulli_numbers(n_max)
    euler_numbers(n_max)


def check_euler_number_identity(n: int) -> bool:
    """Exact check of the two Euler-number identities for n >= 1.

        sum_{k=0}^{n}   C(2n, 2k)   E_{2k} == 0
        sum_{k=0}^{n-1} C(2n-1, 2k) E_{2k} == 2^{2n} (2^{2n} - 1) B_{2n} / (2n)

    Returns True when both hold in exact rational arithmetic.  A failure can
    only mean a corrupted number cache, so it raises ValueError naming the
    identity that broke rather than returning False.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    e = euler_numbers(2 * n)
    recurrence = sum(comb(2 * n, 2 * k) * e[2 * k] for k in range(n + 1))
    if recurrence != 0:
        raise ValueError(f"Euler-number recurrence failed at n={n}")
    combination = sum(comb(2 * n - 1, 2 * k) * e[2 * k] for k in range(n))
    b2n = bernoulli_numbers(2 * n)[2 * n]
    target = Fraction(2 ** (2 * n) * (2 ** (2 * n) - 1), 2 * n) * b2n
    if combination != target:
        raise ValueError(f"Euler-Bernoulli combination failed at n={n}")
    return True


# ---------------------------------------------------------------------------
# polynomials

def bernoulli_polynomial(k: int) -> RationalPolynomial:
    """B_k(x) = sum_j C(k, j) B_{k-j} x^j, exact."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    b = bernoulli_numbers(k)
    return RationalPolynomial([comb(k, j) * b[k - j] for j in range(k + 1)])


def euler_polynomial(k: int) -> RationalPolynomial:
    """E_k(x) via the shifted expansion around x = 1/2.

    E_k(x) = sum_j C(k, j) (E_j / 2^j) (x - 1/2)^{k-j}, with E_j the Euler
    numbers; only even j contribute.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    e = euler_numbers(k)
    out = [_ZERO] * (k + 1)
    for j in range(0, k + 1, 2):
        scale = Fraction(comb(k, j) * e[j], 2**j)
        # expand (x - 1/2)^{k-j}
        m = k - j
        for i in range(m + 1):
            out[i] += scale * comb(m, i) * (-_HALF) ** (m - i)
    return RationalPolynomial(out)


# ---------------------------------------------------------------------------
# value tables
#
# Identity checks need long runs of B_k(x) and E_k(x) at a handful of rational
# abscissas.  Building the degree-k polynomial for every k is O(k^2) rational
# work per index, so the common abscissas go through closed forms instead:
#
#   B_k(1/2) = (2^{1-k} - 1) B_k
#   B_{2m}(1/4) = B_{2m}(3/4) = 2^{-2m} (2^{1-2m} - 1) B_{2m}
#   B_{2m+1}(1/4) = -(2m+1) E_{2m} / 4^{2m+1} = -B_{2m+1}(3/4)
#   E_k(0) = -2 (2^{k+1} - 1) B_{k+1} / (k+1),   E_k(1) = (-1)^k E_k(0)
#   E_k(1/2) = E_k / 2^k
#
# and the remaining cases reduce to integer convolutions with the number
# caches (denominators are pure powers, so no gcd churn in the inner loop).

def _bernoulli_value(k: int, x: Fraction) -> Fraction:
    b = bernoulli_numbers(k)
    if x == 0:
        return b[k]
    if x == 1:
        return -b[k] if k == 1 else b[k]
    if x == _HALF:
        return (Fraction(2) ** (1 - k) - 1) * b[k]
    quarter = Fraction(1, 4)
    if x == quarter or x == Fraction(3, 4):
        if k % 2 == 0:
            return Fraction(2) ** (-k) * (Fraction(2) ** (1 - k) - 1) * b[k]
        e = euler_numbers(k - 1)
        val = Fraction(-k * e[k - 1], 4**k)
        return -val if x == Fraction(3, 4) else val
    # generic rational x = p/q: numerator sum over integer products
    p, q = x.numerator, x.denominator
    acc = Fraction(0)
    for j in range(k + 1):
        bj = b[j]
        if bj == 0:
            continue
        acc += comb(k, j) * bj * (q**j * p ** (k - j))
    return acc / q**k


def _euler_value(k: int, x: Fraction) -> Fraction:
    if x == _HALF:
        return Fraction(euler_numbers(k)[k], 2**k)
    if x == 0 or x == 1:
        b = bernoulli_numbers(k + 1)
        val = Fraction(-2 * (2 ** (k + 1) - 1), k + 1) * b[k + 1]
        return val if (x == 0 or k % 2 == 0) else -val
    # generic rational x = p/q, all-integer numerator:
    # E_k(p/q) = sum_j C(k,j) E_j q^j (2p - q)^{k-j} / (2q)^k
    p, q = x.numerator, x.denominator
    e = euler_numbers(k)
    shift = 2 * p - q
    acc = 0
    for j in range(0, k + 1, 2):
        acc += comb(k, j) * e[j] * q**j * shift ** (k - j)
    return Fraction(acc, (2 * q) ** k)


_value_lock = threading.Lock()
_value_tables: dict[tuple[str, Fraction], list[Fraction]] = {}


def _values(kind: str, x: Fraction, count: int) -> Sequence[Fraction]:
    key = (kind, x)
    table = _value_tables.get(key)
    if table is None or len(table) < count:
        fn = _bernoulli_value if kind == "b" else _euler_value
        with _value_lock:
            table = _value_tables.setdefault(key, [])
            for k in range(len(table), count):
                table.append(fn(k, x))
    return table[:count]


def bernoulli_values(x: Union[Fraction, int], count: int) -> list[Fraction]:
    """Exact [B_0(x), ..., B_{count-1}(x)] for rational x, cached per x."""
    return list(_values("b", Fraction(x), count))


def euler_values(x: Union[Fraction, int], count: int) -> list[Fraction]:
    """Exact [E_0(x), ..., E_{count-1}(x)] for rational x, cached per x."""
    return list(_values("e", Fraction(x), count))


_float_tables: dict[tuple[str, Fraction], list[float]] = {}

# Per-family scaling base: P_k(x)/k! decays like radius^{-k} (radius 2*pi for
# Bernoulli, pi for Euler).  Scaling by the largest integer below the radius
# keeps BOTH float factors bounded for every admissible argument z:
# the table entry ~ (base/radius)^k stays <= O(1) and the companion factor
# (z/base)^k stays below 1.05^k for |z| < radius, so k in the thousands is
# safe.  Unscaled, P_k(x)/k! underflows float64 near k ~ 400 while z^k
# overflows.
SCALE_BASE = {"bernoulli": 6, "euler": 3}


def scaled_poly_floats(kind: str, x: Union[Fraction, int], count: int) -> Sequence[float]:
    """Cached [float(P_k(x) * base^k / k!)] for k < count, P Bernoulli or Euler.

    Pair each entry with (z/base)^k to form P_k(x) z^k / k! without
    intermediate under/overflow; base is SCALE_BASE[kind].
    """
    if kind not in ("bernoulli", "euler"):
        raise ValueError(f"unknown polynomial family {kind!r}")
    base = SCALE_BASE[kind]
    x = Fraction(x)
    key = (kind, x)
    table = _float_tables.get(key)
    if table is None or len(table) < count:
        exact = _values("b" if kind == "bernoulli" else "e", x, count)
        with _value_lock:
            table = _float_tables.setdefault(key, [])
            scale = Fraction(base) ** len(table) / factorial(len(table))
            for k in range(len(table), count):
                table.append(float(exact[k] * scale))
                scale = scale * base / (k + 1)
    return table[:count]
