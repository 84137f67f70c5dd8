"""Exact arithmetic in Z[q]: q-integers, q-factorials, Gaussian binomials.

All counts in this package are carried symbolically as polynomials in the
formal variable q with arbitrary-precision integer coefficients, and only
evaluated at a concrete prime power on demand.  A polynomial identity is
strictly stronger evidence than any finite set of evaluations, so the
verification suites compare QPoly values coefficient by coefficient.

Conventions:
  * the zero polynomial has an empty coefficient tuple;
  * gaussian_binomial(n, k) is 0 whenever k < 0, n < 0 or k > n, which makes
    the index-set sums of the counting recursion total functions.
"""

from __future__ import annotations

from functools import reduce
from typing import Iterable

from .errors import NonExactDivision

__all__ = [
    "QPoly",
    "ZERO",
    "ONE",
    "Q",
    "q_power",
    "q_integer",
    "q_factorial",
    "gaussian_binomial",
    "exact_divide",
    "evaluate",
]


class QPoly:
    """Dense polynomial in q over Z, immutable and hashable.

    ``coeffs[i]`` is the coefficient of q**i; trailing zeros are stripped so
    equal polynomials have identical representations.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("QPoly is immutable")

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial reporting -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, QPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == ((other,) if other else ())
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "QPoly | int") -> "QPoly":
        other = _coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPoly(out)

    def __neg__(self) -> "QPoly":
        return QPoly(-c for c in self.coeffs)

    def __sub__(self, other: "QPoly | int") -> "QPoly":
        return self + (-_coerce(other))

    def __mul__(self, other: "QPoly | int") -> "QPoly":
        other = _coerce(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return QPoly(out)

    __radd__ = __add__
    __rmul__ = __mul__

    def __pow__(self, n: int) -> "QPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, q0: int) -> int:
        return evaluate(self, q0)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append(f"{c}*q" if c != 1 else "q")
            else:
                terms.append(f"{c}*q^{i}" if c != 1 else f"q^{i}")
        return " + ".join(terms)


def _coerce(x: "QPoly | int") -> QPoly:
    if isinstance(x, QPoly):
        return x
    if isinstance(x, int):
        return QPoly((x,))
    raise TypeError(f"cannot mix QPoly with {type(x).__name__}")


ZERO = QPoly()
ONE = QPoly((1,))
Q = QPoly((0, 1))


def q_power(e: int) -> QPoly:
    """The monomial q**e."""
    if e < 0:
        raise ValueError("negative exponent")
    return QPoly((0,) * e + (1,))


def q_integer(n: int) -> QPoly:
    """[n]_q = 1 + q + ... + q**(n-1); the empty sum for n = 0."""
    if n < 0:
        raise ValueError("q-integer of a negative integer")
    return QPoly((1,) * n)


def q_factorial(n: int) -> QPoly:
    """[n]!_q = [1]_q [2]_q ... [n]_q, with [0]!_q = 1."""
    if n < 0:
        raise ValueError("q-factorial of a negative integer")
    return reduce(lambda acc, i: acc * q_integer(i), range(1, n + 1), ONE)


_GAUSS_CACHE: dict[tuple[int, int], QPoly] = {}


def gaussian_binomial(n: int, k: int) -> QPoly:
    """Gaussian binomial coefficient as a polynomial in q.

    Counts k-dimensional subspaces of an n-dimensional space over a field
    with q elements.  Out-of-range arguments give 0.  Computed by the
    q-Pascal recurrence with memoization; degree is k(n-k).
    """
    if k < 0 or n < 0 or k > n:
        return ZERO
    if k == 0 or k == n:
        return ONE
    key = (n, k)
    cached = _GAUSS_CACHE.get(key)
    if cached is None:
        cached = gaussian_binomial(n - 1, k - 1) + q_power(k) * gaussian_binomial(n - 1, k)
        _GAUSS_CACHE[key] = cached
    return cached


def exact_divide(num: QPoly, den: QPoly) -> QPoly:
    """Polynomial long division that must leave a zero remainder.

    Coefficient divisions must also be exact over Z.  Raises
    NonExactDivision otherwise -- which indicates a bug, since every
    quotient formed in this package is integral by construction.
    """
    if den.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    if num.is_zero():
        return ZERO
    rem = list(num.coeffs)
    dcs = den.coeffs
    dd = len(dcs) - 1
    lead = dcs[-1]
    qd = len(rem) - 1 - dd
    if qd < 0:
        raise NonExactDivision(f"degree of {num!r} below degree of {den!r}")
    out = [0] * (qd + 1)
    for i in range(qd, -1, -1):
        c = rem[i + dd]
        if c % lead != 0:
            raise NonExactDivision(f"leading coefficient {lead} does not divide {c}")
        f = c // lead
        out[i] = f
        if f:
            for j, dc in enumerate(dcs):
                rem[i + j] -= f * dc
    if any(rem):
        raise NonExactDivision(f"nonzero remainder dividing {num!r} by {den!r}")
    return QPoly(out)


def evaluate(p: QPoly, q0: int) -> int:
    """Horner evaluation of p at the exact integer q0."""
    acc = 0
    for c in reversed(p.coeffs):
        acc = acc * q0 + c
    return acc
