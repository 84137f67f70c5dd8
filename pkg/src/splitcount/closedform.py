"""Closed-form product evaluators for the chain-label counts.

flag_count_formula gives |[(a11,a12),...,(ar1,ar2)]| directly as a ratio of
Gaussian binomial products times a power of q; it solves the two-way
expansion recursion, which is what verify_expansions re-checks case by
case.  angle_count_formula gives the common value of both expansion sums,
i.e. the size of the containment-linked pair chains <[a11,a12],...>, as a
quotient of q-factorials.  The two q-Chu-Vandermonde specializations that
make the sums collapse are exposed as checkable identities.

All quotients are computed numerator-product-first followed by a single
exact division, so any divisibility failure (impossible unless a formula
is mistranscribed) surfaces immediately as NonExactDivision.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import InvalidParameters
from .labels import Label, validate_chain
from .qarith import (
    ONE,
    QPoly,
    ZERO,
    exact_divide,
    gaussian_binomial,
    q_factorial,
    q_integer,
    q_power,
)
from .recursion import inner_index_ranges, inner_term, outer_index_ranges, outer_term

__all__ = [
    "flag_count_formula",
    "splitting_count_formula",
    "pair_class_formula",
    "angle_count_formula",
    "verify_expansions",
    "chu_vandermonde_first",
    "chu_vandermonde_second",
    "ExpansionReport",
    "IdentityReport",
]


_FLAG_CACHE: dict[tuple[Label, int], QPoly] = {}


def defect_gap_exponent(label) -> int:
    """E = sum of (a_i1 - a_i2)(a_i1 - a_i2 - 1); even, being a sum of
    products of consecutive integers."""
    return sum((a - b) * (a - b - 1) for a, b in label)


def flag_count_formula(label, N: int) -> QPoly:
    """|[(a11,a12),...,(ar1,ar2)]| by the closed product formula.

    Zero exactly when the nonemptiness condition fails, through a vanishing
    Gaussian factor; no separate branch is needed.
    """
    key = validate_chain(label, N, strict=True)
    if not key:
        return ONE
    hit = _FLAG_CACHE.get((key, N))
    if hit is not None:
        return hit
    r = len(key)
    a = [(N, N)] + list(key) + [(0, 0)]
    num = gaussian_binomial(N, 1)
    for i in range(r):
        num = num * gaussian_binomial(a[i][0] - a[i + 1][0] - 1, a[i + 1][0] - a[i + 1][1] - 1)
        num = num * gaussian_binomial(a[i + 1][0], a[i + 1][1])
        num = num * gaussian_binomial(a[i + 1][1], a[i + 2][0])
        if num.is_zero():
            _FLAG_CACHE[(key, N)] = ZERO
            return ZERO
    num = num * q_power(defect_gap_exponent(key))
    den = gaussian_binomial(key[0][0], 1)
    for i in range(1, r):
        den = den * gaussian_binomial(a[i][0] - 1, a[i + 1][0] - 1)
    result = exact_divide(num, den)
    _FLAG_CACHE[(key, N)] = result
    return result


def splitting_count_formula(m: int, n: int, N: int) -> QPoly:
    """Splitting-subspace count [N]_q/[m]_q * gauss(N-mn+m-1, m-1) * q^(m(m-1)(n-1)).

    At N = mn this is (q^mn - 1)/(q^m - 1) * q^(m(m-1)(n-1)).
    """
    if m < 1 or n < 1 or N < m * n:
        raise InvalidParameters(f"need N >= m*n >= 1, got N={N}, m={m}, n={n}")
    num = (
        gaussian_binomial(N, 1)
        * gaussian_binomial(N - m * n + m - 1, m - 1)
        * q_power(m * (m - 1) * (n - 1))
    )
    return exact_divide(num, gaussian_binomial(m, 1))


def pair_class_formula(m: int, k: int, N: int) -> QPoly:
    """|(m, k)| = [N]_q/[m]_q * gauss(N-m-1, m-k-1) * gauss(m, k) * q^((m-k)(m-k-1))."""
    if m == 0 and k == 0:
        return ONE
    if not N > m > k >= 0:
        raise InvalidParameters(f"need N > m > k >= 0 or m = k = 0, got ({m},{k}), N={N}")
    num = (
        gaussian_binomial(N, 1)
        * gaussian_binomial(N - m - 1, m - k - 1)
        * gaussian_binomial(m, k)
        * q_power((m - k) * (m - k - 1))
    )
    return exact_divide(num, gaussian_binomial(m, 1))


def angle_count_formula(label, N: int) -> QPoly:
    """|<[a11,a12],...,[ar1,ar2]>| as a quotient of q-factorials.

    This is the common closed value of the inner and outer expansion sums;
    for a single pair [a,0] it collapses to gauss(N, a).
    """
    key = validate_chain(label, N, strict=True)
    if not key:
        return ONE
    r = len(key)
    a = [(N, N)] + list(key) + [(0, 0)]
    num = q_integer(N) * q_factorial(N - a[1][1] - 1)
    for i in range(1, r + 1):
        num = num * q_factorial(a[i][0] - a[i + 1][1] - 1)
    den = q_factorial(N - a[1][0]) * q_factorial(a[r][1])
    for i in range(1, r + 1):
        den = den * q_factorial(a[i][0] - a[i][1] - 1) * q_factorial(a[i][0] - a[i][1])
    for i in range(2, r + 1):
        den = den * q_factorial(a[i - 1][1] - a[i][0])
    return exact_divide(num, den)


@dataclass
class ExpansionReport:
    """Three independent computations of one pair-chain count."""

    label: Label
    N: int
    inner_sum: QPoly
    outer_sum: QPoly
    closed_form: QPoly

    @property
    def equal(self) -> bool:
        return self.inner_sum == self.outer_sum == self.closed_form


def verify_expansions(label, N: int) -> ExpansionReport:
    """Compute both expansion sums of |<...>| from the closed flag formula
    and compare them with the q-factorial closed value, exactly."""
    key = validate_chain(label, N, strict=True)
    inner = ZERO
    for js in product(*inner_index_ranges(key, N, general=False)):
        sub, factor = inner_term(key, N, js)
        inner = inner + flag_count_formula(sub, N) * factor
    outer = ZERO
    for ks in product(*outer_index_ranges(key, general=False)):
        sub, factor = outer_term(key, ks)
        outer = outer + flag_count_formula(sub, N) * factor
    closed = angle_count_formula(key, N)
    return ExpansionReport(key, N, inner, outer, closed)


@dataclass
class IdentityReport:
    """One instance of a terminating q-series identity, both sides exact."""

    parameters: dict
    lhs: QPoly
    rhs: QPoly

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs


def chu_vandermonde_first(A: int, B: int, C: int, D: int) -> IdentityReport:
    """q-Chu-Vandermonde specialization for C <= B-1 <= D-1 <= A-1."""
    if not (0 <= C <= B - 1 <= D - 1 <= A - 1):
        raise InvalidParameters(f"need 0 <= C <= B-1 <= D-1 <= A-1, got {(A, B, C, D)}")
    lhs = ZERO
    for s in range(C, B):
        term = (
            gaussian_binomial(A - B - 1, B - s - 1)
            * gaussian_binomial(B, s)
            * gaussian_binomial(s, C)
            * gaussian_binomial(A - (2 * B - s), D - (2 * B - s))
            * q_power((B - s) * (B - s - 1))
        )
        lhs = lhs + term
    rhs_num = (
        q_integer(B)
        * gaussian_binomial(B - 1, C)
        * gaussian_binomial(A - B - 1, D - B - 1)
        * gaussian_binomial(D - C, B - C)
    )
    rhs = exact_divide(rhs_num, q_integer(D - C))
    return IdentityReport({"A": A, "B": B, "C": C, "D": D}, lhs, rhs)


def chu_vandermonde_second(A: int, B: int, C: int, D: int) -> IdentityReport:
    """q-Chu-Vandermonde specialization for C <= D <= B-1 < A-1.

    B < A is required: at A = B the summand factor gauss(A-B-1, B-s-1) has
    negative top argument and the two sides genuinely differ under the
    out-of-range-is-zero convention.  Every application in the expansion
    sums has strictly descending outer dimensions, so nothing is lost.
    """
    if not (0 <= C <= D <= B - 1 <= A - 2):
        raise InvalidParameters(f"need 0 <= C <= D <= B-1 <= A-2, got {(A, B, C, D)}")
    lhs = ZERO
    for s in range(D, B):
        term = (
            gaussian_binomial(A - B - 1, B - s - 1)
            * gaussian_binomial(B, s)
            * gaussian_binomial(s, C)
            * gaussian_binomial(s - C, D - C)
            * q_power((B - s) * (B - s - 1))
        )
        lhs = lhs + term
    rhs_num = (
        q_integer(B)
        * gaussian_binomial(B - 1, C)
        * gaussian_binomial(B - C - 1, D - C)
        * gaussian_binomial(A - D, B - D)
    )
    rhs = exact_divide(rhs_num, q_integer(A - D))
    return IdentityReport({"A": A, "B": B, "C": C, "D": D}, lhs, rhs)
