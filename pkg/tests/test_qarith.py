import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from math import comb

from splitcount.errors import NonExactDivision
from splitcount.qarith import (
    ONE,
    QPoly,
    ZERO,
    evaluate,
    exact_divide,
    gaussian_binomial,
    q_factorial,
    q_integer,
    q_power,
)


def test_q_integer_examples():
    assert q_integer(3) == QPoly((1, 1, 1))
    assert q_integer(0) == ZERO
    assert q_integer(1) == ONE


def test_q_factorial_examples():
    assert q_factorial(0) == ONE
    assert q_factorial(2) == QPoly((1, 1))
    # direct product oracle: (1)(3)(7) at q=2
    assert evaluate(q_factorial(3), 2) == 1 * 3 * 7


def test_gaussian_binomial_examples():
    assert gaussian_binomial(4, 2) == QPoly((1, 1, 2, 1, 1))
    assert evaluate(gaussian_binomial(4, 2), 2) == 35
    assert gaussian_binomial(7, 0) == ONE
    assert gaussian_binomial(3, 5) == ZERO
    assert gaussian_binomial(-1, 0) == ZERO
    assert gaussian_binomial(3, -1) == ZERO


def test_gaussian_binomial_against_factorial_quotient():
    for n in range(0, 9):
        for k in range(0, n + 1):
            quotient = exact_divide(q_factorial(n), q_factorial(k) * q_factorial(n - k))
            assert gaussian_binomial(n, k) == quotient


def test_exact_divide_examples():
    assert exact_divide(QPoly((-1, 0, 1)), QPoly((-1, 1))) == QPoly((1, 1))
    assert exact_divide(q_factorial(4), q_factorial(2)) == q_integer(3) * q_integer(4)
    prod = gaussian_binomial(4, 2) * q_factorial(2) * q_factorial(2)
    assert exact_divide(prod, q_factorial(4)) == ONE


def test_exact_divide_rejects_remainder():
    with pytest.raises(NonExactDivision):
        exact_divide(QPoly((1, 0, 1)), QPoly((1, 1)))
    with pytest.raises(NonExactDivision):
        exact_divide(QPoly((1, 2)), QPoly((2,)))
    with pytest.raises(ZeroDivisionError):
        exact_divide(ONE, ZERO)


def test_evaluate_examples():
    assert evaluate(q_integer(3), 1) == 3
    assert evaluate(gaussian_binomial(4, 2), 1) == 6
    assert evaluate(gaussian_binomial(6, 2), 2) == (2**6 - 1) * (2**5 - 1) // ((2**2 - 1) * (2 - 1))


def test_no_trailing_zeros_invariant():
    assert (QPoly((1, 1)) - QPoly((0, 1))).coeffs == (1,)
    assert (QPoly((1,)) - ONE) == ZERO
    assert QPoly((0, 0, 0)) == ZERO


def test_degree_of_gaussian_binomial():
    for n in range(0, 13):
        for k in range(0, n + 1):
            assert gaussian_binomial(n, k).degree == k * (n - k)


@given(n=st.integers(1, 12), k=st.integers(1, 12))
def test_q_pascal_property(n, k):
    if k > n:
        return
    lhs = gaussian_binomial(n, k)
    rhs = gaussian_binomial(n - 1, k - 1) + q_power(k) * gaussian_binomial(n - 1, k)
    assert lhs == rhs


@given(n=st.integers(0, 12), k=st.integers(0, 12))
def test_symmetry_nonnegativity_and_q1(n, k):
    if k > n:
        return
    g = gaussian_binomial(n, k)
    assert g == gaussian_binomial(n, n - k)
    assert all(c >= 0 for c in g.coeffs)
    assert evaluate(g, 1) == comb(n, k)


@settings(max_examples=200)
@given(
    a=st.lists(st.integers(-9, 9), max_size=8),
    b=st.lists(st.integers(-9, 9), max_size=8),
)
def test_exact_divide_roundtrip(a, b):
    pa, pb = QPoly(a), QPoly(b)
    if pb.is_zero():
        return
    assert exact_divide(pa * pb, pb) == pa


@given(
    a=st.lists(st.integers(-9, 9), max_size=6),
    b=st.lists(st.integers(-9, 9), max_size=6),
    q0=st.integers(-3, 3),
)
def test_evaluation_is_ring_homomorphism(a, b, q0):
    pa, pb = QPoly(a), QPoly(b)
    assert evaluate(pa * pb, q0) == evaluate(pa, q0) * evaluate(pb, q0)
    assert evaluate(pa + pb, q0) == evaluate(pa, q0) + evaluate(pb, q0)
