import pytest

from splitcount.closedform import (
    angle_count_formula,
    chu_vandermonde_first,
    chu_vandermonde_second,
    defect_gap_exponent,
    flag_count_formula,
    pair_class_formula,
    splitting_count_formula,
    verify_expansions,
)
from splitcount.errors import InvalidLabel, InvalidParameters
from splitcount.labels import iter_chain_labels, splitting_label
from splitcount.qarith import (
    ONE,
    ZERO,
    evaluate,
    exact_divide,
    gaussian_binomial,
    q_integer,
    q_power,
)
from splitcount.recursion import count_recursive


def test_exponent_is_even():
    for label in iter_chain_labels(7, max_r=3):
        e = defect_gap_exponent(label)
        assert e >= 0 and e % 2 == 0


def test_flag_formula_single_pair_reduction():
    # [(m,0)] -> [N]_q/[m]_q * gauss(N-m-1, m-1) * q^(m(m-1))
    for N in (4, 5, 6, 7):
        for m in range(1, N):
            want = exact_divide(
                gaussian_binomial(N, 1)
                * gaussian_binomial(N - m - 1, m - 1)
                * q_power(m * (m - 1)),
                gaussian_binomial(m, 1),
            )
            assert flag_count_formula([(m, 0)], N) == want
            assert flag_count_formula([(m, 0)], N) == pair_class_formula(m, 0, N)


def test_flag_formula_splitting_reduction():
    for m, n in ((1, 2), (2, 2), (1, 3), (3, 2), (2, 3), (1, 5)):
        N = m * n
        lhs = flag_count_formula(splitting_label(m, n), N)
        rhs = exact_divide(
            gaussian_binomial(N, 1) * q_power(m * (m - 1) * (n - 1)), gaussian_binomial(m, 1)
        )
        assert lhs == rhs


def test_flag_formula_fixture_124():
    assert evaluate(flag_count_formula([(3, 1), (1, 0)], 5), 2) == 124
    assert flag_count_formula([(3, 1), (1, 0)], 5) == q_integer(5) * q_power(2)


def test_flag_formula_zero_on_nonempty_violation():
    assert flag_count_formula([(3, 1), (1, 0)], 4) == ZERO
    assert flag_count_formula([(3, 0)], 5) == ZERO


def test_flag_formula_rejects_bad_shape():
    with pytest.raises(InvalidLabel):
        flag_count_formula([(4, 4)], 6)
    with pytest.raises(InvalidLabel):
        flag_count_formula([(6, 1)], 6)


def test_splitting_count_formula_examples():
    assert splitting_count_formula(1, 2, 2) == q_integer(2)
    assert splitting_count_formula(1, 3, 3) == q_integer(3)
    assert splitting_count_formula(2, 1, 2) == ONE
    assert evaluate(splitting_count_formula(2, 2, 4), 2) == 20
    with pytest.raises(InvalidParameters):
        splitting_count_formula(2, 2, 3)
    with pytest.raises(InvalidParameters):
        splitting_count_formula(0, 2, 4)


def test_pair_class_formula_examples():
    for N in (3, 4, 5, 6):
        for k in range(1, N):
            assert pair_class_formula(k, k - 1, N) == q_integer(N)
    assert evaluate(pair_class_formula(2, 0, 4), 2) == 20
    assert pair_class_formula(0, 0, 9) == ONE
    with pytest.raises(InvalidParameters):
        pair_class_formula(2, 2, 4)
    with pytest.raises(InvalidParameters):
        pair_class_formula(4, 1, 4)


def test_angle_formula_single_pair_with_zero_defect_is_grassmannian():
    for N in (3, 4, 5, 6):
        for a in range(1, N):
            assert angle_count_formula([(a, 0)], N) == gaussian_binomial(N, a)


def test_angle_formula_oracle_fixture():
    from splitcount.fields import FieldSpec, find_irreducible
    from splitcount.oracle import count_angle_tuple

    field = FieldSpec(2)
    f = find_irreducible(field, 4)
    label = ((3, 1), (1, 0))
    assert (
        evaluate(angle_count_formula(label, 4), 2)
        == count_angle_tuple(field, f, label).count
        == 45
    )


def test_angle_formula_matches_expand_sum():
    # single pair [a11,a12]: the angle count is the sum of flag counts over
    # the possible defects of the outer subspace
    for N in (4, 5, 6):
        for a in range(1, N):
            for b in range(a):
                total = ZERO
                for k in range(b, a):
                    total = total + flag_count_formula([(a, k)], N) * gaussian_binomial(k, b)
                assert angle_count_formula([(a, b)], N) == total


def test_verify_expansions_examples():
    assert verify_expansions([(3, 1), (1, 0)], 5).equal
    assert verify_expansions([(2, 0)], 4).equal
    for N in (4, 6):
        assert verify_expansions([(N - 1, 0)], N).equal  # boundary a11 = N-1


def test_verify_expansions_sweep_small():
    for N in range(2, 6):
        for label in iter_chain_labels(N, max_r=2):
            rep = verify_expansions(label, N)
            assert rep.equal, (N, label)


def test_recursion_equals_closed_form_small():
    for N in range(2, 7):
        for label in iter_chain_labels(N, max_r=3):
            assert count_recursive(label, N) == flag_count_formula(label, N), (N, label)


def test_chu_vandermonde_first_examples():
    assert chu_vandermonde_first(4, 2, 1, 3).equal
    # single-term sums collapse
    assert chu_vandermonde_first(5, 2, 1, 3).equal
    rep = chu_vandermonde_first(6, 3, 1, 4)
    assert rep.equal and rep.lhs == rep.rhs
    with pytest.raises(InvalidParameters):
        chu_vandermonde_first(4, 2, 2, 3)  # needs C <= B-1


def test_chu_vandermonde_second_examples():
    assert chu_vandermonde_second(5, 3, 0, 1).equal
    assert chu_vandermonde_second(4, 3, 1, 2).equal  # D = B-1 single term
    with pytest.raises(InvalidParameters):
        chu_vandermonde_second(3, 3, 0, 0)  # needs B < A
    with pytest.raises(InvalidParameters):
        chu_vandermonde_second(5, 3, 2, 1)


def test_identity_sweeps_small():
    for A in range(1, 8):
        for B in range(1, A + 1):
            for C in range(0, B):
                for D in range(B, A + 1):
                    assert chu_vandermonde_first(A, B, C, D).equal, (A, B, C, D)
                if B < A:
                    for D in range(C, B):
                        assert chu_vandermonde_second(A, B, C, D).equal, (A, B, C, D)
