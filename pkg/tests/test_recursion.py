import pytest

from splitcount.errors import InvalidLabel, MissingBaseCase
from splitcount.fields import FieldSpec, find_irreducible
from splitcount.labels import (
    iter_chain_labels,
    iter_degenerate_chains,
    label_key,
    precedes,
    splitting_label,
)
from splitcount.linalg import Mat
from splitcount.oracle import count_flag_tuple, count_flag_tuple_for_operator
from splitcount.qarith import ONE, QPoly, ZERO, evaluate, gaussian_binomial, q_power
from splitcount.recursion import (
    count_recursive,
    count_recursive_with_bases,
    normalize,
    recursion_trace,
)

F2 = FieldSpec(2)
F3 = FieldSpec(3)


def test_base_case():
    assert count_recursive([(0, 0)], 4) == ONE
    assert count_recursive([], 7) == ONE


def test_invalid_labels_raise():
    with pytest.raises(InvalidLabel):
        count_recursive([(4, 1)], 4)
    with pytest.raises(InvalidLabel):
        count_recursive([(2, 2)], 4)
    with pytest.raises(InvalidLabel):
        count_recursive([(3, 1), (2, 0)], 6)


def test_nonempty_violation_gives_zero():
    assert count_recursive([(3, 1), (1, 0)], 4) == ZERO
    assert count_recursive([(3, 0)], 5) == ZERO


def test_paper_worked_example_rearrangement():
    for N in (5, 6, 7):
        lhs = count_recursive([(3, 1), (1, 0)], N)
        rhs = gaussian_binomial(N - 2, 1) * count_recursive([(1, 0), (0, 0)], N) - count_recursive(
            [(3, 2), (1, 0)], N
        )
        assert lhs == rhs


def test_known_values():
    assert evaluate(count_recursive([(3, 1), (1, 0)], 5), 2) == 124
    # the splitting chain reduces to [N]_q/[m]_q * q^(m(m-1)(n-1)) = (q^2+1)q^2 here
    assert count_recursive(splitting_label(2, 2), 4) == QPoly((0, 0, 1, 0, 1))
    assert evaluate(count_recursive(splitting_label(2, 2), 4), 2) == 20
    assert evaluate(count_recursive(splitting_label(2, 3), 6), 2) == 336


def test_zero_pair_normalization_invariance():
    for label in ([(2, 0)], [(3, 1), (1, 0)]):
        base = count_recursive(label, 6)
        assert count_recursive(list(label) + [(0, 0)], 6) == base
        assert count_recursive(list(label) + [(0, 0), (0, 0)], 6) == base


def test_oracle_agreement_spot():
    f = find_irreducible(F3, 4)
    for label in iter_chain_labels(4):
        want = count_flag_tuple(F3, f, label).count
        got = evaluate(count_recursive(label, 4), 3)
        assert got == want, label


def test_trace_examples():
    assert recursion_trace([(0, 0)], 5) == []
    trace = recursion_trace([(3, 1), (1, 0)], 5)
    assert ((3, 2), (1, 0)) in trace
    assert ((1, 0),) in trace


def test_trace_is_strictly_decreasing_and_finite():
    for N in range(2, 7):
        for label in iter_chain_labels(N, max_r=3):
            trace = recursion_trace(label, N)
            assert len(trace) == len(set(trace))
            key = normalize(label)
            for sub in trace:
                assert precedes(sub, key) or label_key(sub) < label_key(key)


def test_trace_children_precede_parents():
    from splitcount.recursion import _children

    for N in (5, 6):
        for label in iter_chain_labels(N, max_r=2):
            key = normalize(label)
            if not key:
                continue
            for child in _children(key, N, general=False):
                assert precedes(child, key), (child, key)


def test_with_bases_empty_table_matches_plain_recursion():
    for N in (4, 5):
        for label in iter_chain_labels(N, max_r=3):
            assert count_recursive_with_bases(label, N, {}) == count_recursive(label, N)


def test_with_bases_returns_entry_verbatim():
    table = {((4, 4), (2, 2)): QPoly((7,))}
    assert count_recursive_with_bases([(4, 4), (2, 2)], 6, table) == QPoly((7,))
    # integer values are accepted and wrapped
    assert count_recursive_with_bases([(3, 3)], 5, {((3, 3),): 11}) == QPoly((11,))


def test_with_bases_missing_base_modes():
    label = [(2, 0)]  # over any operator, the expansion reaches [(2,2)]
    assert count_recursive_with_bases(label, 4, {}, missing_base="zero") == count_recursive(
        label, 4
    )
    with pytest.raises(MissingBaseCase):
        count_recursive_with_bases(label, 4, {}, missing_base="error")
    with pytest.raises(ValueError):
        count_recursive_with_bases(label, 4, {}, missing_base="maybe")


def test_with_bases_reproduces_identity_operator_counts():
    N = 4
    op = Mat.identity(F2, N)
    bases = {
        key: count_flag_tuple_for_operator(op, key).count
        for key in iter_degenerate_chains(N, 3)
    }
    for label in iter_chain_labels(N, max_r=3, strict=False):
        got = evaluate(count_recursive_with_bases(label, N, bases), 2)
        want = count_flag_tuple_for_operator(op, label).count
        assert got == want, label


def test_memoization_returns_identical_object():
    a = count_recursive([(4, 2), (2, 0)], 6)
    b = count_recursive([(4, 2), (2, 0)], 6)
    assert a is b or a == b
