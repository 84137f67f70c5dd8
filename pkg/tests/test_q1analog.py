from itertools import permutations

import pytest

from splitcount.closedform import flag_count_formula, pair_class_formula, splitting_count_formula
from splitcount.errors import InvalidParameters
from splitcount.labels import iter_chain_labels, iter_pair_classes, splitting_label
from splitcount.q1analog import (
    count_flag_subsets,
    count_pair_class_sets,
    count_splitting_subsets,
    cyclic_shift,
    cyclic_unshift,
    pair_class_set_formulas,
)
from splitcount.qarith import evaluate


def _mask(*elements, n):
    m = 0
    for e in elements:
        m |= 1 << (e - 1)
    return m


def test_shift_examples():
    assert cyclic_shift(_mask(1, 2, n=4), 4) == _mask(2, 3, n=4)
    full = (1 << 4) - 1
    assert cyclic_shift(full, 4) == full
    assert cyclic_shift(0, 4) == 0
    assert cyclic_shift(_mask(4, n=4), 4) == _mask(1, n=4)  # wraps around
    assert cyclic_unshift(cyclic_shift(0b1011, 5), 5) == 0b1011


def test_count_splitting_subsets_is_n():
    assert count_splitting_subsets(2, 3) == 3
    assert count_splitting_subsets(3, 2) == 2
    assert count_splitting_subsets(1, 4) == 4
    for m in range(1, 7):
        for n in range(1, 13):
            if m * n <= 12:
                assert count_splitting_subsets(m, n) == n


def test_count_pair_class_sets_examples():
    assert count_pair_class_sets(2, 0, 5) == 5
    assert count_pair_class_sets(1, 0, 4) == 4
    assert count_pair_class_sets(0, 0, 6) == 1
    with pytest.raises(InvalidParameters):
        count_pair_class_sets(3, 3, 5)


def test_pair_class_set_formulas_agree_with_brute_force():
    for N in range(2, 13):
        for a, b in iter_pair_classes(N):
            got = count_pair_class_sets(a, b, N)
            f1, f2 = pair_class_set_formulas(a, b, N)
            assert got == f1 == f2, (a, b, N)
            if a:
                assert got == evaluate(pair_class_formula(a, b, N), 1)


def test_count_flag_subsets_examples():
    assert count_flag_subsets([(0, 0)], 5) == 1
    assert count_flag_subsets(splitting_label(2, 2), 4) == 2
    assert count_flag_subsets([(2, 0)], 4) == count_pair_class_sets(2, 0, 4)


def test_flag_subsets_match_formula_at_q1():
    for N in range(2, 9):
        for label in iter_chain_labels(N, max_r=3):
            got = count_flag_subsets(label, N)
            want = evaluate(flag_count_formula(label, N), 1)
            assert got == want, (N, label)


def test_splitting_subsets_match_formula_at_q1():
    for m, n in ((2, 3), (3, 2), (2, 4), (4, 2), (1, 6)):
        assert count_splitting_subsets(m, n) == evaluate(
            splitting_count_formula(m, n, m * n), 1
        )


def test_bit_cap_guard():
    with pytest.raises(InvalidParameters):
        count_splitting_subsets(3, 7)  # 21 bits


def _preserves_proper_subset(perm):
    n = len(perm)
    for mask in range(1, (1 << n) - 1):
        img = 0
        for i in range(n):
            if (mask >> i) & 1:
                img |= 1 << perm[i]
        if img == mask:
            return True
    return False


def _is_n_cycle(perm):
    n = len(perm)
    seen = 1
    j = perm[0]
    while j != 0:
        j = perm[j]
        seen += 1
    return seen == n


def test_only_full_cycles_preserve_no_proper_subset():
    for n in range(1, 7):
        for perm in permutations(range(n)):
            assert _preserves_proper_subset(perm) != _is_n_cycle(perm)
