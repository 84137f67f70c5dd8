import pytest

from splitcount.errors import InvalidLabel
from splitcount.labels import (
    format_label,
    is_valid_chain,
    iter_chain_labels,
    iter_degenerate_chains,
    label_key,
    normalize,
    parse_label,
    precedes,
    satisfies_nonempty,
    splitting_label,
    validate_chain,
)


def test_normalize_strips_trailing_zero_pairs():
    assert normalize([(3, 1), (1, 0), (0, 0)]) == ((3, 1), (1, 0))
    assert normalize([(0, 0)]) == ()
    assert normalize([(2, 0)]) == ((2, 0),)
    assert normalize([(2, 1), (0, 0), (0, 0)]) == ((2, 1),)


def test_pair_ordering_examples():
    assert precedes([(3, 2)], [(3, 1)])
    assert precedes([(2, 0)], [(3, 2)])
    assert not precedes([(3, 1)], [(3, 2)])


def test_tuple_ordering_examples():
    assert precedes([(6, 5), (4, 3)], [(6, 5), (4, 2)])
    assert precedes([(5, 2), (2, 0)], [(6, 5), (4, 3)])
    assert precedes([(5, 2)], [(5, 2), (2, 0)])  # extension is strictly greater
    assert not precedes([(5, 2)], [(5, 2)])


def test_label_key_total_order_is_consistent():
    labels = [(), ((1, 0),), ((3, 1), (1, 0)), ((3, 2), (1, 0)), ((3, 1),)]
    ordered = sorted(labels, key=label_key)
    for i, x in enumerate(ordered):
        for y in ordered[i + 1 :]:
            assert precedes(x, y) or label_key(x) == label_key(y)


def test_validity_strict():
    assert is_valid_chain([(3, 1), (1, 0)], 5)
    assert is_valid_chain([(3, 1), (1, 0), (0, 0)], 5)
    assert not is_valid_chain([(5, 1)], 5)  # needs N > a11
    assert not is_valid_chain([(3, 3)], 5)  # strict needs a > b
    assert not is_valid_chain([(3, 1), (2, 0)], 5)  # needs a12 >= a21
    assert is_valid_chain([(3, 1), (1, 1)], 5, strict=False)
    assert not is_valid_chain([(3, 1), (2, 2)], 5, strict=False)
    with pytest.raises(InvalidLabel):
        validate_chain([(4, 4)], 6, strict=True)


def test_nonemptiness_condition():
    assert satisfies_nonempty([(3, 1), (1, 0)], 5)
    assert not satisfies_nonempty([(3, 1), (1, 0)], 4)  # 4 < 2*3-1
    assert satisfies_nonempty([(2, 0)], 4)
    assert not satisfies_nonempty([(3, 0)], 5)  # 5 < 2*3-0
    assert satisfies_nonempty([], 3)


def test_splitting_label():
    assert splitting_label(2, 2) == ((2, 0),)
    assert splitting_label(1, 4) == ((3, 2), (2, 1), (1, 0))
    assert splitting_label(2, 3) == ((4, 2), (2, 0))
    assert splitting_label(5, 1) == ()


def test_parse_and_format_roundtrip():
    assert parse_label("(3,1),(1,0)") == ((3, 1), (1, 0))
    assert parse_label(" ( 3 , 1 ) , ( 1 , 0 ) ") == ((3, 1), (1, 0))
    assert parse_label("(0,0)") == ((0, 0),)
    assert format_label(()) == "(0,0)"
    assert format_label(((3, 1), (1, 0))) == "(3,1),(1,0)"
    with pytest.raises(InvalidLabel):
        parse_label("3,1")
    with pytest.raises(InvalidLabel):
        parse_label("(3,1,2)")


def test_iter_chain_labels_all_valid_and_distinct():
    for strict in (True, False):
        seen = list(iter_chain_labels(5, max_r=4, strict=strict))
        assert len(seen) == len(set(seen))
        assert all(is_valid_chain(lab, 5, strict=strict) for lab in seen)
    # strict labels are a subset of weak ones
    strict_set = set(iter_chain_labels(5, max_r=4))
    weak_set = set(iter_chain_labels(5, max_r=4, strict=False))
    assert strict_set <= weak_set
    # weak chains repeat, so a length cap is mandatory there
    with pytest.raises(ValueError):
        next(iter(iter_chain_labels(5, strict=False)))


def test_iter_degenerate_chains():
    chains = list(iter_degenerate_chains(4, 2))
    assert ((1, 1),) in chains and ((3, 3), (2, 2)) in chains
    assert all(all(a == b for a, b in c) for c in chains)
    assert all(len(c) <= 2 for c in chains)
    assert len(chains) == len(set(chains))
