import pytest
from hypothesis import given, strategies as st

from nsmacdonald import ContractViolation
from nsmacdonald.lattice import (Box, attacks, build_diagram, normalize_weight, pi_op, rotate_right,
                                 simple_transposition, transposition)

weights = st.lists(st.integers(-5, 5), min_size=1, max_size=6).map(tuple)
compositions = st.lists(st.integers(0, 3), min_size=1, max_size=4).map(tuple)


def test_simple_transposition_examples():
    assert simple_transposition((0, 2, 0), 1) == (2, 0, 0)
    assert simple_transposition((1, 0, 1), 2) == (1, 1, 0)
    assert simple_transposition(simple_transposition((5, 7), 1), 1) == (5, 7)


def test_transposition_examples():
    assert transposition((0, 0, 2), 1, 3) == (2, 0, 0)
    assert transposition((0, 0, 2), 2, 3) == (0, 2, 0)
    for v in [(1, 2, 3), (4, 0, 0, 1)]:
        assert transposition(v, 1, 2) == simple_transposition(v, 1)


@pytest.mark.parametrize("call", [
    lambda: simple_transposition((1, 2), 2),
    lambda: simple_transposition((1, 2), 0),
    lambda: transposition((1, 2, 3), 2, 2),
    lambda: transposition((1, 2, 3), 3, 1),
    lambda: transposition((1, 2, 3), 1, 4),
    lambda: simple_transposition((1.5, 2), 1),
    lambda: pi_op(()),
])
def test_contract_violations(call):
    with pytest.raises(ContractViolation):
        call()


def test_pi_examples():
    assert pi_op((0, 2, 0)) == (1, 0, 2)
    assert pi_op((0, 0, 0)) == (1, 0, 0)


def test_normalize_examples():
    assert normalize_weight((-1, 1, 0)) == (-1, (0, 2, 1))
    assert normalize_weight((3, 3, 3)) == (3, (0, 0, 0))
    assert normalize_weight((0, 2, 0)) == (0, (0, 2, 0))


@given(weights, st.data())
def test_simple_transposition_is_involution(v, data):
    if len(v) < 2:
        return
    i = data.draw(st.integers(1, len(v) - 1))
    assert simple_transposition(simple_transposition(v, i), i) == v


@given(weights)
def test_pi_adds_one_and_has_positive_head_on_compositions(v):
    assert sum(pi_op(v)) == sum(v) + 1
    assert pi_op(v) == tuple(a + (k == 0) for k, a in enumerate(rotate_right(v)))
    if min(v) >= 0:
        assert pi_op(v)[0] >= 1


@given(weights)
def test_normalize_weight_decomposes(v):
    m, c = normalize_weight(v)
    assert min(c) == 0
    assert tuple(a - m for a in v) == c


def test_diagram_102():
    dg = build_diagram((1, 0, 2))
    assert dg.boxes == (Box(1, 1), Box(3, 1), Box(3, 2))
    pairs = dg.attack_pairs
    assert frozenset((Box(1, 1), Box(2, 0))) in pairs
    assert frozenset((Box(1, 1), Box(3, 0))) in pairs
    assert frozenset((Box(1, 1), Box(3, 1))) in pairs
    assert not any(Box(3, 2) in p for p in pairs)


def test_diagram_empty_and_22():
    assert not any(b.row > 0 for p in build_diagram((0, 0, 0)).attack_pairs for b in p)
    pairs = build_diagram((2, 2)).attack_pairs
    assert frozenset((Box(1, 1), Box(2, 1))) in pairs
    assert frozenset((Box(2, 1), Box(1, 2))) in pairs
    assert frozenset((Box(1, 1), Box(1, 2))) not in pairs


def _pair_scan(c):
    cells = [Box(i, 0) for i in range(1, len(c) + 1)]
    cells += [Box(i, j) for i in range(1, len(c) + 1) for j in range(1, c[i - 1] + 1)]
    out = set()
    for u in cells:
        for v in cells:
            if u == v:
                continue
            same_row = u.row == v.row
            lower, upper = (u, v) if u.row < v.row else (v, u)
            stacked = upper.row - lower.row == 1 and lower.column > upper.column
            if same_row or stacked:
                out.add(frozenset((u, v)))
    return out


@given(compositions)
def test_attack_pairs_match_quadratic_scan(c):
    dg = build_diagram(c)
    assert set(dg.attack_pairs) == _pair_scan(c)
    assert dg.attack_pairs == build_diagram(c).attack_pairs
    assert len(dg.boxes) == sum(c)
    for p in dg.attack_pairs:
        u, v = tuple(p)
        assert u.column != v.column
        assert attacks(u, v) and attacks(v, u)


def test_reading_order():
    boxes = build_diagram((2, 0, 3, 1)).boxes
    assert [tuple(b) for b in boxes] == [(1, 1), (3, 1), (4, 1), (1, 2), (3, 2), (3, 3)]
