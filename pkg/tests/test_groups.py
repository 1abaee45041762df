import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from twistalg.groups import (GroupTable, MAX_ORDER, direct_product,
                             make_cyclic, make_subset_group, product_index)


def test_cyclic_table_matches_modular_addition():
    for n in (1, 2, 5, 8):
        g = make_cyclic(n)
        for a in range(n):
            for b in range(n):
                assert g.op(a, b) == (a + b) % n


def test_identity_and_inverse():
    g = make_cyclic(7)
    for a in range(7):
        assert g.op(0, a) == a == g.op(a, 0)
        assert g.op(a, g.inverse(a)) == 0


def test_power():
    g = make_cyclic(5)
    assert g.power(2, 3) == 1
    assert g.power(2, 0) == 0
    assert g.power(2, -1) == 3


def test_non_associative_table_rejected():
    # a random latin-square-ish table that breaks associativity
    mul = [[0, 1, 2], [1, 2, 0], [2, 1, 0]]
    with pytest.raises(ValueError):
        GroupTable(mul)


def test_identity_not_at_zero_rejected():
    mul = [[1, 0], [0, 1]]
    with pytest.raises(ValueError):
        GroupTable(mul)


def test_order_cap():
    with pytest.raises(ValueError):
        GroupTable(np.zeros((MAX_ORDER + 1, MAX_ORDER + 1), dtype=int))


def test_direct_product_structure():
    g = direct_product(make_cyclic(2), make_cyclic(3))
    assert g.order == 6
    a = product_index(make_cyclic(2), make_cyclic(3), 1, 2)
    b = product_index(make_cyclic(2), make_cyclic(3), 1, 1)
    # (1,2)*(1,1) = (0,0)
    assert g.op(a, b) == 0
    assert g.labels[a] == "(1,2)"


def test_subset_group_is_xor():
    g = make_subset_group([1, 2, 3])
    assert g.order == 8
    for a in range(8):
        for b in range(8):
            assert g.op(a, b) == a ^ b
        assert g.inverse(a) == a
    assert g.labels[0] == "{}"
    assert g.labels[5] == "{1,3}"
    assert g.card(5) == 2
    assert g.element_of_labels([1, 3]) == 5


def test_subset_group_duplicate_labels():
    with pytest.raises(ValueError):
        make_subset_group([1, 1])


def test_subset_group_matches_z2_power():
    # bitmask pairing identifies subsets([1..n]) with the n-fold Z/2 product
    g = make_subset_group([1, 2])
    h = direct_product(make_cyclic(2), make_cyclic(2))
    # index (a,b) -> a*2+b vs bitmask b0=label1: reorder bits
    def to_h(mask):
        return (mask & 1) * 2 + (mask >> 1 & 1)
    for a in range(4):
        for b in range(4):
            assert to_h(g.op(a, b)) == h.op(to_h(a), to_h(b))


@settings(max_examples=50, deadline=None)
@given(st.integers(2, 12), st.data())
def test_cyclic_group_laws_random(n, data):
    g = make_cyclic(n)
    a = data.draw(st.integers(0, n - 1))
    b = data.draw(st.integers(0, n - 1))
    c = data.draw(st.integers(0, n - 1))
    assert g.op(g.op(a, b), c) == g.op(a, g.op(b, c))
    assert g.op(g.inverse(a), a) == g.identity
