import itertools

import pytest

from gdet16.groups import (
    G1,
    G2,
    G3,
    IDENTITY,
    GroupElement,
    all_elements,
    cayley_matrix,
    element_from_index,
    inverse,
    multiply,
)
from rewriting_oracle import oracle_multiply


def test_index_is_bijection():
    seen = {element_from_index(j).index for j in range(16)}
    assert seen == set(range(16))
    assert IDENTITY.index == 0


def test_normal_form_validation():
    with pytest.raises(ValueError):
        GroupElement(2, 0, 0)
    with pytest.raises(ValueError):
        GroupElement(0, 0, 4)
    with pytest.raises(ValueError):
        element_from_index(16)


def test_noncommuting_pair():
    assert multiply(G2, G3) == GroupElement(0, 1, 1)
    assert multiply(G2, G3).index == 5
    assert multiply(G3, G2) == GroupElement(1, 1, 1)
    assert multiply(G3, G2).index == 13


def test_identity_law():
    for x in all_elements():
        assert multiply(IDENTITY, x) == x
        assert multiply(x, IDENTITY) == x


def test_multiply_matches_rewriting_oracle():
    for x in all_elements():
        for y in all_elements():
            assert multiply(x, y) == oracle_multiply(x, y), (x, y)


def test_associativity_exhaustive():
    elems = all_elements()
    for x, y, z in itertools.product(elems, repeat=3):
        assert multiply(multiply(x, y), z) == multiply(x, multiply(y, z))


def test_g1_is_central():
    for x in all_elements():
        assert multiply(G1, x) == multiply(x, G1)


def test_element_orders():
    def order(x):
        y, n = x, 1
        while y != IDENTITY:
            y = multiply(y, x)
            n += 1
        return n

    assert order(G1) == 2
    assert order(G2) == 2
    assert order(G3) == 4


def test_inverse():
    assert inverse(IDENTITY) == IDENTITY
    assert inverse(G3) == GroupElement(0, 0, 3)
    for x in all_elements():
        assert multiply(x, inverse(x)) == IDENTITY
        assert multiply(inverse(x), x) == IDENTITY


def test_cayley_c4_identity_row():
    m = cayley_matrix("C4")
    assert m[0] == (0, 3, 2, 1)


@pytest.mark.parametrize("group_id,n", [("C4", 4), ("C4x2", 8), ("G16", 16)])
def test_cayley_rows_and_columns_are_permutations(group_id, n):
    m = cayley_matrix(group_id)
    assert len(m) == n
    full = set(range(n))
    for row in m:
        assert set(row) == full
    for col in zip(*m):
        assert set(col) == full


@pytest.mark.parametrize("group_id", ["C4", "C4x2", "G16"])
def test_cayley_diagonal_is_identity(group_id):
    m = cayley_matrix(group_id)
    assert all(m[g][g] == 0 for g in range(len(m)))


def test_unknown_group_rejected():
    with pytest.raises(ValueError):
        cayley_matrix("D8")
