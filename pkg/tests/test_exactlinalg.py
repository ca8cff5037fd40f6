import itertools
import random

import pytest
from hypothesis import given, strategies as st

from gdet16.exactlinalg import GaussianInt, det2_gaussian, det_exact

ints = st.integers(min_value=-1000, max_value=1000)


def test_det_identity_16():
    m = [[1 if i == j else 0 for j in range(16)] for i in range(16)]
    assert det_exact(m) == 1


def test_det_zero_matrix():
    assert det_exact([[0] * 5 for _ in range(5)]) == 0


def test_det_circulant_of_unit_vector():
    m = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]
    assert det_exact(m) == 1


def test_det_rejects_non_square():
    with pytest.raises(ValueError):
        det_exact([[1, 2], [3, 4], [5, 6]])
    with pytest.raises(ValueError):
        det_exact([])


def test_det_permutation_sign():
    n = 5
    for perm in itertools.permutations(range(n)):
        m = [[1 if perm[i] == j else 0 for j in range(n)] for i in range(n)]
        parity = 1
        seen = [False] * n
        for start in range(n):
            if seen[start]:
                continue
            length = 0
            j = start
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                length += 1
            if length % 2 == 0:
                parity = -parity
        assert det_exact(m) == parity


def test_det_multiplicative_on_products():
    rng = random.Random(7)
    for _ in range(200):
        n = rng.randint(1, 4)
        x = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)]
        y = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)]
        xy = [
            [sum(x[i][k] * y[k][j] for k in range(n)) for j in range(n)]
            for i in range(n)
        ]
        assert det_exact(xy) == det_exact(x) * det_exact(y)


def test_det_large_entries_stay_exact():
    big = 10**30
    m = [[big, 1], [1, big]]
    assert det_exact(m) == big * big - 1


@given(ints, ints, ints, ints)
def test_gaussian_norm_multiplicative(a, b, c, d):
    x = GaussianInt(a, b)
    y = GaussianInt(c, d)
    assert (x * y).norm() == x.norm() * y.norm()


@given(ints, ints, ints, ints, ints, ints)
def test_gaussian_ring_laws(a, b, c, d, e, f):
    x, y, z = GaussianInt(a, b), GaussianInt(c, d), GaussianInt(e, f)
    assert x * y == y * x
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + (-x) == GaussianInt(0, 0)


def test_i_has_order_four():
    i = GaussianInt(0, 1)
    assert i * i * i * i == GaussianInt(1, 0)


def test_det2_examples():
    one = GaussianInt(1)
    zero = GaussianInt(0)
    i = GaussianInt(0, 1)
    assert det2_gaussian(((one, zero), (zero, one))) == one
    assert det2_gaussian(((i, zero), (zero, -i))) == one
    assert det2_gaussian(
        ((GaussianInt(1, 1), one), (one, GaussianInt(1, -1)))
    ) == one
