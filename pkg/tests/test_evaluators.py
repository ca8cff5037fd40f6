import itertools
import random

import pytest

from gdet16.evaluators import (
    InconsistencyError,
    big_f,
    d4,
    d4x2,
    eval_factored,
    eval_oracle,
    eval_oracle_c4,
    eval_oracle_c4x2,
    f4,
    frobenius_eval,
    rep_sum_matrix,
    transform,
)
from gdet16.exactlinalg import det2_gaussian

IDENTITY_INDICATOR = (1,) + (0,) * 15


def test_f4_values():
    assert f4(1, 0, 0, 0) == 1
    assert f4(-1, -1, 0, 2) == -2
    assert f4(2, 1, 1, 0) == 4


def test_big_f_values():
    assert big_f((1, 0, 0, 0, 0, 0, 0, 0)) == (1, 1, 1)
    assert big_f((0, 0, 1, 1, 0, 2, 0, 0)) == (-2, 4, -8)
    m0, m1, f_val = big_f((0, 1, 0, 1, 0, 1, 1, 0))
    assert (m0, m1, f_val) == (-2, -4, 8)


def test_big_f_arity():
    with pytest.raises(ValueError):
        big_f((1, 2, 3))


def test_d4_values():
    assert d4(1, 0, 0, 0) == 1
    assert d4(2, 0, 1, 1) == 16
    assert d4(5, 4, 4, 4) == 17


def test_d4_matches_circulant_oracle_small_box():
    for x in itertools.product(range(-2, 3), repeat=4):
        assert d4(*x) == eval_oracle_c4(x)


def test_d4x2_values():
    assert d4x2((1, 0, 0, 0, 0, 0, 0, 0)) == 1
    assert d4x2((2, 0, 1, 1, 0, 0, 0, 0)) == 256
    y = (2, 0, 1, 1, 0, 2, 0, 0)
    assert d4x2(y) == d4(2, 2, 1, 1) * d4(2, -2, 1, 1)


def test_d4x2_matches_oracle_random():
    rng = random.Random(11)
    for _ in range(200):
        y = tuple(rng.randint(-5, 5) for _ in range(8))
        assert d4x2(y) == eval_oracle_c4x2(y)


def test_transform_examples():
    tv = transform((2,) + (1,) * 15)
    assert tv.b == (5, 4, 4, 4)
    assert tv.c == (1, 0, 0, 0)
    assert tv.d == (1, 0, 0, 0, 0, 0, 0, 0)

    tv = transform((0,) * 16)
    assert tv.b == tv.c == (0, 0, 0, 0)
    assert tv.d == (0,) * 8

    a = (1, 0, 1, 1, 0, 1, 0, 0, 1, 0, 0, 0, 0, -1, 0, 0)
    tv = transform(a)
    for i in range(4):
        assert tv.b[i] == (a[i] + a[i + 8]) + (a[i + 4] + a[i + 12])
        assert tv.c[i] == (a[i] + a[i + 8]) - (a[i + 4] + a[i + 12])
    for i in range(8):
        assert tv.d[i] == a[i] - a[i + 8]


def test_transform_parity_remark():
    rng = random.Random(3)
    for _ in range(300):
        tv = transform(tuple(rng.randint(-9, 9) for _ in range(16)))
        for i in range(4):
            assert tv.b[i] % 2 == tv.c[i] % 2 == (tv.d[i] + tv.d[i + 4]) % 2


def test_eval_factored_examples():
    assert eval_factored(IDENTITY_INDICATOR).product == 1
    assert eval_factored((2,) + (1,) * 15).product == 17
    fb = eval_factored((1, 0, 1, 1, 0, 1, 0, 0, 1, 0, 0, 0, 0, -1, 0, 0))
    assert fb.product == 16384 == 2**14
    assert (fb.d4b, fb.d4c, fb.m0, fb.m1, fb.F) == (16, 16, -2, 4, -8)


def test_factor_breakdown_invariants():
    rng = random.Random(5)
    for _ in range(100):
        fb = eval_factored(tuple(rng.randint(-9, 9) for _ in range(16)))
        assert fb.F == fb.m0 * fb.m1
        assert fb.product == fb.d4b * fb.d4c * fb.F * fb.F


def test_eval_oracle_examples():
    assert eval_oracle(IDENTITY_INDICATOR) == 1
    assert eval_oracle((0,) * 16) == 0


def test_arity_checks():
    for fn in (eval_oracle, eval_factored, frobenius_eval, transform):
        with pytest.raises(ValueError):
            fn((1, 2, 3))


def test_frobenius_examples():
    v = frobenius_eval(IDENTITY_INDICATOR)
    assert (v.re, v.im) == (1, 0)
    v = frobenius_eval((2,) + (1,) * 15)
    assert (v.re, v.im) == (17, 0)


def test_three_way_agreement_random():
    rng = random.Random(99)
    for _ in range(100):
        a = tuple(rng.randint(-9, 9) for _ in range(16))
        oracle = eval_oracle(a)
        fb = eval_factored(a)
        frob = frobenius_eval(a)
        assert oracle == fb.product == frob.re
        assert frob.im == 0


def test_matrix_rep_dets_match_big_f():
    # det of the two 2x2 representation sums equals the two f4 factors of
    # big_f applied to the halved variables
    rng = random.Random(17)
    for _ in range(100):
        a = tuple(rng.randint(-9, 9) for _ in range(16))
        d = transform(a).d
        m0, m1, _ = big_f(d)
        det8 = det2_gaussian(rep_sum_matrix(8, a))
        det9 = det2_gaussian(rep_sum_matrix(9, a))
        assert (det8.re, det8.im) == (m0, 0)
        assert (det9.re, det9.im) == (m1, 0)


def test_inconsistency_error_exists():
    assert issubclass(InconsistencyError, RuntimeError)
