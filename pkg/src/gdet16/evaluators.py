"""Evaluation paths for the 16-variable group determinant of G.

Three independent routes to the same integer:

  * `eval_oracle`    -- exact 16x16 determinant of the Cayley matrix,
  * `eval_factored`  -- closed form D4(b) * D4(c) * F(d)^2 through the
                        b/c/d change of variables,
  * `frobenius_eval` -- product over the ten irreducible representations
                        of G (eight linear characters and two 2-dim reps).

The factored route also exposes every factor, which the congruence
analysis in `analysis` consumes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .exactlinalg import (
    GAUSSIAN_ONE,
    Gaussian2x2,
    GaussianInt,
    MAT2_IDENTITY,
    MAT2_ZERO,
    det2_gaussian,
    det_exact,
    i_power,
    mat2_add,
    mat2_mul,
    mat2_scale,
)
from .groups import cayley_matrix, element_from_index

Assignment = Sequence[int]


class InconsistencyError(RuntimeError):
    """Internal cross-check failed; indicates a table or formula bug."""


def _check_assignment(a: Assignment) -> None:
    if len(a) != 16:
        raise ValueError(f"assignment must have 16 entries, got {len(a)}")


@dataclass(frozen=True)
class TransformedVars:
    """The b/c/d change of variables splitting a 16-tuple for factoring."""

    b: tuple[int, int, int, int]
    c: tuple[int, int, int, int]
    d: tuple[int, int, int, int, int, int, int, int]


@dataclass(frozen=True)
class FactorBreakdown:
    """All factors of the closed form: product = d4b * d4c * F^2, F = m0 * m1."""

    d4b: int
    d4c: int
    m0: int
    m1: int
    F: int
    product: int


class BigFResult(NamedTuple):
    m0: int
    m1: int
    F: int


def f4(x: int, y: int, z: int, w: int) -> int:
    """The quadratic form x^2 + y^2 - z^2 - w^2."""
    return x * x + y * y - z * z - w * w


def big_f(w: Sequence[int]) -> BigFResult:
    """The 8-variable form F(w) = m0 * m1 built from two f4 evaluations."""
    if len(w) != 8:
        raise ValueError(f"big_f takes 8 values, got {len(w)}")
    m0 = f4(w[0] - w[2], w[1] - w[3], w[4] - w[6], w[5] - w[7])
    m1 = f4(w[5] + w[7], w[0] + w[2], w[1] + w[3], w[4] + w[6])
    return BigFResult(m0, m1, m0 * m1)


def d4(x0: int, x1: int, x2: int, x3: int) -> int:
    """Circulant determinant of C4 in closed form."""
    return ((x0 + x2) ** 2 - (x1 + x3) ** 2) * ((x0 - x2) ** 2 + (x1 - x3) ** 2)


def d4x2(y: Sequence[int]) -> int:
    """Group determinant of C4xC2 as a product of two C4 determinants."""
    if len(y) != 8:
        raise ValueError(f"d4x2 takes 8 values, got {len(y)}")
    return d4(y[0] + y[4], y[1] + y[5], y[2] + y[6], y[3] + y[7]) * d4(
        y[0] - y[4], y[1] - y[5], y[2] - y[6], y[3] - y[7]
    )


def transform(a: Assignment) -> TransformedVars:
    """Split a into the 4-vectors b, c and the 8-vector d."""
    _check_assignment(a)
    hi = [a[i] + a[i + 8] for i in range(8)]
    b = tuple(hi[i] + hi[i + 4] for i in range(4))
    c = tuple(hi[i] - hi[i + 4] for i in range(4))
    d = tuple(a[i] - a[i + 8] for i in range(8))
    return TransformedVars(b=b, c=c, d=d)


def eval_factored(a: Assignment) -> FactorBreakdown:
    """Closed-form evaluation with every factor exposed."""
    tv = transform(a)
    d4b = d4(*tv.b)
    d4c = d4(*tv.c)
    m0, m1, f_val = big_f(tv.d)
    return FactorBreakdown(
        d4b=d4b, d4c=d4c, m0=m0, m1=m1, F=f_val, product=d4b * d4c * f_val * f_val
    )


def eval_oracle(a: Assignment) -> int:
    """Ground truth: exact determinant of the 16x16 Cayley matrix at a."""
    _check_assignment(a)
    idx = cayley_matrix("G16")
    return det_exact([[a[j] for j in row] for row in idx])


def eval_oracle_c4(x: Sequence[int]) -> int:
    """Exact 4x4 circulant determinant, the oracle counterpart of d4."""
    if len(x) != 4:
        raise ValueError(f"expected 4 values, got {len(x)}")
    idx = cayley_matrix("C4")
    return det_exact([[x[j] for j in row] for row in idx])


def eval_oracle_c4x2(y: Sequence[int]) -> int:
    """Exact 8x8 determinant for C4xC2, the oracle counterpart of d4x2."""
    if len(y) != 8:
        raise ValueError(f"expected 8 values, got {len(y)}")
    idx = cayley_matrix("C4x2")
    return det_exact([[y[j] for j in row] for row in idx])


# Representation tables.  rep k in 0..7 is the linear character with
#   g1 -> 1,  g2 -> (-1)^(k // 4),  g3 -> i^k;
# rep k in 8..9 is 2-dimensional with
#   g1 -> -I,  g2 -> (-1)^k * [[0,1],[1,0]],  g3 -> i^(k+1) * [[1,0],[0,-1]].
# Tables are built once per process and validated by the homomorphism test
# in the test suite rather than trusted.


def scalar_rep_table(k: int) -> tuple[GaussianInt, ...]:
    """Values of linear character k on elements 0..15 (k in 0..7)."""
    if not 0 <= k <= 7:
        raise ValueError(f"linear characters are k in 0..7, got {k}")
    out = []
    for j in range(16):
        g = element_from_index(j)
        sign = -1 if (k // 4) * g.s % 2 else 1
        out.append(i_power(k * g.t).scale(sign))
    return tuple(out)


def matrix_rep_table(k: int) -> tuple[Gaussian2x2, ...]:
    """Values of 2-dim representation k on elements 0..15 (k in 8..9)."""
    if k not in (8, 9):
        raise ValueError(f"2-dim representations are k in 8..9, got {k}")
    swap: Gaussian2x2 = (
        (GaussianInt(0), GAUSSIAN_ONE),
        (GAUSSIAN_ONE, GaussianInt(0)),
    )
    phi_g1 = mat2_scale(MAT2_IDENTITY, -1)
    phi_g2 = mat2_scale(swap, (-1) ** k)
    ik1 = i_power(k + 1)
    phi_g3: Gaussian2x2 = (
        (ik1, GaussianInt(0)),
        (GaussianInt(0), -ik1),
    )
    out = []
    for j in range(16):
        g = element_from_index(j)
        m = MAT2_IDENTITY
        for _ in range(g.r):
            m = mat2_mul(m, phi_g1)
        for _ in range(g.s):
            m = mat2_mul(m, phi_g2)
        for _ in range(g.t):
            m = mat2_mul(m, phi_g3)
        out.append(m)
    return tuple(out)


_SCALAR_TABLES = tuple(scalar_rep_table(k) for k in range(8))
_MATRIX_TABLES = (matrix_rep_table(8), matrix_rep_table(9))


def rep_sum_scalar(k: int, a: Assignment) -> GaussianInt:
    """sum_g phi_k(g) * a_g for a linear character k."""
    table = _SCALAR_TABLES[k]
    total = GaussianInt(0)
    for j in range(16):
        total = total + table[j].scale(a[j])
    return total


def rep_sum_matrix(k: int, a: Assignment) -> Gaussian2x2:
    """sum_g phi_k(g) * a_g for a 2-dim representation k (8 or 9)."""
    table = _MATRIX_TABLES[k - 8]
    total = MAT2_ZERO
    for j in range(16):
        total = mat2_add(total, mat2_scale(table[j], a[j]))
    return total


def frobenius_eval(a: Assignment) -> GaussianInt:
    """Determinant as the product over all ten irreducible representations.

    Raises InconsistencyError if the product has a nonzero imaginary part,
    which can only come from a representation-table bug.
    """
    _check_assignment(a)
    total = GAUSSIAN_ONE
    for k in range(8):
        total = total * rep_sum_scalar(k, a)
    for k in (8, 9):
        dm = det2_gaussian(rep_sum_matrix(k, a))
        total = total * dm * dm
    if total.im != 0:
        raise InconsistencyError(
            f"representation product has nonzero imaginary part {total.im} at a={tuple(a)}"
        )
    return total
