"""Exact integer and Gaussian-integer arithmetic.

`det_exact` is the ground-truth determinant oracle for all group
determinants in this package.  Everything runs on Python ints, so no
intermediate value can ever overflow or round.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence


def det_exact(matrix: Sequence[Sequence[int]]) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination.

    All divisions performed are exact by construction; pivoting takes the
    first nonzero entry in each column, with row swaps flipping the sign.
    """
    n = len(matrix)
    if n < 1:
        raise ValueError("matrix must be at least 1x1")
    m = [list(row) for row in matrix]
    for row in m:
        if len(row) != n:
            raise ValueError(f"matrix is not square: {n} rows, row of length {len(row)}")

    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


@dataclass(frozen=True)
class GaussianInt:
    """Exact Gaussian integer re + im*i."""

    re: int
    im: int = 0

    def __add__(self, other: "GaussianInt") -> "GaussianInt":
        return GaussianInt(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "GaussianInt") -> "GaussianInt":
        return GaussianInt(self.re - other.re, self.im - other.im)

    def __mul__(self, other: "GaussianInt") -> "GaussianInt":
        return GaussianInt(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def __neg__(self) -> "GaussianInt":
        return GaussianInt(-self.re, -self.im)

    def scale(self, k: int) -> "GaussianInt":
        return GaussianInt(k * self.re, k * self.im)

    def norm(self) -> int:
        return self.re * self.re + self.im * self.im

    def __repr__(self) -> str:
        return f"GaussianInt({self.re}, {self.im})"


GAUSSIAN_ZERO = GaussianInt(0, 0)
GAUSSIAN_ONE = GaussianInt(1, 0)

# i^0, i^1, i^2, i^3
_I_POWERS = (GaussianInt(1, 0), GaussianInt(0, 1), GaussianInt(-1, 0), GaussianInt(0, -1))


def i_power(k: int) -> GaussianInt:
    """i^k as an exact Gaussian integer."""
    return _I_POWERS[k % 4]


Gaussian2x2 = tuple[tuple[GaussianInt, GaussianInt], tuple[GaussianInt, GaussianInt]]


def det2_gaussian(m: Gaussian2x2) -> GaussianInt:
    """ad - bc for a 2x2 Gaussian-integer matrix."""
    (a, b), (c, d) = m
    return a * d - b * c


def mat2_mul(x: Gaussian2x2, y: Gaussian2x2) -> Gaussian2x2:
    (a, b), (c, d) = x
    (e, f), (g, h) = y
    return (
        (a * e + b * g, a * f + b * h),
        (c * e + d * g, c * f + d * h),
    )


def mat2_add(x: Gaussian2x2, y: Gaussian2x2) -> Gaussian2x2:
    return (
        (x[0][0] + y[0][0], x[0][1] + y[0][1]),
        (x[1][0] + y[1][0], x[1][1] + y[1][1]),
    )


def mat2_scale(m: Gaussian2x2, k: int) -> Gaussian2x2:
    return (
        (m[0][0].scale(k), m[0][1].scale(k)),
        (m[1][0].scale(k), m[1][1].scale(k)),
    )


MAT2_IDENTITY: Gaussian2x2 = (
    (GAUSSIAN_ONE, GAUSSIAN_ZERO),
    (GAUSSIAN_ZERO, GAUSSIAN_ONE),
)
MAT2_ZERO: Gaussian2x2 = (
    (GAUSSIAN_ZERO, GAUSSIAN_ZERO),
    (GAUSSIAN_ZERO, GAUSSIAN_ZERO),
)
