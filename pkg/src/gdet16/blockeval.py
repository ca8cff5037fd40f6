"""Vectorized batch evaluation of the factored determinant form.

Operates on (n, 16) numpy arrays, one assignment per row.  With entries
bounded by |a_i| <= A the full product is bounded by 2^46 * A^16, so the
int64 path is only safe for A <= 2; larger boxes go through object dtype
(Python ints), which is exact at any size.  The individual factors
(d4b, d4c, m0, m1, F) are bounded by 2^26 * A^8 and stay int64-safe up to
A = 9, which the congruence sweeps rely on.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

INT64_SAFE_PRODUCT_BOUND = 2  # max |a_i| for which the full product fits int64
INT64_SAFE_FACTOR_BOUND = 9  # max |a_i| for which each factor fits int64


@dataclass
class FactorBlocks:
    """Per-row factors for a batch of assignments."""

    b: np.ndarray  # (n, 4)
    c: np.ndarray  # (n, 4)
    d: np.ndarray  # (n, 8)
    d4b: np.ndarray
    d4c: np.ndarray
    m0: np.ndarray
    m1: np.ndarray
    F: np.ndarray


def _d4_block(x: np.ndarray) -> np.ndarray:
    s02 = x[:, 0] + x[:, 2]
    s13 = x[:, 1] + x[:, 3]
    d02 = x[:, 0] - x[:, 2]
    d13 = x[:, 1] - x[:, 3]
    return (s02 * s02 - s13 * s13) * (d02 * d02 + d13 * d13)


def _f4_block(x, y, z, w) -> np.ndarray:
    return x * x + y * y - z * z - w * w


def factor_blocks(a: np.ndarray) -> FactorBlocks:
    """Compute b, c, d and all closed-form factors for each row of a."""
    if a.ndim != 2 or a.shape[1] != 16:
        raise ValueError(f"expected (n, 16) array, got {a.shape}")
    hi = a[:, :8] + a[:, 8:]
    d = a[:, :8] - a[:, 8:]
    b = hi[:, :4] + hi[:, 4:]
    c = hi[:, :4] - hi[:, 4:]
    m0 = _f4_block(
        d[:, 0] - d[:, 2], d[:, 1] - d[:, 3], d[:, 4] - d[:, 6], d[:, 5] - d[:, 7]
    )
    m1 = _f4_block(
        d[:, 5] + d[:, 7], d[:, 0] + d[:, 2], d[:, 1] + d[:, 3], d[:, 4] + d[:, 6]
    )
    return FactorBlocks(
        b=b, c=c, d=d, d4b=_d4_block(b), d4c=_d4_block(c), m0=m0, m1=m1, F=m0 * m1
    )


def products_block(a: np.ndarray) -> np.ndarray:
    """Determinant value d4b * d4c * F^2 for each row of a."""
    fb = factor_blocks(a)
    return fb.d4b * fb.d4c * fb.F * fb.F


def membership_block(values: np.ndarray) -> np.ndarray:
    """Boolean mask: value in {16m+1} union 2^14 * Z, per row."""
    return (values % 16 == 1) | (values % (1 << 14) == 0)


def needs_object_dtype(abs_bound: int) -> bool:
    return abs_bound > INT64_SAFE_PRODUCT_BOUND


def decode_box_indices(
    start: int, stop: int, low: int, width: int, as_object: bool
) -> np.ndarray:
    """Rows start..stop-1 of the lexicographic enumeration of a 16-dim box.

    Variable 15 varies fastest.  Requires stop <= width^16 and the linear
    indices to fit in int64.
    """
    idx = np.arange(start, stop, dtype=np.int64)
    a = np.empty((len(idx), 16), dtype=np.int64)
    rem = idx
    for col in range(15, -1, -1):
        rem, digit = np.divmod(rem, width)
        a[:, col] = digit + low
    return a.astype(object) if as_object else a
