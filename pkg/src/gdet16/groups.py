"""The groups C4, C4xC2 and G = C2^2 x| C4 with fixed index encodings.

G is the order-16 semidirect product with presentation

    g1^2 = g2^2 = g3^4 = e,  g1 g2 = g2 g1,  g1 g3 = g3 g1,  g2 g3 = g3 g2 g1.

Every element has a normal form g1^r g2^s g3^t and is exposed through the
index j = t + 4*s + 8*r, so 16-tuples of coefficients line up with indices
0..15.  C4 uses j = r, C4xC2 uses j = r + 4*s.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

GROUP_ORDERS = {"C4": 4, "C4x2": 8, "G16": 16}


@dataclass(frozen=True)
class GroupElement:
    """Normal form g1^r g2^s g3^t of an element of G."""

    r: int  # exponent of g1, in {0, 1}
    s: int  # exponent of g2, in {0, 1}
    t: int  # exponent of g3, in {0, 1, 2, 3}

    def __post_init__(self) -> None:
        if self.r not in (0, 1) or self.s not in (0, 1) or self.t not in range(4):
            raise ValueError(f"not a normal form: {(self.r, self.s, self.t)}")

    @property
    def index(self) -> int:
        return self.t + 4 * self.s + 8 * self.r


IDENTITY = GroupElement(0, 0, 0)

G1 = GroupElement(1, 0, 0)
G2 = GroupElement(0, 1, 0)
G3 = GroupElement(0, 0, 1)


def element_from_index(j: int) -> GroupElement:
    if not 0 <= j <= 15:
        raise ValueError(f"index out of range: {j}")
    return GroupElement(r=(j >> 3) & 1, s=(j >> 2) & 1, t=j & 3)


def multiply(x: GroupElement, y: GroupElement) -> GroupElement:
    """Product x*y in G, in normal form.

    Commuting g3^t past g2^s' picks up the central correction g1^(t*s'),
    which is the only twist in the presentation.
    """
    return GroupElement(
        r=(x.r + y.r + x.t * y.s) % 2,
        s=(x.s + y.s) % 2,
        t=(x.t + y.t) % 4,
    )


def inverse(x: GroupElement) -> GroupElement:
    """Inverse in G: multiply(x, inverse(x)) == IDENTITY."""
    return GroupElement(r=(x.r + x.t * x.s) % 2, s=x.s, t=(-x.t) % 4)


def all_elements() -> list[GroupElement]:
    return [element_from_index(j) for j in range(16)]


@lru_cache(maxsize=None)
def cayley_matrix(group_id: str) -> tuple[tuple[int, ...], ...]:
    """Index matrix (index of g * h^-1) for the named group.

    Rows and columns run over indices 0..n-1 in the group's encoding; the
    entry at (g, h) is the index of g * h^-1, so evaluating a determinant
    at a coefficient vector a is det(a[entry]).
    """
    if group_id == "C4":
        return tuple(tuple((g - h) % 4 for h in range(4)) for g in range(4))
    if group_id == "C4x2":
        rows = []
        for g in range(8):
            gr, gs = g % 4, g // 4
            row = []
            for h in range(8):
                hr, hs = h % 4, h // 4
                row.append((gr - hr) % 4 + 4 * ((gs - hs) % 2))
            rows.append(tuple(row))
        return tuple(rows)
    if group_id == "G16":
        elems = all_elements()
        return tuple(
            tuple(multiply(g, inverse(h)).index for h in elems) for g in elems
        )
    raise ValueError(f"unknown group id: {group_id!r}")
