"""Test-only word-rewriting oracle for the group presentation.

Reduces words over the generators {1, 2, 3} (standing for g1, g2, g3)
to the sorted normal form 1^r 2^s 3^t using only the defining relations:

    1*1 -> e,  2*2 -> e,  3*3*3*3 -> e,
    2*1 -> 1*2,  3*1 -> 1*3,  3*2 -> 2*3*1.

The shipped closed-form multiplication must agree with this reduction.
"""

from __future__ import annotations

from gdet16.groups import GroupElement


def reduce_word(word: list[int]) -> list[int]:
    w = list(word)
    changed = True
    while changed:
        changed = False
        for i in range(len(w) - 1):
            x, y = w[i], w[i + 1]
            if (x, y) == (3, 2):
                w[i : i + 2] = [2, 3, 1]
                changed = True
                break
            if (x, y) in ((2, 1), (3, 1)):
                w[i], w[i + 1] = y, x
                changed = True
                break
            if x == y and x in (1, 2):
                del w[i : i + 2]
                changed = True
                break
        if not changed and w.count(3) >= 4:
            # word is sorted now; drop one full g3 cycle
            i = w.index(3)
            del w[i : i + 4]
            changed = True
    return w


def word_of(x: GroupElement) -> list[int]:
    return [1] * x.r + [2] * x.s + [3] * x.t


def element_of_word(word: list[int]) -> GroupElement:
    w = reduce_word(word)
    assert w == sorted(w), f"reduction did not sort: {w}"
    return GroupElement(r=w.count(1), s=w.count(2), t=w.count(3))


def oracle_multiply(x: GroupElement, y: GroupElement) -> GroupElement:
    return element_of_word(word_of(x) + word_of(y))
