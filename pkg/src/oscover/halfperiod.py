"""The two-torsion group X[2] of the elliptic curve.

Half-periods are labelled 0..3.  Label 0 is the origin q; the nonzero labels
are identified with the nonzero vectors of (Z/2)^2 via their binary digits
(1 -> (1,0), 2 -> (0,1), 3 -> (1,1)), so the group law is bitwise xor.
"""

from __future__ import annotations

from enum import IntEnum
from typing import Iterable


class HalfPeriod(IntEnum):
    W0 = 0
    W1 = 1
    W2 = 2
    W3 = 3

    def __str__(self) -> str:
        return f"w{int(self)}"


ORIGIN = HalfPeriod.W0
ALL = tuple(HalfPeriod)


def add(a: int, b: int) -> HalfPeriod:
    """Group law on X[2]."""
    return HalfPeriod(HalfPeriod(a) ^ HalfPeriod(b))


def total(labels: Iterable[int]) -> HalfPeriod:
    acc = ORIGIN
    for x in labels:
        acc = add(acc, x)
    return acc


def torsion_of_fibers(m: Iterable[int]) -> HalfPeriod:
    """Group sum of the divisor sum(m_i * [w_i]) on X.

    Negative multiplicities are allowed; only their parity matters since
    every half-period is its own inverse.
    """
    m = tuple(m)
    if len(m) != 4:
        raise ValueError(f"expected 4 fiber multiplicities, got {len(m)}")
    return total(i for i, mi in enumerate(m) if mi % 2)


def translate_index(i: int, k: int) -> int:
    """Index of w_i + w_k (translation by a half-period permutes labels)."""
    return int(add(i, k))
