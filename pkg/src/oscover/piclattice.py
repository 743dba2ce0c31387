"""Picard lattice of the blown-up ruled surface S^perp.

S is the ruled surface P(E) over the elliptic curve X with its unique
section C0 of self-intersection 0.  S^perp is S blown up at the eight fixed
points s_0..s_3 (on C0) and r_0..r_3 of the involution; the point s_i and
r_i lie on the fiber over the half-period w_i.

A class is stored as

    c * e^*C0 + sum_i m_i e^*F_i + sum_i s_i * s_i^perp + sum_i r_i * r_i^perp

where F_i is the fiber over w_i.  All fibers are numerically equal; their
Pic^0 part is tracked by the two-torsion label of the multiplicities.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Mapping, Sequence

from .errors import DomainError, LatticeError
from .halfperiod import HalfPeriod

Vec4 = tuple[int, int, int, int]


def _torsion_bits(m: Vec4) -> int:
    # Labels are the binary digits of (Z/2)^2, so the group sum is an xor.
    return (m[1] & 1) * 1 ^ (m[2] & 1) * 2 ^ (m[3] & 1) * 3


def _vec4(v: Sequence[int], name: str) -> Vec4:
    v = tuple(v)
    if len(v) != 4:
        raise DomainError(f"{name} must have 4 entries, got {len(v)}")
    for x in v:
        if isinstance(x, bool) or not isinstance(x, int):
            raise DomainError(f"{name} entries must be integers, got {x!r}")
    return v  # type: ignore[return-value]


@dataclass(frozen=True)
class PicClass:
    c: int = 0
    fibers: Vec4 = (0, 0, 0, 0)
    s: Vec4 = (0, 0, 0, 0)
    r: Vec4 = (0, 0, 0, 0)

    def __post_init__(self):
        if isinstance(self.c, bool) or not isinstance(self.c, int):
            raise DomainError(f"c must be an integer, got {self.c!r}")
        object.__setattr__(self, "fibers", _vec4(self.fibers, "fibers"))
        object.__setattr__(self, "s", _vec4(self.s, "s"))
        object.__setattr__(self, "r", _vec4(self.r, "r"))

    @property
    def fiber_degree(self) -> int:
        return sum(self.fibers)

    @property
    def torsion(self) -> HalfPeriod:
        return HalfPeriod(_torsion_bits(self.fibers))

    @classmethod
    def _raw(cls, c, fibers, s, r) -> "PicClass":
        # Trusted constructor for arithmetic on already-validated classes.
        obj = object.__new__(cls)
        object.__setattr__(obj, "c", c)
        object.__setattr__(obj, "fibers", fibers)
        object.__setattr__(obj, "s", s)
        object.__setattr__(obj, "r", r)
        return obj

    def __add__(self, other: "PicClass") -> "PicClass":
        if not isinstance(other, PicClass):
            return NotImplemented
        f, s, r = self.fibers, self.s, self.r
        g, t, u = other.fibers, other.s, other.r
        return PicClass._raw(
            self.c + other.c,
            (f[0] + g[0], f[1] + g[1], f[2] + g[2], f[3] + g[3]),
            (s[0] + t[0], s[1] + t[1], s[2] + t[2], s[3] + t[3]),
            (r[0] + u[0], r[1] + u[1], r[2] + u[2], r[3] + u[3]),
        )

    def __neg__(self) -> "PicClass":
        return -1 * self

    def __sub__(self, other: "PicClass") -> "PicClass":
        if not isinstance(other, PicClass):
            return NotImplemented
        return self + (-1 * other)

    def __rmul__(self, k: int) -> "PicClass":
        if isinstance(k, bool) or not isinstance(k, int):
            return NotImplemented
        if k == 1:
            return self
        f, s, r = self.fibers, self.s, self.r
        return PicClass._raw(
            k * self.c,
            (k * f[0], k * f[1], k * f[2], k * f[3]),
            (k * s[0], k * s[1], k * s[2], k * s[3]),
            (k * r[0], k * r[1], k * r[2], k * r[3]),
        )

    __mul__ = __rmul__

    def is_zero(self) -> bool:
        return self == ZERO

    def to_json(self) -> dict[str, Any]:
        return {
            "c": self.c,
            "fibers": list(self.fibers),
            "s": list(self.s),
            "r": list(self.r),
        }

    @classmethod
    def from_json(cls, data: Mapping[str, Any] | str) -> "PicClass":
        if isinstance(data, str):
            try:
                data = json.loads(data)
            except json.JSONDecodeError as exc:
                raise DomainError(f"malformed class JSON: {exc}") from None
        if not isinstance(data, Mapping):
            raise DomainError("class JSON must be an object")
        extra = set(data) - {"c", "fibers", "s", "r"}
        if extra:
            raise DomainError(f"unknown class fields: {sorted(extra)}")
        return cls(
            data.get("c", 0),
            tuple(data.get("fibers", (0, 0, 0, 0))),
            tuple(data.get("s", (0, 0, 0, 0))),
            tuple(data.get("r", (0, 0, 0, 0))),
        )

    def __str__(self) -> str:
        terms = []
        if self.c:
            terms.append(f"{self.c}*C0")
        for name, vec in (("F", self.fibers), ("s", self.s), ("r", self.r)):
            for i, a in enumerate(vec):
                if a:
                    terms.append(f"{a}*{name}{i}")
        return " + ".join(terms) if terms else "0"


ZERO = PicClass()


def _unit(i: int) -> Vec4:
    v = [0, 0, 0, 0]
    v[i] = 1
    return tuple(v)  # type: ignore[return-value]


_SECTION = PicClass(c=1)
_FIBERS = tuple(PicClass(fibers=_unit(i)) for i in range(4))
_S = tuple(PicClass(s=_unit(i)) for i in range(4))
_R = tuple(PicClass(r=_unit(i)) for i in range(4))


def section() -> PicClass:
    """Pullback e^*C0 of the zero-section."""
    return _SECTION


def fiber(i: int) -> PicClass:
    """Pullback of the fiber over w_i."""
    return _FIBERS[i]


def s_exc(i: int) -> PicClass:
    return _S[i]


def r_exc(i: int) -> PicClass:
    return _R[i]


def intersect(a: PicClass, b: PicClass) -> int:
    # e^*C0 . fiber = 1, everything else off-diagonal vanishes.
    return (
        a.c * b.fiber_degree
        + b.c * a.fiber_degree
        - sum(x * y for x, y in zip(a.s, b.s))
        - sum(x * y for x, y in zip(a.r, b.r))
    )


def self_intersection(a: PicClass) -> int:
    return intersect(a, a)


def canonical_class() -> PicClass:
    """K = e^*K_S + sum of exceptional curves, with K_S = -2 C0 numerically."""
    return PicClass(c=-2, s=(1, 1, 1, 1), r=(1, 1, 1, 1))


def adjunction_genus(D: PicClass) -> int:
    """Arithmetic genus 1 + D.(D+K)/2."""
    t = intersect(D, D + canonical_class())
    if t % 2:
        raise LatticeError(f"D.(D+K) = {t} is odd for {D}")
    return 1 + t // 2


def lin_equiv(a: PicClass, b: PicClass) -> bool:
    return (
        a.c == b.c
        and a.s == b.s
        and a.r == b.r
        and sum(a.fibers) == sum(b.fibers)
        and _torsion_bits(a.fibers) == _torsion_bits(b.fibers)
    )


@dataclass(frozen=True)
class NamedCurve:
    """A curve on S^perp with a role: strict C0, an exceptional curve, or a Z-curve."""

    kind: str
    cls: PicClass
    index: int | None = None
    label: str = field(default="", compare=False)

    KINDS = ("C0_strict", "s_exceptional", "r_exceptional", "Z_curve")

    def __post_init__(self):
        if self.kind not in self.KINDS:
            raise DomainError(f"unknown curve kind {self.kind!r}")

    @property
    def key(self) -> str:
        if self.kind == "C0_strict":
            return "C0"
        if self.kind == "s_exceptional":
            return f"s{self.index}"
        if self.kind == "r_exceptional":
            return f"r{self.index}"
        return self.label or "Z"


def c0_strict() -> NamedCurve:
    # C0 passes through all four s_i.
    return NamedCurve("C0_strict", section() - PicClass(s=(1, 1, 1, 1)))


def s_curve(i: int) -> NamedCurve:
    return NamedCurve("s_exceptional", s_exc(i), index=i)


def r_curve(i: int) -> NamedCurve:
    return NamedCurve("r_exceptional", r_exc(i), index=i)


def boundary_curves() -> list[NamedCurve]:
    """C0^perp and the eight exceptional curves."""
    return [c0_strict()] + [s_curve(i) for i in range(4)] + [r_curve(i) for i in range(4)]
