"""Type vectors, the osculating order rule and the necessary conditions on covers."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Sequence

from .errors import DomainError


@dataclass(frozen=True)
class TypeVector:
    gamma: tuple[int, int, int, int]

    def __post_init__(self):
        g = tuple(self.gamma)
        if len(g) != 4:
            raise DomainError(f"type vector needs 4 entries, got {len(g)}")
        for x in g:
            if isinstance(x, bool) or not isinstance(x, int):
                raise DomainError(f"type entries must be integers, got {x!r}")
            if x < 0:
                raise DomainError(f"type must be in N^4, got {g}")
        object.__setattr__(self, "gamma", g)

    @property
    def gamma1(self) -> int:
        return sum(self.gamma)

    @property
    def gamma2(self) -> int:
        return sum(x * x for x in self.gamma)

    def __iter__(self):
        return iter(self.gamma)

    def __getitem__(self, i: int) -> int:
        return self.gamma[i]


@dataclass(frozen=True)
class CoverSpec:
    """Numerical data (d, n, rho, g, gamma) of a hyperelliptic d-osculating cover.

    The ramification constraint on rho is not enforced here; ``check_cover``
    reports it together with the other conditions.
    """

    d: int
    n: int
    rho: int
    g: int
    type: TypeVector

    def __post_init__(self):
        if not isinstance(self.type, TypeVector):
            object.__setattr__(self, "type", TypeVector(tuple(self.type)))
        if self.d < 1:
            raise DomainError(f"osculating order d must be positive, got {self.d}")
        if self.n < 1:
            raise DomainError(f"degree n must be positive, got {self.n}")
        if self.rho < 1:
            raise DomainError(f"ramification index must be positive, got {self.rho}")
        if self.g < 0:
            raise DomainError(f"genus must be non-negative, got {self.g}")

    def to_json(self) -> dict[str, Any]:
        return {"d": self.d, "n": self.n, "rho": self.rho, "g": self.g, "gamma": list(self.type.gamma)}


def osculating_gap_order(d: int, g: int) -> int:
    """Pole order j at a Weierstrass point reaching the d-th osculating space.

    At a Weierstrass point of a hyperelliptic curve only odd orders are gaps,
    so the d-th osculating space is reached at j = 2d - 1 (which must stay
    below 2g).
    """
    if d < 1 or g < 1:
        raise DomainError(f"need d >= 1 and g >= 1, got d={d}, g={g}")
    j = 2 * d - 1
    if not j < 2 * g:
        raise DomainError(f"order exceeds gap range: 2d-1 = {j} is not < 2g = {2 * g}")
    return j


def quadratic_bound(d: int, n: int, rho: int) -> int:
    return (2 * d - 1) * (2 * n - 2) + 4 - rho * rho


CONDITIONS = ("parity", "genus_bound", "quadratic_bound", "ramification")


@dataclass
class CoverReport:
    spec: CoverSpec
    conditions: dict[str, bool] = field(default_factory=dict)
    details: dict[str, str] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.conditions.values())

    @property
    def violations(self) -> list[str]:
        return [name for name, ok in self.conditions.items() if not ok]

    def to_json(self) -> dict[str, Any]:
        return {
            "cover": self.spec.to_json(),
            "passed": self.passed,
            "conditions": {
                name: {"ok": ok, "detail": self.details.get(name, "")}
                for name, ok in self.conditions.items()
            },
            "violations": self.violations,
        }


def check_cover(spec: CoverSpec) -> CoverReport:
    """Evaluate every necessary condition independently (no short-circuit)."""
    d, n, rho, g = spec.d, spec.n, spec.rho, spec.g
    gam = spec.type
    rep = CoverReport(spec)

    residues = [(gam[0] + 1) % 2, gam[1] % 2, gam[2] % 2, gam[3] % 2, n % 2]
    rep.conditions["parity"] = len(set(residues)) == 1
    rep.details["parity"] = "residues of (g0+1, g1, g2, g3, n) mod 2 = " + str(tuple(residues))

    rep.conditions["genus_bound"] = 2 * g + 1 <= gam.gamma1
    rep.details["genus_bound"] = f"2g+1 = {2 * g + 1}, gamma1 = {gam.gamma1}"

    bound = quadratic_bound(d, n, rho)
    rep.conditions["quadratic_bound"] = gam.gamma2 <= bound
    rep.details["quadratic_bound"] = f"gamma2 = {gam.gamma2}, bound = {bound}"

    rep.conditions["ramification"] = rho % 2 == 1 and rho <= 2 * d - 1
    rep.details["ramification"] = f"rho = {rho}, 2d-1 = {2 * d - 1}"
    return rep


def parse_vector(text: str | Sequence[int], length: int = 4) -> tuple[int, ...]:
    """Parse 'a,b,c,e' into an integer tuple."""
    if isinstance(text, str):
        parts = [p.strip() for p in text.split(",")]
        try:
            vals = tuple(int(p) for p in parts)
        except ValueError:
            raise DomainError(f"malformed integer vector {text!r}") from None
    else:
        vals = tuple(int(x) for x in text)
    if len(vals) != length:
        raise DomainError(f"expected {length} comma-separated integers, got {text!r}")
    return vals
