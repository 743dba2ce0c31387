"""Sweeps over admissible types and constructed families."""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from itertools import product
from typing import Any, Callable, Iterable, Iterator

from .builder import (
    EpsilonChoice,
    build_family,
    degree_genus_of,
    epsilon_choices,
    is_special_at,
)
from .errors import DomainError
from .typesystem import CoverReport, CoverSpec, TypeVector, check_cover, quadratic_bound

CSV_COLUMNS = ["d", "mu0", "mu1", "mu2", "mu3", "family", "k",
               "gamma0", "gamma1", "gamma2", "gamma3", "n", "g", "dim"]


@dataclass(frozen=True)
class SweepConfig:
    d_max: int
    mu_max: int
    genus_max: int
    format: str = "csv"

    def __post_init__(self):
        if self.d_max < 1 or self.mu_max < 0 or self.genus_max < 0:
            raise DomainError(f"sweep bounds must be positive: {self}")
        if self.format not in ("csv", "json"):
            raise DomainError(f"unknown output format {self.format!r}")


@dataclass(frozen=True)
class Admissible:
    gamma: TypeVector
    max_genus: int


def enumerate_admissible(d: int, n: int, rho: int = 1,
                         checker: Callable[[CoverSpec], CoverReport] = check_cover) -> list[Admissible]:
    """Every type passing the necessary conditions for some genus g >= 0.

    Sorted lexicographically.  ``checker`` can be swapped out to test the
    differential oracle.
    """
    bound = quadratic_bound(d, n, rho)
    if bound < 0:
        return []
    cap = math.isqrt(bound)
    out = []
    for g0 in range(cap + 1):
        r0 = bound - g0 * g0
        for g1 in range(math.isqrt(r0) + 1):
            r1 = r0 - g1 * g1
            for g2 in range(math.isqrt(r1) + 1):
                r2 = r1 - g2 * g2
                for g3 in range(math.isqrt(r2) + 1):
                    gamma = TypeVector((g0, g1, g2, g3))
                    # g = 0 is the weakest genus requirement
                    if checker(CoverSpec(d, n, rho, 0, gamma)).passed:
                        out.append(Admissible(gamma, (gamma.gamma1 - 1) // 2))
    return out


# ---------------------------------------------------------------- families


@dataclass
class FamilyRow:
    d: int
    gamma: tuple[int, int, int, int]
    n: int
    g: int
    parametrizations: list[tuple[tuple[int, ...], EpsilonChoice]] = field(default_factory=list)

    @property
    def dim(self) -> int:
        return self.d - 1

    @property
    def mu(self) -> tuple[int, ...]:
        return self.parametrizations[0][0]

    @property
    def eps(self) -> EpsilonChoice:
        return self.parametrizations[0][1]

    def csv_row(self) -> list[Any]:
        return [self.d, *self.mu, self.eps.family, self.eps.k, *self.gamma, self.n, self.g, self.dim]

    def to_json(self) -> dict[str, Any]:
        return {
            "d": self.d,
            "gamma": list(self.gamma),
            "n": self.n,
            "g": self.g,
            "dim": self.dim,
            "parametrizations": [
                {"mu": list(mu), **eps.to_json(self.d)} for mu, eps in self.parametrizations
            ],
        }


def mu_vectors(mu_max: int) -> Iterator[tuple[int, int, int, int]]:
    for mu in product(range(mu_max + 1), repeat=4):
        if is_special_at(mu, 0):
            yield mu


def family_candidates(d: int, mu_max: int, genus_max: int | None = None):
    """(mu, eps, gamma, n, g) for every choice giving a positive-degree type."""
    scale = 2 * d - 1
    choices = [(ch, ch.vector(d)) for ch in epsilon_choices(d)]
    for mu in mu_vectors(mu_max):
        for ch, e in choices:
            gamma = tuple(scale * m + x for m, x in zip(mu, e))
            if min(gamma) < 0:
                continue
            if genus_max is not None and (sum(gamma) - 1) // 2 > genus_max:
                continue
            try:
                n, g = degree_genus_of(d, gamma)
            except DomainError:
                continue
            yield mu, ch, gamma, n, g


def _sweep_d(d: int, mu_max: int, genus_max: int) -> list[FamilyRow]:
    rows: dict[tuple[int, ...], FamilyRow] = {}
    for mu, ch, gamma, n, g in family_candidates(d, mu_max, genus_max):
        build_family(d, mu, ch)
        row = rows.get(gamma)
        if row is None:
            row = rows[gamma] = FamilyRow(d, gamma, n, g)
        row.parametrizations.append((mu, ch))
    return [rows[k] for k in sorted(rows)]


def enumerate_families(cfg: SweepConfig, workers: int = 1) -> list[FamilyRow]:
    """Constructed families deduplicated by (d, gamma), in lexicographic order.

    Every candidate goes through the full build_family verification; an
    inconsistency propagates as ConstructionInconsistency.  With workers > 1
    the sweep is partitioned by d and merged in the same canonical order.
    """
    ds = list(range(1, cfg.d_max + 1))
    if workers > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_sweep_d, ds, [cfg.mu_max] * len(ds), [cfg.genus_max] * len(ds)))
    else:
        parts = [_sweep_d(d, cfg.mu_max, cfg.genus_max) for d in ds]
    return [row for part in parts for row in part]


def render(rows: Iterable[FamilyRow], fmt: str = "csv") -> str:
    rows = list(rows)
    if fmt == "json":
        return json.dumps([r.to_json() for r in rows], indent=2) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in rows:
        w.writerow(r.csv_row())
    return buf.getvalue()


def construction_gap(d: int, n: int, mu_max: int) -> dict[str, Any]:
    """Admissible types (rho = 1, saturated genus) not reached by the constructions.

    Only data; nothing is claimed about the missing types.
    """
    admissible = {a.gamma.gamma for a in enumerate_admissible(d, n, 1)}
    constructed = {gamma for _, _, gamma, nn, _ in family_candidates(d, mu_max) if nn == n}
    return {
        "d": d,
        "n": n,
        "admissible": len(admissible),
        "constructed": len(constructed & admissible),
        "gap": [list(g) for g in sorted(admissible - constructed)],
    }


# ---------------------------------------------------------------- oracle


@dataclass
class OracleReport:
    d: int
    n_max: int
    admissible_diffs: list[dict[str, Any]] = field(default_factory=list)
    degree_diffs: list[dict[str, Any]] = field(default_factory=list)
    checked_types: int = 0

    @property
    def empty(self) -> bool:
        return not self.admissible_diffs and not self.degree_diffs

    def to_json(self) -> dict[str, Any]:
        return {
            "d": self.d,
            "n_max": self.n_max,
            "empty": self.empty,
            "checked_types": self.checked_types,
            "admissible_diffs": self.admissible_diffs,
            "degree_diffs": self.degree_diffs,
        }


def _oracle_admissible(d, n, rho, gamma) -> bool:
    # Conditions restated from scratch, deliberately not shared with typesystem.
    g0, g1, g2, g3 = gamma
    if g0 + g1 + g2 + g3 < 1:
        return False
    if not ((g0 + 1) % 2 == g1 % 2 == g2 % 2 == g3 % 2 == n % 2):
        return False
    if g0 * g0 + g1 * g1 + g2 * g2 + g3 * g3 > (2 * d - 1) * (2 * n - 2) + 4 - rho * rho:
        return False
    return rho % 2 == 1 and 1 <= rho <= 2 * d - 1


def oracle_crosscheck(d: int, n_max: int,
                      checker: Callable[[CoverSpec], CoverReport] = check_cover,
                      degree: Callable[[int, Any], tuple[int, int]] = degree_genus_of) -> OracleReport:
    """Differential test of enumerate_admissible and degree_genus_of against brute force."""
    rep = OracleReport(d, n_max)
    rhos = list(range(1, 2 * d + 2, 2))  # includes one rho beyond 2d-1
    for n in range(1, n_max + 1):
        cube = math.isqrt(max((2 * d - 1) * (2 * n - 2) + 3, 0))
        for rho in rhos:
            impl = {a.gamma.gamma: a.max_genus for a in enumerate_admissible(d, n, rho, checker)}
            brute = {}
            for gamma in product(range(cube + 1), repeat=4):
                if _oracle_admissible(d, n, rho, gamma):
                    brute[gamma] = (sum(gamma) - 1) // 2
            for gamma in sorted(set(impl) | set(brute)):
                if impl.get(gamma) != brute.get(gamma):
                    rep.admissible_diffs.append({
                        "n": n, "rho": rho, "gamma": list(gamma),
                        "implementation": impl.get(gamma), "oracle": brute.get(gamma),
                    })

    cube = math.isqrt((2 * d - 1) * (2 * n_max - 2) + 3)
    for gamma in product(range(cube + 1), repeat=4):
        rep.checked_types += 1
        sq = sum(x * x for x in gamma)
        expected = None
        if sum(gamma) % 2 == 1:
            for n in range(1, n_max + 1):
                if (2 * d - 1) * (2 * n - 2) + 3 == sq:
                    expected = (n, (sum(gamma) - 1) // 2)
                    break
        try:
            got = degree(d, gamma)
        except DomainError:
            got = None
        if got is not None and got[0] > n_max:
            continue
        if got != expected:
            rep.degree_diffs.append({"gamma": list(gamma), "implementation": got, "oracle": expected})
    return rep
