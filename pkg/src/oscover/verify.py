"""End-to-end consistency suite behind ``verify-paper`` and the acceptance tests."""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from itertools import product
from typing import Any, Callable

from .builder import (
    EpsilonChoice,
    build_family,
    closed_form_degree,
    degree_genus_of,
    epsilon_choices,
    gamma_of,
    is_family_a_shaped,
    lambda_class,
    z_coefficient,
)
from .certificates import hyperelliptic_weierstrass_certificate, irreducibility_certificate, lambda_certificate
from .enumerator import family_candidates, mu_vectors, oracle_crosscheck
from .errors import OscoverError
from .piclattice import PicClass, adjunction_genus, canonical_class, intersect, lin_equiv
from .typesystem import CoverSpec, check_cover


@dataclass
class CriterionResult:
    key: str
    title: str
    passed: bool
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    notes: dict[str, Any] = field(default_factory=dict)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.key} {self.title} (checked {self.checked})"

    def to_json(self) -> dict[str, Any]:
        return {
            "key": self.key,
            "title": self.title,
            "passed": self.passed,
            "checked": self.checked,
            "failures": self.failures[:20],
            "notes": self.notes,
        }


def _result(key, title, failures, checked, **notes):
    return CriterionResult(key, title, not failures, checked, failures, notes)


def genus_identity(d_max: int, mu_max: int) -> CriterionResult:
    """Adjunction genus of Lambda equals (gamma1-1)/2 for every type in N^4."""
    failures, checked, nonpositive = [], 0, 0
    for d in range(1, d_max + 1):
        for mu in mu_vectors(mu_max):
            for ch in epsilon_choices(d):
                e = ch.vector(d)
                gamma = tuple((2 * d - 1) * m + x for m, x in zip(mu, e))
                if min(gamma) < 0:
                    continue
                q, rem = divmod(sum(x * x for x in gamma) - 3, 2 * d - 1)
                if rem or q % 2:
                    failures.append(f"d={d} mu={mu} eps={e}: gamma2 relation has no integral n")
                    continue
                n = (q + 2) // 2
                nonpositive += n < 1
                checked += 1
                pa = adjunction_genus(lambda_class(d, n, gamma))
                if 2 * pa != sum(gamma) - 1:
                    failures.append(f"d={d} mu={mu} eps={e}: p_a={pa}, gamma1={sum(gamma)}")
    return _result("C1", "genus identity p_a(Lambda) = (gamma1-1)/2", failures, checked,
                   degenerate_n_below_1=nonpositive)


def degree_consistency(d_max: int, mu_max: int) -> CriterionResult:
    failures, checked = [], 0
    for d in range(1, d_max + 1):
        for mu, ch, gamma, n, g in family_candidates(d, mu_max):
            if not is_family_a_shaped(d, ch.vector(d)):
                continue
            checked += 1
            cf = closed_form_degree(d, mu, ch.vector(d))
            if cf != n:
                failures.append(f"d={d} mu={mu} eps={ch.vector(d)}: closed form {cf}, relation {n}")
    a2 = {ch.vector(2) for ch in epsilon_choices(2) if ch.family == "A"}
    b2 = {ch.vector(2) for ch in epsilon_choices(2) if ch.family == "B"}
    if a2 != b2:
        failures.append(f"d=2: family A vectors {sorted(a2)} differ from family B {sorted(b2)}")
    return _result("C2", "closed-form degree = gamma2 relation; A = B at d=2", failures, checked)


@dataclass
class FamilySweep:
    """One pass of build_family over a sweep, feeding criteria 3-5."""

    d_max: int
    mu_max: int
    built: int = 0
    errors: list[str] = field(default_factory=list)
    saturation: list[str] = field(default_factory=list)
    identities: list[str] = field(default_factory=list)
    literal_checked: int = 0
    readings: list[str] = field(default_factory=list)
    adopted: Counter = field(default_factory=Counter)
    certificates: list[str] = field(default_factory=list)

    def run(self, progress: Callable[[int], None] | None = None) -> "FamilySweep":
        for d in range(1, self.d_max + 1):
            for mu, ch, gamma, n, g in family_candidates(d, self.mu_max):
                tag = f"d={d} mu={mu} eps={ch.vector(d)}"
                try:
                    spec = build_family(d, mu, ch)
                except OscoverError as exc:
                    self.errors.append(f"{tag}: {exc}")
                    continue
                self.built += 1
                self._saturation(spec, tag)
                self._identities(spec, ch, tag)
                self._readings(spec, tag)
                self._certificates(spec, tag)
                if progress and self.built % 10000 == 0:
                    progress(self.built)
        return self

    def _saturation(self, spec, tag):
        d, n, g, gam = spec.d, spec.n, spec.g, spec.gamma
        rep = check_cover(CoverSpec(d, n, 1, g, gam))
        if not rep.passed:
            self.saturation.append(f"{tag}: check_cover violations {rep.violations}")
        if gam.gamma2 != (2 * d - 1) * (2 * n - 2) + 3:
            self.saturation.append(f"{tag}: gamma2 {gam.gamma2} off the relation")
        if 2 * g + 1 != gam.gamma1:
            self.saturation.append(f"{tag}: 2g+1 = {2 * g + 1} != gamma1 = {gam.gamma1}")

    def _identities(self, spec, ch: EpsilonChoice, tag):
        d, n, m, v = spec.d, spec.n, spec.coefficients, spec.vectors
        pm = m["m_plus"] + m["m_minus"]
        if 1 + m["m_1"] + m["m_2"] + m["m_3"] + (d - 2) * pm != n:
            self.identities.append(f"{tag}: 1 + sum m(k) + (d-2)(m+ + m-) != n")
        if m["m"] + (d - 1) * pm != n:
            self.identities.append(f"{tag}: m + (d-1)(m+ + m-) != n")
        for i in range(4):
            if v["alpha"][i] + (d - 1) * (v["mu_plus"][i] + v["mu_minus"][i]) != spec.gamma[i]:
                self.identities.append(f"{tag}: r-identity fails at {i}")
        # The identities in their literal form hold for family A, k = 0, signs +.
        if ch.family == "A" and ch.k == 0 and ch.signs == (1, 1, 1, 1):
            self.literal_checked += 1
            mu = spec.mu
            mm = z_coefficient(mu)
            if v["alpha"] != mu or mm + (d - 1) * pm != n:
                self.identities.append(f"{tag}: literal m + (d-1)(m+ + m-) = n fails")
            for i in range(4):
                if (2 * d - 1) * mu[i] + (2 * d - 2) * (i != 0) != spec.gamma[i]:
                    self.identities.append(f"{tag}: literal r-identity fails at {i}")

    def _readings(self, spec, tag):
        zp = spec.readings["Z_prime_fiber"]
        fj = spec.readings["F_j_multiplicity"]
        if sum(zp["results"].values()) != 1:
            self.readings.append(f"{tag}: Z' readings {zp['results']}")
        self.adopted[("Z_prime_fiber", zp["adopted"])] += 1
        if fj["determined"]:
            if sum(fj["results"].values()) != 1:
                self.readings.append(f"{tag}: F_j readings {fj['results']}")
            self.adopted[("F_j_multiplicity", fj["adopted"])] += 1

    def _certificates(self, spec, tag):
        try:
            irr = irreducibility_certificate(lambda_certificate(spec))
            hyp = hyperelliptic_weierstrass_certificate(spec)
        except OscoverError as exc:
            self.certificates.append(f"{tag}: {exc}")
            return
        if not irr.passed:
            self.certificates.append(f"{tag}: irreducibility {irr.failed()}")
        if not check_cover(hyp.cover).passed:
            self.certificates.append(f"{tag}: emitted cover inadmissible")

    def saturation_result(self) -> CriterionResult:
        return _result("C3", "every constructed family saturates the bound with rho=1",
                       self.errors + self.saturation, self.built)

    def identity_result(self) -> CriterionResult:
        return _result("C4", "c- and r-coefficient identities of the construction",
                       self.errors + self.identities, self.built, literal_checked=self.literal_checked)

    def reading_result(self) -> CriterionResult:
        failures = self.errors + list(self.readings)
        per_reading = {}
        for (name, value), count in self.adopted.items():
            per_reading.setdefault(name, {})[str(value)] = count
        for name, values in per_reading.items():
            if len(values) != 1:
                failures.append(f"{name} adoption not stable: {values}")
        return _result("C5", "reading resolution unique and stable", failures, self.built,
                       adopted=per_reading)

    def certificate_result(self) -> CriterionResult:
        return _result("CERT", "certificates pass for every family", self.errors + self.certificates,
                       self.built)


WORKED = [
    # d, mu, expected (n, g, gamma)
    (1, (2, 1, 1, 1), (3, 2, (2, 1, 1, 1))),
    (2, (0, 1, 1, 1), (13, 7, (0, 5, 5, 5))),
    (3, (0, 1, 1, 1), (25, 13, (0, 9, 9, 9))),
]


def worked_instances() -> CriterionResult:
    failures = []
    for d, mu, (n_exp, g_exp, gamma_exp) in WORKED:
        ch = EpsilonChoice("A", 0)
        gamma = gamma_of(d, mu, ch)
        n_rel, g_rel = degree_genus_of(d, gamma)
        n_cf = closed_form_degree(d, mu, ch)
        g_adj = adjunction_genus(lambda_class(d, n_rel, gamma))
        spec = build_family(d, mu, ch)
        cover = hyperelliptic_weierstrass_certificate(spec).cover
        got = {
            "gamma": gamma.gamma, "n_relation": n_rel, "n_closed_form": n_cf,
            "g_formula": g_rel, "g_adjunction": g_adj, "cover": cover.to_json(),
        }
        if (gamma.gamma != gamma_exp or not n_rel == n_cf == n_exp or not g_rel == g_adj == g_exp
                or (cover.n, cover.g) != (n_exp, g_exp)):
            failures.append(f"d={d} mu={mu}: {got}")
    return _result("C6", "worked instances agree across three routes", failures, len(WORKED))


def oracle_equivalence(ds=(1, 2, 3, 4), n_max: int = 10) -> CriterionResult:
    failures, checked = [], 0
    for d in ds:
        rep = oracle_crosscheck(d, n_max)
        checked += rep.checked_types
        if not rep.empty:
            failures.append(f"d={d}: {len(rep.admissible_diffs)} admissible diffs, "
                            f"{len(rep.degree_diffs)} degree diffs")

    def faulty(condition):
        def checker(spec):
            rep = check_cover(spec)
            rep.conditions[condition] = not rep.conditions[condition]
            return rep
        return checker

    detected = {}
    for condition in ("parity", "genus_bound", "quadratic_bound", "ramification"):
        rep = oracle_crosscheck(2, 4, checker=faulty(condition))
        detected[condition] = not rep.empty
        if rep.empty:
            failures.append(f"injected fault in {condition} went undetected")

    def bad_degree(d, gamma):
        n, g = degree_genus_of(d, gamma)
        return (n + 1, g) if n == 2 else (n, g)

    rep = oracle_crosscheck(2, 4, degree=bad_degree)
    detected["degree"] = bool(rep.degree_diffs)
    if not rep.degree_diffs:
        failures.append("injected degree fault went undetected")
    return _result("C7", "oracle cross-check empty; injected faults detected", failures, checked,
                   faults_detected=detected)


def _random_class(rng: random.Random, span: int = 20) -> PicClass:
    def v():
        return tuple(rng.randint(-span, span) for _ in range(4))
    return PicClass(rng.randint(-span, span), v(), v(), v())


def lattice_axioms(trials: int = 10_000, seed: int = 20261018) -> CriterionResult:
    rng = random.Random(seed)
    K = canonical_class()
    failures = []
    for t in range(trials):
        a, b, c = (_random_class(rng) for _ in range(3))
        k1, k2 = rng.randint(-9, 9), rng.randint(-9, 9)
        if intersect(a, b) != intersect(b, a):
            failures.append(f"trial {t}: asymmetric")
        if intersect(k1 * a + k2 * b, c) != k1 * intersect(a, c) + k2 * intersect(b, c):
            failures.append(f"trial {t}: not bilinear")
        if intersect(a, a + K) % 2:
            failures.append(f"trial {t}: D.(D+K) odd")
        # shifting fibers by an even, degree-0 amount keeps the class
        shift = [0, 0, 0, 0]
        i, j = rng.sample(range(4), 2)
        shift[i], shift[j] = 2, -2
        a2 = a + PicClass(fibers=tuple(shift))
        if not lin_equiv(a, a2) or intersect(a, c) != intersect(a2, c):
            failures.append(f"trial {t}: lin_equiv not a congruence")
        if lin_equiv(a, b) and intersect(a, c) != intersect(b, c):
            failures.append(f"trial {t}: equivalent classes pair differently")
    return _result("C8", "lattice axioms on random triples", failures, trials)


def unbounded_genus(d: int = 2, t_max: int = 7) -> CriterionResult:
    """Genus along mu = (0,t,t,t); even t break the mu parity, so they use mu_0 = 1."""
    gs, failures = [], []
    for t in range(1, t_max + 1):
        mu = (0, t, t, t) if t % 2 else (1, t, t, t)
        g = build_family(d, mu, EpsilonChoice("A", 0)).g
        gs.append((t, list(mu), g))
        if mu[0] == 0 and 2 * g != 3 * (2 * d - 1) * t + 3 * (2 * d - 2) - 1:
            failures.append(f"t={t}: g={g} off the closed form")
    failures += [f"g not increasing at t={b[0]}: {a[2]} -> {b[2]}"
                 for a, b in zip(gs, gs[1:]) if b[2] <= a[2]]
    return _result("C9", "genus strictly increasing along mu=(0,t,t,t)", failures, len(gs), genera=gs)


def run_suite(d_max: int, mu_max: int, oracle_ds=None, trials: int = 10_000) -> list[CriterionResult]:
    sweep = FamilySweep(d_max, mu_max).run()
    ds = tuple(oracle_ds) if oracle_ds is not None else tuple(range(1, min(d_max, 4) + 1))
    return [
        genus_identity(d_max, mu_max),
        degree_consistency(d_max, mu_max),
        sweep.saturation_result(),
        sweep.identity_result(),
        sweep.reading_result(),
        worked_instances(),
        oracle_equivalence(ds),
        lattice_axioms(trials),
        unbounded_genus(),
        sweep.certificate_result(),
    ]
