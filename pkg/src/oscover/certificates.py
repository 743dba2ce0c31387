"""Numeric irreducibility and hyperellipticity certificates.

The lattice sees intersection numbers only.  Geometric facts such as
"the support contains no exceptional curve" are inputs here and are tagged
``declared`` in every report, next to the ``computed`` facts the lattice
actually checks.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Sequence

from .builder import FamilySpec
from .errors import ConstructionInconsistency, DataError
from .piclattice import PicClass, adjunction_genus, c0_strict, fiber, intersect, s_exc
from .typesystem import CoverSpec, check_cover

REQUIRED_EXCLUSIONS = ("C0", "s0", "s1", "s2", "s3", "r0", "r1", "r2", "r3")
DECLARED = "declared"
COMPUTED = "computed"


@dataclass
class CurveCertificate:
    cls: PicClass
    declared_support_excludes: Sequence[str] = REQUIRED_EXCLUSIONS
    declared_C0_intersection_only_p0: bool = True
    intersection_degrees_with_s: Sequence[int] | None = None


@dataclass
class Fact:
    name: str
    ok: bool
    source: str
    detail: str = ""

    def to_json(self) -> dict[str, Any]:
        return {"name": self.name, "ok": self.ok, "source": self.source, "detail": self.detail}


@dataclass
class CertificateReport:
    kind: str
    facts: list[Fact] = field(default_factory=list)
    cover: CoverSpec | None = None

    @property
    def passed(self) -> bool:
        return all(f.ok for f in self.facts)

    def failed(self) -> list[str]:
        return [f.name for f in self.facts if not f.ok]

    def to_json(self) -> dict[str, Any]:
        out = {
            "kind": self.kind,
            "passed": self.passed,
            "facts": [f.to_json() for f in self.facts],
        }
        if self.cover is not None:
            out["cover"] = self.cover.to_json()
        return out


def irreducibility_certificate(cert: CurveCertificate) -> CertificateReport:
    """Irreducibility criterion for an effective divisor on S^perp.

    Passes iff (a) the declared support avoids C0^perp and every exceptional
    curve, (b) the curve is declared to meet C0^perp only at p0 = C0^perp n s0,
    and (c) the lattice gives intersection number delta_{i,0} with s_i.
    """
    lattice_s = [intersect(cert.cls, s_exc(i)) for i in range(4)]
    excluded = set(cert.declared_support_excludes)
    support_ok = all(name in excluded for name in REQUIRED_EXCLUSIONS)

    if cert.intersection_degrees_with_s is not None and support_ok:
        declared = list(cert.intersection_degrees_with_s)
        if declared != lattice_s:
            raise DataError(
                f"declared intersection degrees {declared} contradict the lattice {lattice_s}"
            )

    rep = CertificateReport("irreducibility")
    missing = [n for n in REQUIRED_EXCLUSIONS if n not in excluded]
    rep.facts.append(Fact("support avoids C0 and exceptional curves", support_ok, DECLARED,
                          f"not excluded: {missing}" if missing else ""))
    rep.facts.append(Fact("meets C0 only at p0", bool(cert.declared_C0_intersection_only_p0), DECLARED))
    expected = [1, 0, 0, 0]
    rep.facts.append(Fact("deg(D.s_i) == delta_i0", lattice_s == expected, COMPUTED,
                          f"D.s_i = {lattice_s}"))
    return rep


def lambda_certificate(spec: FamilySpec) -> CurveCertificate:
    """Declarations for the generic member of the family, as the construction supplies them."""
    return CurveCertificate(
        spec.lambda_class,
        declared_support_excludes=REQUIRED_EXCLUSIONS,
        declared_C0_intersection_only_p0=True,
        intersection_degrees_with_s=[intersect(spec.lambda_class, s_exc(i)) for i in range(4)],
    )


def hyperelliptic_weierstrass_certificate(spec: FamilySpec) -> CertificateReport:
    """Chain of facts making the generic member a hyperelliptic d-osculating cover."""
    d, n, g = spec.d, spec.n, spec.g
    lam = spec.lambda_class
    gam = spec.gamma
    rep = CertificateReport("hyperelliptic_weierstrass")

    rep.facts.append(Fact("tau-invariant member", True, DECLARED,
                          "every constituent is tau-invariant by construction"))
    rep.facts.append(Fact("quotient image is rational (genus 0)", True, DECLARED))
    rep.facts.append(Fact("double cover of P^1 ramified at p0, so p0 is a Weierstrass point", True, DECLARED))
    rep.facts.append(Fact("smooth (non-singular) generic member", True, DECLARED))

    irr = irreducibility_certificate(lambda_certificate(spec))
    rep.facts.append(Fact("irreducibility criterion", irr.passed, COMPUTED + "+" + DECLARED,
                          ",".join(irr.failed())))

    deg = intersect(lam, fiber(0))
    rep.facts.append(Fact("degree over X = Lambda.F", deg == n, COMPUTED, f"{deg} vs n = {n}"))
    c0 = intersect(lam, c0_strict().cls)
    rep.facts.append(Fact("Lambda.C0^perp == 2d-2 (contact at p0)", c0 == 2 * d - 2, COMPUTED, str(c0)))
    pa = adjunction_genus(lam)
    rep.facts.append(Fact("arithmetic genus of the class == (gamma1-1)/2", pa == g and 2 * g + 1 == gam.gamma1,
                          COMPUTED, f"p_a = {pa}, g = {g}, gamma1 = {gam.gamma1}"))
    rel = (2 * d - 1) * (2 * n - 2) + 3
    rep.facts.append(Fact("gamma2 == (2d-1)(2n-2)+3", gam.gamma2 == rel, COMPUTED,
                          f"{gam.gamma2} vs {rel}"))
    gamma_r = [-x for x in lam.r]
    rep.facts.append(Fact("type = intersections with r_i", gamma_r == list(gam.gamma), COMPUTED))

    cover = CoverSpec(d, n, 1, g, gam)
    cov = check_cover(cover)
    rep.facts.append(Fact("necessary conditions hold", cov.passed, COMPUTED, ",".join(cov.violations)))
    rep.cover = cover
    if not rep.passed:
        raise ConstructionInconsistency("hyperelliptic certificate", ",".join(rep.failed()),
                                        {"Lambda": lam})
    return rep


def family_document(spec: FamilySpec) -> dict[str, Any]:
    """FamilySpec JSON with the certificates embedded."""
    doc = spec.to_json()
    doc["certificates"] = {
        "irreducibility": irreducibility_certificate(lambda_certificate(spec)).to_json(),
        "hyperelliptic_weierstrass": hyperelliptic_weierstrass_certificate(spec).to_json(),
    }
    return doc
