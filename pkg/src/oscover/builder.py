"""Constructive families of hyperelliptic d-osculating covers.

For a parity-admissible mu and a choice of epsilon the type is
gamma = (2d-1) mu + epsilon and the degree n is fixed by
gamma2 = (2d-1)(2n-2) + 3.  The family lives in the linear system

    Lambda = |e^*(n C0 + (2d-1) F_0) - s_0 - sum_i gamma_i r_i|

and is spanned by G = Z + (d-1) D_0 together with
F_j = C0^perp + sum_{k=1..3} (Z_(k) + 2 s_k) + j D_0 + (d-2-j) D_1.

Every Z-curve is the unique tau-invariant curve of ``z_class``.  The
construction is checked numerically: each member must be linearly
equivalent to the Lambda class, and the bookkeeping identities between the
c- and r-coefficients must close.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Any, Sequence

from .errors import ConstructionInconsistency, DomainError
from .piclattice import (
    PicClass,
    adjunction_genus,
    c0_strict,
    fiber,
    lin_equiv,
    r_exc,
    s_exc,
    section,
)
from .typesystem import CoverSpec, TypeVector, check_cover, quadratic_bound

FAMILIES = ("A", "B")
ZPRIME_FIBER_READINGS = {0: "fiber over w0, literal reading", 1: "fiber over w1, matching s_1"}
FJ_MULTIPLICITY_READINGS = {1: "s_k with multiplicity 1, literal reading", 2: "s_k with multiplicity 2"}


def _add(*vs: Sequence[int]) -> tuple[int, ...]:
    return tuple(sum(x) for x in zip(*vs))


def _scale(k: int, v: Sequence[int]) -> tuple[int, ...]:
    return tuple(k * x for x in v)


def _unit(i: int, a: int = 1) -> tuple[int, int, int, int]:
    v = [0, 0, 0, 0]
    v[i] = a
    return tuple(v)  # type: ignore[return-value]


def _sq(v: Sequence[int]) -> int:
    return sum(x * x for x in v)


def is_special_at(alpha: Sequence[int], k: int) -> bool:
    """alpha_k + 1 == alpha_j (mod 2) for every j != k."""
    target = (alpha[k] + 1) % 2
    return all(alpha[j] % 2 == target for j in range(4) if j != k)


def check_mu(mu: Sequence[int]) -> tuple[int, int, int, int]:
    mu = tuple(mu)
    if len(mu) != 4:
        raise DomainError(f"mu needs 4 entries, got {len(mu)}")
    if any(isinstance(x, bool) or not isinstance(x, int) or x < 0 for x in mu):
        raise DomainError(f"mu must be in N^4, got {mu}")
    if not is_special_at(mu, 0):
        raise DomainError(f"mu = {mu} violates mu_0 + 1 = mu_1 = mu_2 = mu_3 (mod 2)")
    return mu  # type: ignore[return-value]


# ---------------------------------------------------------------- Z-classes


def z_class(alpha: Sequence[int], k: int) -> PicClass:
    """Class e^*(m C0 + F_k) - s_k - sum alpha_i r_i with 2m + 1 = sum alpha_i^2."""
    alpha = tuple(alpha)
    if len(alpha) != 4 or not 0 <= k <= 3:
        raise DomainError(f"bad arguments alpha={alpha}, k={k}")
    if any(a < 0 for a in alpha):
        raise DomainError(f"alpha must be in N^4, got {alpha}")
    if not is_special_at(alpha, k):
        raise DomainError(f"alpha = {alpha} violates the parity condition at index {k}")
    m = (_sq(alpha) - 1) // 2
    return PicClass._raw(m, _unit(k), _unit(k, -1), tuple(-a for a in alpha))


def formal_z_class(alpha: Sequence[int], k: int, fiber_index: int | None = None) -> PicClass:
    """z_class extended to signed alpha.

    A negative entry alpha_i = -a is realized as z_class(|alpha|) + 2a r_i,
    which is how Z_- is defined when mu_0 = 0.  ``fiber_index`` overrides the
    fiber label (used only to test the two readings of Z').
    """
    absolute = tuple(abs(a) for a in alpha)
    cls = z_class(absolute, k)
    for i, a in enumerate(alpha):
        if a < 0:
            cls = cls + (2 * -a) * r_exc(i)
    if fiber_index is not None and fiber_index != k:
        cls = cls - fiber(k) + fiber(fiber_index)
    return cls


def z_coefficient(alpha: Sequence[int]) -> int:
    return (_sq(alpha) - 1) // 2


# ---------------------------------------------------------------- epsilon


def epsilon_base(d: int, family: str, k: int) -> tuple[int, int, int, int]:
    if family == "A":
        return tuple(0 if i == k else 2 * d - 2 for i in range(4))  # type: ignore[return-value]
    if family == "B":
        special, other = (d - 2, d) if d % 2 == 0 else (d + 1, d - 1)
        return tuple(special if i == k else other for i in range(4))  # type: ignore[return-value]
    raise DomainError(f"unknown epsilon family {family!r}")


@dataclass(frozen=True)
class EpsilonChoice:
    """Signed placement of an epsilon family; ``k`` is the distinguished index."""

    family: str = "A"
    k: int = 0
    signs: tuple[int, int, int, int] = (1, 1, 1, 1)

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise DomainError(f"family must be A or B, got {self.family!r}")
        if self.k not in range(4):
            raise DomainError(f"k must be in 0..3, got {self.k}")
        signs = tuple(self.signs)
        if len(signs) != 4 or any(s not in (1, -1) for s in signs):
            raise DomainError(f"signs must be four entries in {{+1,-1}}, got {signs}")
        object.__setattr__(self, "signs", signs)

    def vector(self, d: int) -> tuple[int, int, int, int]:
        base = epsilon_base(d, self.family, self.k)
        return tuple(s * b for s, b in zip(self.signs, base))  # type: ignore[return-value]

    def canonical(self, d: int) -> "EpsilonChoice":
        """Same vector, with the sign forced to +1 wherever the base entry is 0."""
        base = epsilon_base(d, self.family, self.k)
        signs = tuple(s if b else 1 for s, b in zip(self.signs, base))
        return EpsilonChoice(self.family, self.k, signs)

    def to_json(self, d: int) -> dict[str, Any]:
        v = self.vector(d)
        return {
            "family": self.family,
            "k": self.k,
            "signs": list(self.signs),
            "vector": list(v),
            "vector_english": [x // 2 for x in v],
        }


def epsilon_choices(d: int) -> list[EpsilonChoice]:
    """All canonical choices, one per distinct (family, k, vector)."""
    return list(_epsilon_choices(d))


@lru_cache(maxsize=None)
def _epsilon_choices(d: int) -> tuple[EpsilonChoice, ...]:
    seen = set()
    out = []
    for family in FAMILIES:
        for k in range(4):
            for signs in product((1, -1), repeat=4):
                ch = EpsilonChoice(family, k, signs).canonical(d)
                if ch not in seen:
                    seen.add(ch)
                    out.append(ch)
    return tuple(out)


def epsilon_from_vector(d: int, eps: Sequence[int], convention: str = "french") -> EpsilonChoice:
    """Identify an explicit epsilon vector; the English convention is halved."""
    eps = tuple(eps)
    if convention == "english":
        eps = tuple(2 * x for x in eps)
    elif convention != "french":
        raise DomainError(f"unknown epsilon convention {convention!r}")
    for ch in epsilon_choices(d):
        if ch.vector(d) == eps:
            return ch
    raise DomainError(f"epsilon {eps} is not a signed permutation of an admissible family for d={d}")


def _eps_vector(d: int, eps) -> tuple[int, int, int, int]:
    if isinstance(eps, EpsilonChoice):
        return eps.vector(d)
    return tuple(eps)  # type: ignore[return-value]


# ---------------------------------------------------------------- numerics


def gamma_of(d: int, mu: Sequence[int], eps) -> TypeVector:
    if d < 1:
        raise DomainError(f"d must be positive, got {d}")
    mu = check_mu(mu)
    e = _eps_vector(d, eps)
    gamma = tuple((2 * d - 1) * m + x for m, x in zip(mu, e))
    if any(x < 0 for x in gamma):
        raise DomainError(f"type must be in N^4, got gamma = {gamma}")
    return TypeVector(gamma)


def degree_genus_of(d: int, gamma: TypeVector | Sequence[int]) -> tuple[int, int]:
    """Solve gamma2 = (2d-1)(2n-2) + 3 for n and return (n, (gamma1-1)/2)."""
    if not isinstance(gamma, TypeVector):
        gamma = TypeVector(tuple(gamma))
    q, rem = divmod(gamma.gamma2 - 3, 2 * d - 1)
    if rem or q % 2:
        raise DomainError(
            f"type not realizable by the gamma2 relation: gamma2 = {gamma.gamma2}, d = {d}"
        )
    n = (q + 2) // 2
    if n < 1:
        raise DomainError(f"gamma2 = {gamma.gamma2} gives non-positive degree n = {n}")
    if gamma.gamma1 % 2 == 0:
        raise DomainError(f"gamma1 = {gamma.gamma1} is even; genus would not be integral")
    return n, (gamma.gamma1 - 1) // 2


def is_family_a_shaped(d: int, eps: Sequence[int]) -> bool:
    """True when eps is a signed placement of (0, 2d-2, 2d-2, 2d-2)."""
    zeros = [i for i, x in enumerate(eps) if x == 0]
    if d == 1:
        return all(x == 0 for x in eps)
    return len(zeros) == 1 and all(abs(x) == 2 * d - 2 for i, x in enumerate(eps) if i != zeros[0])


def closed_form_degree(d: int, mu: Sequence[int], eps) -> int:
    """n from 2n = (2d-1) mu2 + 2 sum mu_i eps_i + 6d - 7 (family A only)."""
    mu = check_mu(mu)
    e = _eps_vector(d, eps)
    if isinstance(eps, EpsilonChoice) and eps.family == "B" and not is_family_a_shaped(d, e):
        raise DomainError("closed-form degree is only stated for family A; unsupported form")
    if not is_family_a_shaped(d, e):
        raise DomainError(f"epsilon {e} is not of family A shape; unsupported form")
    two_n = (2 * d - 1) * _sq(mu) + 2 * sum(m * x for m, x in zip(mu, e)) + 6 * d - 7
    if two_n % 2:
        raise DomainError(f"closed form gives odd 2n = {two_n}")
    return two_n // 2


def english_degree_formula(d: int, mu: Sequence[int], eps) -> int | None:
    """The degree formula applied verbatim to any epsilon (None if 2n is odd).

    Agrees with the gamma2 relation for family A; for family B it is off by
    4d - 8 in 2n, so the two only meet at d = 2.
    """
    e = _eps_vector(d, eps)
    two_n = (2 * d - 1) * _sq(mu) + 2 * sum(m * x for m, x in zip(mu, e)) + 6 * d - 7
    return two_n // 2 if two_n % 2 == 0 else None


def lambda_class(d: int, n: int, gamma: TypeVector | Sequence[int]) -> PicClass:
    """e^*(n C0 + (2d-1) F_0) - s_0 - sum gamma_i r_i."""
    gamma = tuple(gamma)
    return n * section() + (2 * d - 1) * fiber(0) - s_exc(0) - PicClass(r=gamma)


def membership_report(cls: PicClass, lam: PicClass) -> dict[str, Any]:
    """Which basis coefficients keep ``cls`` out of the class ``lam``."""
    diff = cls - lam
    obstructions = []
    if diff.c:
        obstructions.append(f"C0:{diff.c:+d}")
    for name, vec in (("s", diff.s), ("r", diff.r)):
        obstructions += [f"{name}{i}:{a:+d}" for i, a in enumerate(vec) if a]
    if diff.fiber_degree:
        obstructions.append(f"fiber_degree:{diff.fiber_degree:+d}")
    if cls.torsion != lam.torsion:
        obstructions.append(f"torsion:{int(cls.torsion)}!={int(lam.torsion)}")
    return {
        "member": not obstructions,
        "difference": diff.to_json(),
        "c_diff": diff.c,
        "s_diff": list(diff.s),
        "r_diff": list(diff.r),
        "fiber_degree_diff": diff.fiber_degree,
        "torsion": [int(cls.torsion), int(lam.torsion)],
        "obstructions": obstructions,
    }


# ---------------------------------------------------------------- the family


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""

    def to_json(self) -> dict[str, Any]:
        return {"name": self.name, "ok": self.ok, "detail": self.detail}


@dataclass
class FamilySpec:
    d: int
    mu: tuple[int, int, int, int]
    eps: EpsilonChoice
    eps_vector: tuple[int, int, int, int]
    gamma: TypeVector
    n: int
    g: int
    recipe: str
    vectors: dict[str, tuple[int, ...]]
    coefficients: dict[str, int]
    constituents: dict[str, PicClass]
    formal: list[str]
    lambda_class: PicClass
    readings: dict[str, Any]
    alternatives: dict[str, PicClass]
    checks: list[Check] = field(default_factory=list)

    @property
    def family_dimension(self) -> int:
        return self.d - 1

    @property
    def members(self) -> list[str]:
        """Spanning divisors of the (d-1)-dimensional subspace of Lambda."""
        return ["G"] + [f"F_{j}" for j in range(self.d - 1)]

    @property
    def tau_invariant(self) -> dict[str, str]:
        tags = {}
        for name in self.constituents:
            if name == "C0":
                tags[name] = "invariant curve"
            elif name.startswith("Z"):
                tags[name] = "unique invariant curve in its class" + (
                    " plus exceptional r-curves" if name in self.formal else ""
                )
            else:
                tags[name] = "sum of invariant constituents and exceptional curves"
        return tags

    def cover_spec(self) -> CoverSpec:
        return CoverSpec(self.d, self.n, 1, self.g, self.gamma)

    def to_json(self) -> dict[str, Any]:
        return {
            "d": self.d,
            "mu": list(self.mu),
            "epsilon": self.eps.to_json(self.d),
            "gamma": list(self.gamma.gamma),
            "gamma1": self.gamma.gamma1,
            "gamma2": self.gamma.gamma2,
            "n": self.n,
            "g": self.g,
            "family_dimension": self.family_dimension,
            "recipe": self.recipe,
            "vectors": {k: list(v) for k, v in self.vectors.items()},
            "coefficients": dict(self.coefficients),
            "constituents": {k: v.to_json() for k, v in self.constituents.items()},
            "formal_constituents": list(self.formal),
            "tau_invariant": self.tau_invariant,
            "lambda_class": self.lambda_class.to_json(),
            "members": self.members,
            "readings": self.readings,
            "verification": [c.to_json() for c in self.checks],
        }


def _recipe_vectors(d: int, mu, ch: EpsilonChoice, eps, gamma) -> tuple[str, dict[str, tuple[int, ...]]]:
    """Auxiliary vectors of the construction.

    For family A with k = 0 and all signs + these are exactly
    mu(k) = mu + (0,1,1,1) - delta_k, mu^+- = mu + (+-1,1,1,1),
    mu' = mu + (0,2,1,1) and alpha = mu.  Other signs and k are the same
    recipe with the signed, relabelled shift e; genuine family-B vectors use
    the pair (mu, mu + sigma) for D_0.
    """
    k, sig = ch.k, ch.signs
    e = tuple(0 if i == k else sig[i] for i in range(4))
    dk = _unit(k)
    if is_family_a_shaped(d, eps):
        recipe = "A"
        plus = _add(mu, e, dk)
        minus = _add(mu, e, _scale(-1, dk))
        ys = {j: _add(e, _unit(j ^ k, -e[j ^ k])) for j in (1, 2, 3)}
    else:
        recipe = "B"
        plus = _add(mu, sig)
        minus = tuple(mu)
        if d % 2 == 0:
            ys = {j: _add(e, _unit(j ^ k, -e[j ^ k])) for j in (1, 2, 3)}
        else:
            ys = {j: _add(_unit(k, sig[k]), _unit(j ^ k, sig[j ^ k])) for j in (1, 2, 3)}
    pair = _add(plus, minus)
    alpha = _add(gamma, _scale(-(d - 1), pair))
    vecs: dict[str, tuple[int, ...]] = {
        "alpha": alpha,
        "mu_plus": plus,
        "mu_minus": minus,
    }
    for j in (1, 2, 3):
        vecs[f"mu_{j}"] = _add(mu, ys[j])
    vecs["mu_prime"] = _add(pair, _scale(-1, vecs["mu_1"]))
    return recipe, vecs


_S123 = s_exc(1) + s_exc(2) + s_exc(3)


def _fj(base, mult, D0, D1, d, j):
    # base = C0^perp + Z_(1) + Z_(2) + Z_(3)
    return base + mult * _S123 + j * D0 + (d - 2 - j) * D1


def build_family(d: int, mu: Sequence[int], eps: EpsilonChoice | None = None) -> FamilySpec:
    """Construct and verify every constituent divisor of the family.

    Raises ConstructionInconsistency naming the first failing check.
    """
    if d < 1:
        raise DomainError(f"d must be positive, got {d}")
    mu = check_mu(mu)
    ch = (eps or EpsilonChoice()).canonical(d)
    e = ch.vector(d)
    gamma = gamma_of(d, mu, e)
    n, g = degree_genus_of(d, gamma)
    lam = lambda_class(d, n, gamma)

    recipe, vecs = _recipe_vectors(d, mu, ch, e, gamma.gamma)
    formal = [name for name, key in (("Z", "alpha"), ("Z_plus", "mu_plus"), ("Z_minus", "mu_minus"),
                                     ("Z_1", "mu_1"), ("Z_2", "mu_2"), ("Z_3", "mu_3"),
                                     ("Z_prime", "mu_prime"))
              if min(vecs[key]) < 0]

    try:
        Z = formal_z_class(vecs["alpha"], 0)
        Zp = formal_z_class(vecs["mu_plus"], 0)
        Zm = formal_z_class(vecs["mu_minus"], 0)
        Zk = {j: formal_z_class(vecs[f"mu_{j}"], j) for j in (1, 2, 3)}
        Zprime = {f: formal_z_class(vecs["mu_prime"], 1, fiber_index=f) for f in ZPRIME_FIBER_READINGS}
    except DomainError as exc:
        raise ConstructionInconsistency("z-class parity", str(exc), {}) from None

    C0 = c0_strict().cls
    D0 = Zp + Zm + 2 * s_exc(0)
    base = C0 + Zk[1] + Zk[2] + Zk[3]
    D1 = {f: Zprime[f] + Zk[1] + 2 * s_exc(1) for f in ZPRIME_FIBER_READINGS}

    # Reading of the fiber label of Z'.
    zp_results = {f: lin_equiv(D0, D1[f]) for f in ZPRIME_FIBER_READINGS}
    zp_ok = [f for f, ok in zp_results.items() if ok]
    if len(zp_ok) != 1:
        raise ConstructionInconsistency(
            "Z' fiber reading", f"readings satisfying D0 ~ D1: {zp_ok}",
            {"D_0": D0, **{f"D_1[fiber=w{f}]": D1[f] for f in D1}},
        )
    zp_fiber = zp_ok[0]

    # Reading of the s_k multiplicity in F_j.
    fj_results = {}
    for mult in FJ_MULTIPLICITY_READINGS:
        fj_results[mult] = all(
            lin_equiv(_fj(base, mult, D0, D1[zp_fiber], d, j), lam) for j in range(d - 1)
        )
    fj_ok = [m for m, ok in fj_results.items() if ok]
    fj_determined = d >= 2
    if fj_determined and len(fj_ok) != 1:
        raise ConstructionInconsistency(
            "F_j multiplicity reading", f"readings satisfying F_j ~ Lambda: {fj_ok}",
            {"Lambda": lam},
        )
    fj_mult = fj_ok[0] if fj_determined else 2

    G = Z + (d - 1) * D0
    constituents: dict[str, PicClass] = {
        "C0": C0,
        "Z_1": Zk[1], "Z_2": Zk[2], "Z_3": Zk[3],
        "Z_plus": Zp, "Z_minus": Zm, "Z_prime": Zprime[zp_fiber], "Z": Z,
        "D_0": D0, "D_1": D1[zp_fiber],
    }
    for j in range(d - 1):
        constituents[f"F_{j}"] = _fj(base, fj_mult, D0, D1[zp_fiber], d, j)
    constituents["G"] = G

    other_f = 1 - zp_fiber
    other_m = 3 - fj_mult
    alternatives = {
        f"Z_prime[fiber=w{other_f}]": Zprime[other_f],
        f"D_1[fiber=w{other_f}]": D1[other_f],
    }
    for j in range(d - 1):
        alternatives[f"F_{j}[mult={other_m}]"] = _fj(base, other_m, D0, D1[zp_fiber], d, j)

    coeffs = {
        "m": z_coefficient(vecs["alpha"]),
        "m_plus": z_coefficient(vecs["mu_plus"]),
        "m_minus": z_coefficient(vecs["mu_minus"]),
        "m_1": z_coefficient(vecs["mu_1"]),
        "m_2": z_coefficient(vecs["mu_2"]),
        "m_3": z_coefficient(vecs["mu_3"]),
        "m_prime": z_coefficient(vecs["mu_prime"]),
    }

    readings = {
        "Z_prime_fiber": {
            "adopted": zp_fiber,
            "description": ZPRIME_FIBER_READINGS[zp_fiber],
            "results": {f"w{f}": ok for f, ok in zp_results.items()},
            "rejected": membership_report(D1[other_f], D0),
        },
        "F_j_multiplicity": {
            "adopted": fj_mult,
            "description": FJ_MULTIPLICITY_READINGS[fj_mult],
            "determined": fj_determined,
            "results": {str(m): ok for m, ok in fj_results.items()},
            "rejected": membership_report(alternatives["F_0[mult=%d]" % other_m], lam)
            if fj_determined else None,
        },
    }

    spec = FamilySpec(
        d=d, mu=mu, eps=ch, eps_vector=e, gamma=gamma, n=n, g=g, recipe=recipe,
        vectors=vecs, coefficients=coeffs, constituents=constituents, formal=formal,
        lambda_class=lam, readings=readings, alternatives=alternatives,
    )
    spec.checks = _verify(spec)
    for chk in spec.checks:
        if not chk.ok:
            involved = {"Lambda": lam}
            for name in chk.name.replace("~", " ").split():
                if name in constituents:
                    involved[name] = constituents[name]
            raise ConstructionInconsistency(chk.name, chk.detail, involved)
    return spec


def _verify(spec: FamilySpec) -> list[Check]:
    d, n, g = spec.d, spec.n, spec.g
    cs, lam, m, v = spec.constituents, spec.lambda_class, spec.coefficients, spec.vectors
    gamma = spec.gamma.gamma
    out = []

    def equiv(a, b):
        ok = lin_equiv(cs[a] if a in cs else lam, cs[b] if b in cs else lam)
        out.append(Check(f"{a} ~ {b}", ok))

    equiv("D_0", "D_1")
    equiv("G", "Lambda")
    for j in range(d - 1):
        equiv(f"F_{j}", "Lambda")

    genus = adjunction_genus(lam)
    out.append(Check("genus(Lambda) == g", genus == g, f"adjunction {genus}, formula {g}"))

    rep = check_cover(spec.cover_spec())
    out.append(Check("check_cover(rho=1)", rep.passed, ",".join(rep.violations)))
    bound = quadratic_bound(d, n, 1)
    relation = (2 * d - 1) * (2 * n - 2) + 3
    out.append(Check("gamma2 == (2d-1)(2n-2)+3 == bound(rho=1)",
                     spec.gamma.gamma2 == relation == bound,
                     f"gamma2 {spec.gamma.gamma2}, relation {relation}, bound {bound}"))
    out.append(Check("2g+1 == gamma1", 2 * g + 1 == spec.gamma.gamma1))

    pm = m["m_plus"] + m["m_minus"]
    lhs_f = 1 + m["m_1"] + m["m_2"] + m["m_3"] + (d - 2) * pm
    out.append(Check("1 + sum m(k) + (d-2)(m+ + m-) == n", lhs_f == n, f"{lhs_f} vs {n}"))
    lhs_g = m["m"] + (d - 1) * pm
    out.append(Check("m + (d-1)(m+ + m-) == n", lhs_g == n, f"{lhs_g} vs {n}"))
    pair = _add(v["mu_plus"], v["mu_minus"])
    r_g = _add(v["alpha"], _scale(d - 1, pair))
    out.append(Check("alpha + (d-1)(mu+ + mu-) == gamma", r_g == gamma, f"{r_g} vs {gamma}"))
    r_f = _add(v["mu_1"], v["mu_2"], v["mu_3"], _scale(d - 2, pair))
    out.append(Check("sum mu(k) + (d-2)(mu+ + mu-) == gamma", r_f == gamma, f"{r_f} vs {gamma}"))
    out.append(Check("m' + m(1) == m+ + m-", m["m_prime"] + m["m_1"] == pm))

    if spec.recipe == "A":
        cf = closed_form_degree(d, spec.mu, spec.eps_vector)
        out.append(Check("closed-form degree == n", cf == n, f"{cf} vs {n}"))
    return out
