import pytest

from oscover.builder import (
    EpsilonChoice,
    build_family,
    closed_form_degree,
    degree_genus_of,
    english_degree_formula,
    epsilon_base,
    epsilon_choices,
    epsilon_from_vector,
    formal_z_class,
    gamma_of,
    lambda_class,
    membership_report,
    z_class,
)
from oscover.errors import ConstructionInconsistency, DomainError
from oscover.piclattice import PicClass, c0_strict, adjunction_genus, intersect, lin_equiv, s_exc


def _z(alpha, k):
    # hand oracle for the Z-class, written out coefficient by coefficient
    m = (sum(a * a for a in alpha) - 1) // 2
    fib = [0, 0, 0, 0]
    fib[k] = 1
    s = [0, 0, 0, 0]
    s[k] = -1
    return PicClass(m, tuple(fib), tuple(s), tuple(-a for a in alpha))


def test_z_class_examples():
    assert z_class((0, 1, 1, 1), 0) == PicClass(1, (1, 0, 0, 0), (-1, 0, 0, 0), (0, -1, -1, -1))
    assert z_class((2, 1, 1, 1), 0) == PicClass(3, (1, 0, 0, 0), (-1, 0, 0, 0), (-2, -1, -1, -1))
    with pytest.raises(DomainError):
        z_class((1, 1, 1, 1), 0)
    with pytest.raises(DomainError):
        z_class((-1, 2, 2, 2), 0)


def test_z_class_numerics():
    for alpha in [(0, 1, 1, 1), (2, 3, 1, 5), (1, 2, 0, 4)]:
        Z = z_class(alpha, 0)
        assert Z == _z(alpha, 0)
        assert intersect(Z, Z) == -2
        assert adjunction_genus(Z) == (sum(alpha) - 1) // 2
        assert [intersect(Z, s_exc(i)) for i in range(4)] == [1, 0, 0, 0]
        assert intersect(Z, c0_strict().cls) == 0


def test_formal_z_class_adds_exceptional_curves():
    plus = z_class((1, 2, 2, 2), 0)
    minus = formal_z_class((-1, 2, 2, 2), 0)
    assert minus == plus + PicClass(r=(2, 0, 0, 0))
    assert formal_z_class((0, 3, 2, 2), 1, fiber_index=0).fibers == (1, 0, 0, 0)


def test_epsilon_bases():
    assert epsilon_base(2, "A", 0) == (0, 2, 2, 2)
    assert epsilon_base(2, "B", 0) == (0, 2, 2, 2)
    assert epsilon_base(3, "B", 0) == (4, 2, 2, 2)
    assert epsilon_base(4, "B", 2) == (4, 4, 2, 4)
    assert epsilon_base(1, "A", 3) == (0, 0, 0, 0)
    # canonical choices are distinct vectors per (family, k)
    for d in range(1, 5):
        keys = [(c.family, c.k, c.vector(d)) for c in epsilon_choices(d)]
        assert len(keys) == len(set(keys))


def test_gamma_of_examples():
    assert gamma_of(2, (0, 1, 1, 1), EpsilonChoice("A", 0)).gamma == (0, 5, 5, 5)
    assert gamma_of(1, (2, 1, 1, 1), EpsilonChoice("A", 0)).gamma == (2, 1, 1, 1)
    assert gamma_of(2, (0, 1, 1, 1), EpsilonChoice("B", 0)).gamma == (0, 5, 5, 5)
    with pytest.raises(DomainError, match="N\\^4"):
        gamma_of(2, (1, 0, 0, 0), EpsilonChoice("A", 0, (1, -1, 1, 1)))


def test_degree_genus_examples():
    assert degree_genus_of(2, (0, 5, 5, 5)) == (13, 7)
    assert degree_genus_of(1, (2, 1, 1, 1)) == (3, 2)
    with pytest.raises(DomainError):
        degree_genus_of(2, (1, 5, 5, 5))


def test_closed_form_examples():
    A = EpsilonChoice("A", 0)
    assert closed_form_degree(2, (0, 1, 1, 1), A) == 13
    assert closed_form_degree(3, (0, 1, 1, 1), A) == 25
    assert closed_form_degree(1, (2, 1, 1, 1), A) == 3
    assert degree_genus_of(3, (0, 9, 9, 9)) == (25, 13)
    with pytest.raises(DomainError, match="unsupported form"):
        closed_form_degree(3, (0, 1, 1, 1), EpsilonChoice("B", 0))


def test_english_formula_on_family_b_is_off():
    # verbatim formula for a family-B epsilon: 2n differs by 4d-8
    B = EpsilonChoice("B", 0)
    for d in (2, 3, 4, 5, 6):
        for mu in [(0, 1, 1, 1), (1, 0, 0, 0), (1, 2, 2, 2)]:
            n, _ = degree_genus_of(d, gamma_of(d, mu, B))
            verbatim = english_degree_formula(d, mu, B)
            assert 2 * (verbatim - n) == 4 * d - 8


def test_epsilon_conventions():
    fr = epsilon_from_vector(2, (0, 2, 2, 2))
    en = epsilon_from_vector(2, (0, 1, 1, 1), convention="english")
    assert fr == en
    with pytest.raises(DomainError):
        epsilon_from_vector(2, (1, 1, 1, 1))
    with pytest.raises(DomainError):
        epsilon_from_vector(2, (0, 2, 2, 2), convention="german")


def test_build_family_worked_d2():
    spec = build_family(2, (0, 1, 1, 1), EpsilonChoice("A", 0))
    assert (spec.n, spec.g, spec.gamma.gamma) == (13, 7, (0, 5, 5, 5))
    assert spec.family_dimension == 1
    m = spec.coefficients
    assert (m["m_1"], m["m_2"], m["m_3"], m["m_plus"], m["m_minus"]) == (4, 4, 4, 6, 6)
    cs = spec.constituents
    # mu_0 = 0, so Z_minus is Z_plus plus twice the exceptional curve over r_0
    assert cs["Z_minus"] == cs["Z_plus"] + PicClass(r=(2, 0, 0, 0))
    assert cs["Z_plus"] == _z((1, 2, 2, 2), 0)
    assert cs["Z_1"] == _z((0, 1, 2, 2), 1)
    D0 = cs["D_0"]
    assert (D0.c, D0.fiber_degree, D0.s, D0.r) == (12, 2, (0, 0, 0, 0), (0, -4, -4, -4))
    lam = lambda_class(2, 13, (0, 5, 5, 5))
    for name in ("G", "F_0"):
        assert lin_equiv(cs[name], lam)
    assert lin_equiv(cs["D_0"], cs["D_1"])
    assert all(c.ok for c in spec.checks)


def test_build_family_d1_degenerate():
    spec = build_family(1, (2, 1, 1, 1))
    assert (spec.n, spec.g, spec.family_dimension) == (3, 2, 0)
    assert not [k for k in spec.constituents if k.startswith("F_")]
    assert spec.constituents["G"] == spec.constituents["Z"]
    assert spec.readings["F_j_multiplicity"]["determined"] is False


def test_build_family_small_type():
    spec = build_family(2, (1, 0, 0, 0))
    assert (spec.gamma.gamma, spec.n, spec.g) == ((3, 2, 2, 2), 4, 4)


def test_readings_adopted_and_rejected():
    spec = build_family(2, (0, 1, 1, 1))
    zp, fj = spec.readings["Z_prime_fiber"], spec.readings["F_j_multiplicity"]
    assert zp["adopted"] == 1 and zp["results"] == {"w0": False, "w1": True}
    assert fj["adopted"] == 2 and fj["results"] == {"1": False, "2": True}
    # the literal reading misses Lambda by exactly -s1-s2-s3
    rej = fj["rejected"]
    assert rej["s_diff"] == [0, -1, -1, -1]
    assert (rej["c_diff"], rej["r_diff"], rej["fiber_degree_diff"]) == (0, [0, 0, 0, 0], 0)


def test_membership_report():
    spec = build_family(2, (0, 1, 1, 1))
    lam = spec.lambda_class
    rep = membership_report(spec.constituents["G"], lam)
    assert rep["member"] and rep["difference"] == PicClass().to_json()
    bad = membership_report(spec.alternatives["F_0[mult=1]"], lam)
    assert not bad["member"] and bad["s_diff"] == [0, -1, -1, -1]
    assert membership_report(lam, lam)["obstructions"] == []


def test_build_family_all_choices_small_sweep():
    count = 0
    for d in (1, 2, 3):
        for ch in epsilon_choices(d):
            for mu in [(0, 1, 1, 1), (1, 0, 2, 0), (2, 3, 1, 1)]:
                try:
                    gamma_of(d, mu, ch)
                    degree_genus_of(d, gamma_of(d, mu, ch))
                except DomainError:
                    continue
                spec = build_family(d, mu, ch)
                assert 2 * spec.g + 1 == spec.gamma.gamma1
                count += 1
    assert count > 50


def test_build_family_domain_errors():
    with pytest.raises(DomainError):
        build_family(0, (0, 1, 1, 1))
    with pytest.raises(DomainError):
        build_family(2, (1, 1, 1, 1))


def test_inconsistency_carries_classes():
    exc = ConstructionInconsistency("G ~ Lambda", "demo", {"G": PicClass(c=1)})
    assert exc.check == "G ~ Lambda" and "demo" in str(exc)
    assert exc.classes["G"] == PicClass(c=1)
