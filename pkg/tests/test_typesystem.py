import pytest

from oscover.errors import DomainError
from oscover.typesystem import (
    CONDITIONS,
    CoverSpec,
    TypeVector,
    check_cover,
    osculating_gap_order,
    parse_vector,
    quadratic_bound,
)


def test_type_vector():
    t = TypeVector((0, 5, 5, 5))
    assert (t.gamma1, t.gamma2) == (15, 75)
    assert list(t) == [0, 5, 5, 5] and t[1] == 5
    with pytest.raises(DomainError):
        TypeVector((0, -1, 0, 0))
    with pytest.raises(DomainError):
        TypeVector((0, 1, 0))


@pytest.mark.parametrize("d, g, j", [(1, 5, 1), (3, 4, 5), (4, 4, 7)])
def test_gap_order(d, g, j):
    assert osculating_gap_order(d, g) == j


def test_gap_order_out_of_range():
    with pytest.raises(DomainError, match="order exceeds gap range"):
        osculating_gap_order(4, 3)


def test_check_cover_examples():
    ok = check_cover(CoverSpec(2, 13, 1, 7, (0, 5, 5, 5)))
    assert ok.passed and ok.violations == []
    assert quadratic_bound(2, 13, 1) == 75 == ok.spec.type.gamma2

    genus = check_cover(CoverSpec(2, 13, 1, 8, (0, 5, 5, 5)))
    assert genus.violations == ["genus_bound"]

    parity = check_cover(CoverSpec(2, 13, 1, 7, (1, 5, 5, 5)))
    assert "parity" in parity.violations


def test_conditions_are_independent():
    # everything broken at once: all four are reported
    rep = check_cover(CoverSpec(1, 2, 3, 9, (0, 1, 1, 5)))
    assert set(rep.violations) == set(CONDITIONS)
    doc = rep.to_json()
    assert doc["passed"] is False
    assert set(doc["conditions"]) == set(CONDITIONS)


def test_rho_is_reported_not_rejected():
    # rho even: the CoverSpec is constructible, check_cover flags it
    rep = check_cover(CoverSpec(3, 2, 2, 0, (1, 0, 0, 0)))
    assert rep.violations == ["ramification"]


@pytest.mark.parametrize("kw", [dict(d=0), dict(n=0), dict(rho=0), dict(g=-1)])
def test_cover_spec_domain(kw):
    args = dict(d=2, n=13, rho=1, g=7, type=(0, 5, 5, 5))
    args.update(kw)
    with pytest.raises(DomainError):
        CoverSpec(**args)


def test_parse_vector():
    assert parse_vector("0, 5,5,5") == (0, 5, 5, 5)
    assert parse_vector([1, 2, 3, 4]) == (1, 2, 3, 4)
    for bad in ("1,2,3", "a,b,c,d", "1,2,3,4,5"):
        with pytest.raises(DomainError):
            parse_vector(bad)
