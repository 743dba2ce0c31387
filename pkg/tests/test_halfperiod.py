from itertools import product

import pytest

from oscover.halfperiod import ALL, ORIGIN, HalfPeriod, add, torsion_of_fibers, total, translate_index


def test_examples():
    assert add(HalfPeriod.W0, HalfPeriod.W2) == HalfPeriod.W2
    assert add(HalfPeriod.W1, HalfPeriod.W1) == HalfPeriod.W0
    assert add(HalfPeriod.W1, HalfPeriod.W2) == HalfPeriod.W3


def test_group_axioms_exhaustive():
    for a, b, c in product(ALL, repeat=3):
        assert add(a, b) == add(b, a)
        assert add(add(a, b), c) == add(a, add(b, c))
    for a in ALL:
        assert add(a, ORIGIN) == a
        assert add(a, a) == ORIGIN
    # the three nonzero half-periods sum to zero
    assert total([1, 2, 3]) == ORIGIN


@pytest.mark.parametrize("m, expected", [
    ((3, 0, 0, 0), HalfPeriod.W0),
    ((0, 2, 0, 0), HalfPeriod.W0),
    ((1, 1, 0, 0), HalfPeriod.W1),
    ((0, -1, 1, 0), HalfPeriod.W3),
])
def test_torsion_of_fibers(m, expected):
    assert torsion_of_fibers(m) == expected


def test_torsion_is_additive():
    # oracle: sum the labels one point at a time
    for m, n in product(product(range(-2, 3), repeat=4), repeat=2):
        if sum(m) % 3 or sum(n) % 5:
            continue
        mn = tuple(a + b for a, b in zip(m, n))
        assert torsion_of_fibers(mn) == add(torsion_of_fibers(m), torsion_of_fibers(n))


def test_torsion_of_fibers_rejects_bad_length():
    with pytest.raises(ValueError):
        torsion_of_fibers((1, 0, 0))


def test_translate_is_a_permutation():
    for k in ALL:
        assert sorted(translate_index(i, k) for i in range(4)) == [0, 1, 2, 3]
    assert str(HalfPeriod.W2) == "w2"
