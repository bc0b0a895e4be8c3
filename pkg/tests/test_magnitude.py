"""The value monoid: exact multiplication, total order, scaled comparison."""

from fractions import Fraction

import pytest

from tensornorm import Magnitude, SplitMix64, scaled_compare


def test_multiplication_examples():
    assert Magnitude.pos(-1) * Magnitude.pos(-2) == Magnitude.pos(-3)
    assert Magnitude.zero() * Magnitude.pos(Fraction(5, 2)) == Magnitude.zero()
    assert Magnitude.pos(Fraction(1, 3)) * Magnitude.pos(Fraction(-1, 3)) == Magnitude.pos(0)


def test_comparison_examples():
    assert Magnitude.pos(Fraction(1, 2)) > Magnitude.pos(Fraction(1, 3))
    assert Magnitude.zero() < Magnitude.pos(-100)
    assert Magnitude.pos(Fraction(2, 4)) == Magnitude.pos(Fraction(1, 2))


def test_power_examples():
    assert Magnitude.pos(-1) ** 3 == Magnitude.pos(-3)
    assert Magnitude.pos(Fraction(7, 2)) ** 0 == Magnitude.pos(0)
    assert Magnitude.zero() ** 2 == Magnitude.zero()
    with pytest.raises(ValueError):
        Magnitude.zero() ** 0
    with pytest.raises(ValueError):
        Magnitude.zero() ** -1


def _random_fraction(rng):
    num = rng.below(41) - 20
    den = 1 + rng.below(12)
    return Fraction(num, den)


def test_group_axioms_on_random_triples():
    rng = SplitMix64(100)
    one = Magnitude.one()
    for _ in range(300):
        a = Magnitude.pos(_random_fraction(rng))
        b = Magnitude.pos(_random_fraction(rng))
        c = Magnitude.pos(_random_fraction(rng))
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a
        assert a * one == a
        assert a * a**-1 == one


def test_order_compatible_with_multiplication():
    rng = SplitMix64(101)
    for _ in range(300):
        a = Magnitude.pos(_random_fraction(rng))
        b = Magnitude.pos(_random_fraction(rng))
        c = Magnitude.pos(_random_fraction(rng))
        if a <= b:
            assert a * c <= b * c


def test_max_semilattice():
    rng = SplitMix64(102)
    vals = [Magnitude.zero()] + [Magnitude.pos(_random_fraction(rng)) for _ in range(20)]
    for a in vals:
        assert max(a, a) == a
        for b in vals:
            assert max(a, b) == max(b, a)
            for c in vals[:7]:
                assert max(max(a, b), c) == max(a, max(b, c))


def test_zero_is_minimal_and_absorbing():
    z = Magnitude.zero()
    a = Magnitude.pos(Fraction(-7, 3))
    assert z < a
    assert z * a == z
    assert z.is_zero and not a.is_zero


def test_text_round_trip():
    cases = [Magnitude.zero(), Magnitude.pos(0), Magnitude.pos(-1),
             Magnitude.pos(Fraction(1, 2)), Magnitude.pos(Fraction(-3, 7))]
    for m in cases:
        assert Magnitude.from_text(str(m)) == m
    assert str(Magnitude.pos(-1)) == "2^-1"
    assert str(Magnitude.zero()) == "0"
    with pytest.raises(ValueError):
        Magnitude.from_text("three")


def test_scaled_compare_against_exact_fractions():
    # integer exponents make factor * 2^a vs 2^b computable with Fractions
    rng = SplitMix64(103)
    for _ in range(300):
        a = rng.below(21) - 10
        b = rng.below(21) - 10
        factor = Fraction(1 + rng.below(30), 1 + rng.below(30))
        lhs = factor * Fraction(2) ** a
        rhs = Fraction(2) ** b
        expected = (lhs > rhs) - (lhs < rhs)
        assert scaled_compare(Magnitude.pos(a), factor, Magnitude.pos(b)) == expected


def test_scaled_compare_fractional_exponents():
    # 3/2 * 2^(1/2) < 2^(3/2) since 3/2 < 2
    assert scaled_compare(Magnitude.pos(Fraction(1, 2)), Fraction(3, 2),
                          Magnitude.pos(Fraction(3, 2))) == -1
    # 4 * 2^(1/3) = 2^(7/3)
    assert scaled_compare(Magnitude.pos(Fraction(1, 3)), Fraction(4),
                          Magnitude.pos(Fraction(7, 3))) == 0
    assert scaled_compare(Magnitude.zero(), Fraction(5), Magnitude.zero()) == 0
    assert scaled_compare(Magnitude.zero(), Fraction(5), Magnitude.pos(0)) == -1
    assert scaled_compare(Magnitude.pos(0), Fraction(1, 9), Magnitude.zero()) == 1
    with pytest.raises(ValueError):
        scaled_compare(Magnitude.pos(0), Fraction(0), Magnitude.pos(0))
