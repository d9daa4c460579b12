"""Field axioms and canonical storage of the exact rational layer."""

import random
from math import gcd

import pytest

from hilbertmod.rationals import Rational, rat_add, rat_cmp, rat_div, rat_mul, rat_neg

BOUND = 10**30


def _random_rational(rng):
    num = rng.randint(-BOUND, BOUND)
    den = rng.randint(1, BOUND)
    return Rational(num, den)


def test_examples():
    assert rat_add(Rational(1, 2), Rational(1, 3)) == Rational(5, 6)
    assert rat_add(Rational(1, 2), Rational(-1, 2)) == Rational(0)
    assert rat_mul(Rational(2, 3), Rational(3, 2)) == Rational(1)
    assert rat_cmp(Rational(1, 3), Rational(1, 2)) == -1
    assert rat_cmp(Rational(1, 2), Rational(1, 2)) == 0
    assert rat_cmp(Rational(1, 2), Rational(1, 3)) == 1


def test_identity_elements():
    rng = random.Random(20240501)
    for _ in range(50):
        x = _random_rational(rng)
        assert rat_add(x, Rational(0)) == x
        assert rat_mul(x, Rational(1)) == x
        assert rat_add(x, rat_neg(x)) == Rational(0)


def test_field_axioms_randomized():
    rng = random.Random(987654321)
    for _ in range(200):
        x, y, z = (_random_rational(rng) for _ in range(3))
        assert rat_add(rat_add(x, y), z) == rat_add(x, rat_add(y, z))
        assert rat_mul(rat_mul(x, y), z) == rat_mul(x, rat_mul(y, z))
        assert rat_add(x, y) == rat_add(y, x)
        assert rat_mul(x, y) == rat_mul(y, x)
        assert rat_mul(x, rat_add(y, z)) == rat_add(rat_mul(x, y), rat_mul(x, z))
        if y != 0:
            assert rat_mul(rat_div(x, y), y) == x


def test_canonical_reduced_storage():
    rng = random.Random(13)
    for _ in range(200):
        x = _random_rational(rng)
        assert x.denominator > 0
        assert gcd(abs(x.numerator), x.denominator) == 1
    # equal values have identical stored representation
    assert (Rational(2, 4).numerator, Rational(2, 4).denominator) == (1, 2)
    assert Rational(10**20, 2 * 10**20) == Rational(1, 2)


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        rat_div(Rational(1), Rational(0))
