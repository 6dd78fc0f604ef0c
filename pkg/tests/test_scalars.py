import random
from fractions import Fraction

import pytest

from phasequant.scalars import HbarScalar, Qi, QI_I, QI_ONE, QI_ZERO


def test_qi_basic_arithmetic():
    a = Qi(Fraction(1, 2), Fraction(-3))
    b = Qi(2, Fraction(1, 3))
    assert a + b == Qi(Fraction(5, 2), Fraction(-8, 3))
    assert a - a == QI_ZERO
    assert QI_I * QI_I == Qi(-1)
    assert a * QI_ONE == a


def test_qi_division_and_conjugate():
    a = Qi(3, 4)
    assert a * a.conjugate() == Qi(25)
    assert (a / a) == QI_ONE
    assert QI_ONE / QI_I == Qi(0, -1)
    with pytest.raises(ZeroDivisionError):
        a / QI_ZERO


def test_qi_random_field_axioms():
    rng = random.Random(7)

    def rand():
        return Qi(Fraction(rng.randint(-6, 6), rng.randint(1, 4)),
                  Fraction(rng.randint(-6, 6), rng.randint(1, 4)))

    for _ in range(50):
        a, b, c = rand(), rand(), rand()
        assert a * (b + c) == a * b + a * c
        assert (a * b).conjugate() == a.conjugate() * b.conjugate()
        if not b.is_zero():
            assert (a / b) * b == a


def test_qi_immutable_and_complex():
    a = Qi(1, 2)
    with pytest.raises(AttributeError):
        a.re = Fraction(5)
    assert complex(a) == 1 + 2j


def test_hbar_scalar_laurent():
    x = HbarScalar.of(Qi(2), 1) + HbarScalar.of(Qi(0, 1), -1)
    y = HbarScalar.of(Qi(1, 1), 0)
    prod = x * y
    assert prod.hbar_part(1) == Qi(2, 2)
    assert prod.hbar_part(-1) == Qi(-1, 1)
    assert prod.hbar_part(0) == Qi(0)
    assert x.min_hbar_power() == -1


def test_hbar_scalar_substitution_and_shift():
    x = HbarScalar.of(Qi(3), 2) + HbarScalar.of(Qi(1), 0)
    assert x.substitute_hbar(Fraction(1, 2)) == Qi(Fraction(7, 4))
    assert x.shift_hbar(-2).hbar_part(0) == Qi(3)
    assert x.conjugate() == x  # real coefficients


def test_hbar_scalar_conjugate_fixes_hbar():
    x = HbarScalar.of(Qi(0, 1), 3)
    assert x.conjugate() == HbarScalar.of(Qi(0, -1), 3)
