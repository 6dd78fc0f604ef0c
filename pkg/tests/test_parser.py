from fractions import Fraction

import pytest

from phasequant.parser import ParseError, parse_expression
from phasequant.poly import PhasePoly, VariableTable
from phasequant.scalars import HbarScalar, Qi

T = VariableTable.canonical(1)
Q = PhasePoly.variable(T, "q")
P = PhasePoly.variable(T, "p")


def test_monomial():
    assert parse_expression("q^3", T) == Q**3


def test_oscillator_hamiltonian():
    assert parse_expression("1/2*(p^2+q^2)", T) == (P**2 + Q**2) * Qi(Fraction(1, 2))


def test_coefficient_only():
    f = parse_expression("i*hbar", T)
    assert f == PhasePoly.constant(T, HbarScalar.of(Qi(0, 1), 1))


def test_precedence_and_unary_minus():
    assert parse_expression("-q*p + 2", T) == -(Q * P) + 2
    assert parse_expression("q+p*q^2", T) == Q + P * Q**2
    assert parse_expression("(q+p)^2", T) == (Q + P) ** 2


def test_rational_literals():
    assert parse_expression("3/4*q", T) == Q * Qi(Fraction(3, 4))
    assert parse_expression("2/4", T) == PhasePoly.constant(T, Qi(Fraction(1, 2)))


def test_division_by_hbar():
    f = parse_expression("q/hbar", T)
    assert f == PhasePoly(T, {(1, 0): HbarScalar.of(1, -1)})


def test_complex_chart():
    tz = VariableTable.complex_chart(1)
    z = PhasePoly.variable(tz, "z")
    zb = PhasePoly.variable(tz, "zb")
    assert parse_expression("z*zb - 1", tz) == z * zb - 1


def test_multimode_names():
    t2 = VariableTable.canonical(2)
    f = parse_expression("q1*p2", t2)
    q1 = PhasePoly.variable(t2, "q1")
    p2 = PhasePoly.variable(t2, "p2")
    assert f == q1 * p2


def test_errors_carry_position():
    with pytest.raises(ParseError) as err:
        parse_expression("q + + * p", T)
    assert err.value.position == 4
    with pytest.raises(ParseError) as err:
        parse_expression("q + x", T)
    assert err.value.position == 4
    with pytest.raises(ParseError):
        parse_expression("q^p", T)
    with pytest.raises(ParseError):
        parse_expression("(q", T)
    with pytest.raises(ParseError):
        parse_expression("q/(q+p)", T)
    with pytest.raises(ParseError):
        parse_expression("1/0", T)
    with pytest.raises(ParseError):
        parse_expression("q $ p", T)


def test_whitespace_tolerant():
    assert parse_expression("  q  ^ 2  +  p ", T) == Q**2 + P
