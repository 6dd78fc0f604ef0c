import random
from fractions import Fraction

import pytest

from phasequant.opalg import (
    CanonicalOperator,
    ModeMismatchError,
    anticommutator,
    commutator,
    weyl_map,
    weyl_map_bruteforce,
    wigner_map,
)
from phasequant.poly import PhasePoly, VariableTable
from phasequant.scalars import HbarScalar, Qi

from test_poly import rand_poly


def ih(n=1):
    return CanonicalOperator.identity(n) * HbarScalar.of(Qi(0, 1), 1)


def test_ccr():
    q, p = CanonicalOperator.q(), CanonicalOperator.p()
    assert commutator(q, p) == ih()
    assert commutator(p, q) == -ih()
    assert commutator(q, q).is_zero()


def test_multimode_ccr():
    q1 = CanonicalOperator.q(0, 2)
    p2 = CanonicalOperator.p(1, 2)
    assert commutator(q1, p2).is_zero()
    assert commutator(q1, CanonicalOperator.p(0, 2)) == ih(2)


def test_quadratic_identity():
    q, p = CanonicalOperator.q(), CanonicalOperator.p()
    lhs = commutator(q**2, p**2) * Qi(Fraction(1, 2))
    rhs = anticommutator(q, p) * HbarScalar.of(Qi(0, 1), 1)
    assert lhs == rhs


def test_normal_ordering_rewrite():
    q, p = CanonicalOperator.q(), CanonicalOperator.p()
    # p q = q p - i hbar
    assert p * q == q * p - ih()
    # p^2 q = q p^2 - 2 i hbar p
    assert p**2 * q == q * p**2 - p * HbarScalar.of(Qi(0, 2), 1)


def test_dagger():
    q, p = CanonicalOperator.q(), CanonicalOperator.p()
    a = q * p  # standard-ordered word
    assert a.dagger() == p * q
    assert (a * HbarScalar.of(Qi(0, 1), 1)).dagger() == p * q * HbarScalar.of(Qi(0, -1), 1)
    rngless = (q**2 * p + p * q)
    assert rngless.dagger().dagger() == rngless


def test_mode_mismatch():
    with pytest.raises(ModeMismatchError):
        CanonicalOperator.q(0, 1) * CanonicalOperator.q(0, 2)


def test_weyl_map_examples():
    t = VariableTable.canonical(1)
    q = PhasePoly.variable(t, "q")
    p = PhasePoly.variable(t, "p")
    qh, ph = CanonicalOperator.q(), CanonicalOperator.p()
    # W(qp) = (qhat phat + phat qhat)/2 = qhat phat - i hbar/2
    assert weyl_map(q * p) == qh * ph - CanonicalOperator.identity() * HbarScalar.of(
        Qi(0, Fraction(1, 2)), 1
    )
    assert weyl_map(q**2 * p) == qh**2 * ph - qh * HbarScalar.of(Qi(0, 1), 1)


def test_weyl_map_matches_bruteforce():
    rng = random.Random(23)
    t = VariableTable.canonical(1)
    for _ in range(15):
        f = rand_poly(t, rng, degree=4)
        assert weyl_map(f) == weyl_map_bruteforce(f)


def test_wigner_inverts_weyl():
    rng = random.Random(17)
    t = VariableTable.canonical(2)
    for _ in range(15):
        f = rand_poly(t, rng, degree=4)
        assert wigner_map(weyl_map(f)) == f


def test_weyl_hermiticity():
    rng = random.Random(29)
    t = VariableTable.canonical(1)
    for _ in range(15):
        f = rand_poly(t, rng, degree=4, real=True)
        op = weyl_map(f)
        assert op.dagger() == op


def test_cubic_commutator_defect():
    # [W(q^3), W(p^3)] differs from i hbar W({q^3, p^3}) at order hbar^3
    t = VariableTable.canonical(1)
    q = PhasePoly.variable(t, "q")
    p = PhasePoly.variable(t, "p")
    from phasequant.poly import PoissonStructure, poisson_bracket

    P = PoissonStructure.canonical(1)
    lhs = commutator(weyl_map(q**3), weyl_map(p**3))
    rhs = weyl_map(poisson_bracket(q**3, p**3, P)) * HbarScalar.of(Qi(0, 1), 1)
    defect = lhs - rhs
    expected = CanonicalOperator.identity() * HbarScalar.of(Qi(0, Fraction(-3, 2)), 3)
    assert defect == expected


def test_json_roundtrip_shape():
    op = CanonicalOperator.q() ** 2 * CanonicalOperator.p()
    data = op.to_json()
    assert '"qexps"' in data and '"pexps"' in data
