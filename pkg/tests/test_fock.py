from fractions import Fraction

import pytest

from phasequant.fock import (
    BargmannBasis,
    CarAlgebra,
    ExactMatrix,
    adjoint_boundary_defect,
    adjoint_check,
    car_identities_hold,
    car_matrices,
    ccr_boundary_defect,
    degree_indices,
    gram_matrix,
    ladder_matrices,
    oscillator_hamiltonian,
    schwinger_su2,
)
from phasequant.scalars import HbarScalar, Qi

HB = Fraction(1)


def test_basis_order_and_interior():
    basis = BargmannBasis(2, 4)
    assert basis.monomials[0] == (0, 0)
    assert len(basis) == 16
    interior = basis.interior_indices()
    assert all(all(e <= 2 for e in basis.monomials[i]) for i in interior)


def test_ladder_action():
    basis = BargmannBasis(1, 6)
    ann, cre = ladder_matrices(basis, HB)
    a, astar = ann[0], cre[0]
    # a z = hbar * 1, a 1 = 0
    v = [HbarScalar() for _ in range(len(basis))]
    v[basis.index((1,))] = HbarScalar.of(1)
    out = a.apply(v)
    assert out[basis.index((0,))] == HbarScalar.of(1)
    vac = [HbarScalar() for _ in range(len(basis))]
    vac[basis.index((0,))] = HbarScalar.of(1)
    assert all(c.is_zero() for c in a.apply(vac))
    # creation on the top monomial truncates to zero
    top = [HbarScalar() for _ in range(len(basis))]
    top[basis.index((5,))] = HbarScalar.of(1)
    assert all(c.is_zero() for c in astar.apply(top))


def test_ccr_interior_and_boundary():
    basis = BargmannBasis(1, 8)
    ann, cre = ladder_matrices(basis, HB)
    a, astar = ann[0], cre[0]
    interior = basis.interior_indices()
    comm = (a * astar - astar * a).restrict(interior)
    target = ExactMatrix.identity(len(basis)).restrict(interior) * HbarScalar.of(Qi(HB))
    assert comm == target
    boundary = ccr_boundary_defect(basis, 0, HB)
    assert not boundary.is_zero()
    rows = {i for (i, _j) in boundary.entries}
    assert rows == {basis.index((7,))}


def test_adjoint_exact_including_boundary():
    basis = BargmannBasis(1, 8)
    assert adjoint_check(basis, 0, HB).is_zero()
    assert adjoint_boundary_defect(basis, 0, HB).is_zero()


def test_gram_diagonal():
    basis = BargmannBasis(1, 5)
    g = gram_matrix(basis, Fraction(1, 2))
    assert g.is_diagonal()
    # <z^2, z^2> = 2! * hbar^2 = 1/2
    i = basis.index((2,))
    assert g[i, i] == HbarScalar.of(Qi(Fraction(1, 2)))


def test_oscillator_spectrum_two_modes():
    basis = BargmannBasis(2, 10)
    H = oscillator_hamiltonian(basis, HB)
    assert H.is_diagonal()
    mult = {}
    for idx, mono in enumerate(basis.monomials):
        k = sum(mono)
        if k > 8:
            continue
        assert H[idx, idx] == HbarScalar.of(Qi(k + 1))
        mult[k] = mult.get(k, 0) + 1
    for k in range(9):
        assert mult[k] == k + 1


def test_oscillator_one_mode():
    basis = BargmannBasis(1, 6)
    H = oscillator_hamiltonian(basis, HB)
    i = basis.index((3,))
    assert H[i, i] == HbarScalar.of(Qi(Fraction(7, 2)))


def test_su2_commutators():
    basis = BargmannBasis(2, 6)
    ops = schwinger_su2(basis, HB)
    interior = basis.interior_indices()
    ih = HbarScalar.of(Qi(0, HB))
    for a, b, c in (("M1", "M2", "M3"), ("M2", "M3", "M1"), ("M3", "M1", "M2")):
        lhs = (ops[a] * ops[b] - ops[b] * ops[a]).restrict(interior)
        assert lhs == (ops[c] * ih).restrict(interior)


def test_su2_spectrum_and_casimir():
    basis = BargmannBasis(2, 10)
    ops = schwinger_su2(basis, HB)
    for N in range(9):
        idxs = degree_indices(basis, N)
        assert len(idxs) == N + 1
        j = Fraction(N, 2)
        target = ExactMatrix.identity(len(basis)).restrict(idxs) * HbarScalar.of(
            Qi(j * (j + 1))
        )
        assert ops["M2tot"].restrict(idxs) == target
        m3 = sorted(str(v) for v in ops["M3"].restrict(idxs).diagonal())
        want = sorted(str(HbarScalar.of(Qi(Fraction(k) - j))) for k in range(N + 1))
        assert m3 == want


def test_su2_raising_lowering():
    basis = BargmannBasis(2, 6)
    ops = schwinger_su2(basis, HB)
    interior = basis.interior_indices()
    comm = (ops["M3"] * ops["Mplus"] - ops["Mplus"] * ops["M3"]).restrict(interior)
    assert comm == (ops["Mplus"] * HbarScalar.of(Qi(HB))).restrict(interior)


def test_car_identities():
    for m in (1, 2, 3, 4):
        assert car_identities_hold(car_matrices(m))


def test_car_number_operator():
    alg = car_matrices(3)
    N = alg.number_operator()
    assert N.is_diagonal()
    diag = [str(v) for v in N.diagonal()]
    # occupation counts of the 8 bitstrings
    assert sorted(diag) == sorted(str(HbarScalar.of(Qi(bin(k).count("1")))) for k in range(8))


def test_car_mode_guard():
    with pytest.raises(ValueError):
        car_matrices(CarAlgebra.MAX_MODES + 1)
