"""Acceptance suite: every criterion is one test emitting one pass/fail line.

Group 1 is exact symbolic algebra, group 2 exact finite matrices at hbar = 1
and cutoff 10, group 3 floating-point numerics at stated tolerances, group 4
end-to-end determinism of the full verification run.
"""

import json
import math
import random
import time
from fractions import Fraction

import numpy as np

from phasequant import fock, kgeom, moyal, numlab, prequant, zetafock
from phasequant.opalg import CanonicalOperator, anticommutator, commutator, weyl_map, wigner_map
from phasequant.poly import PhasePoly, PoissonStructure, VariableTable, poisson_bracket
from phasequant.report import RunConfig, random_poly, run_suite
from phasequant.scalars import HbarScalar, Qi

T = VariableTable.canonical(1)
P = PoissonStructure.canonical(1)
CTX = moyal.StarContext.canonical(1)
THETA = prequant.ContactForm.canonical(1)
Q = PhasePoly.variable(T, "q")
Pv = PhasePoly.variable(T, "p")
IHBAR = PhasePoly.constant(T, HbarScalar.of(Qi(0, 1), 1))


def check(name, ok):
    print(f"{'PASS' if ok else 'FAIL'} {name}")
    assert ok, name


# -- group 1: exact symbolic ------------------------------------------------


def test_1a_canonical_commutators():
    qh, ph = CanonicalOperator.q(), CanonicalOperator.p()
    ih = CanonicalOperator.identity() * HbarScalar.of(Qi(0, 1), 1)
    ok = commutator(qh, ph) == ih
    lhs = commutator(qh**2, ph**2) * Qi(Fraction(1, 2))
    ok = ok and lhs == anticommutator(qh, ph) * HbarScalar.of(Qi(0, 1), 1)
    check("1a [q,p] = i*hbar and (1/2)[q^2,p^2] = i*hbar(qp+pq)", ok)


def test_1b_star_product_of_coordinates():
    qp = moyal.star_product(Q, Pv, CTX)
    pq = moyal.star_product(Pv, Q, CTX)
    ok = qp - pq == IHBAR and (qp + pq) * Qi(Fraction(1, 2)) == Q * Pv
    check("1b q*p - p*q = i*hbar and (1/2)(q*p + p*q) = qp", ok)


def test_1c_weyl_homomorphism_and_inverse():
    rng = random.Random(100)
    ok = True
    for _ in range(200):
        f = random_poly(T, rng, 5)
        g = random_poly(T, rng, 5)
        if not moyal.weyl_homomorphism_check(f, g, CTX).is_zero():
            ok = False
            break
        if wigner_map(weyl_map(f)) != f:
            ok = False
            break
    check("1c W(f*g) = W(f)W(g) and wigner o weyl = id (200 pairs, deg <= 5)", ok)


def test_1d_associativity_and_jacobi():
    rng = random.Random(101)
    ok = True
    for _ in range(100):
        f, g, h = (random_poly(T, rng, 4) for _ in range(3))
        lhs = moyal.star_product(moyal.star_product(f, g, CTX), h, CTX)
        rhs = moyal.star_product(f, moyal.star_product(g, h, CTX), CTX)
        if lhs != rhs:
            ok = False
            break
        jac = (
            moyal.moyal_bracket(f, moyal.moyal_bracket(g, h, CTX), CTX)
            + moyal.moyal_bracket(g, moyal.moyal_bracket(h, f, CTX), CTX)
            + moyal.moyal_bracket(h, moyal.moyal_bracket(f, g, CTX), CTX)
        )
        if not jac.is_zero():
            ok = False
            break
    check("1d star associativity and Moyal Jacobi (100 triples, deg <= 4)", ok)


def test_1e_groenewold_witness():
    w = moyal.groenewold_witness(CTX)
    expected = PhasePoly.constant(T, HbarScalar.of(Qi(Fraction(-3, 2)), 2))
    quad = moyal.moyal_bracket(Q**2, Pv**2, CTX) - poisson_bracket(Q**2, Pv**2, P)
    check("1e Groenewold witness = -(3/2)hbar^2 and quadratic witness = 0",
          w == expected and quad.is_zero())


def test_1f_prequantization_dirac_and_hermiticity():
    rng = random.Random(102)
    ih = HbarScalar.of(Qi(0, 1), 1)
    ok = True
    for _ in range(200):
        f = random_poly(T, rng, 4, real=True)
        g = random_poly(T, rng, 4, real=True)
        pf = prequant.prequantize(f, THETA, P)
        pg = prequant.prequantize(g, THETA, P)
        if prequant.diffop_commutator(pf, pg) != prequant.prequantize(
            poisson_bracket(f, g, P), THETA, P
        ).scale(ih):
            ok = False
            break
        if prequant.formal_adjoint(pf) != pf:
            ok = False
            break
    check("1f [P(f),P(g)] = i*hbar*P({f,g}) and P(f)* = P(f) (200 real pairs, deg <= 4)", ok)


def test_1g_curvature_identity():
    rng = random.Random(103)
    ok = True
    for _ in range(100):
        X = prequant.PhaseDiffOp(T, {n: random_poly(T, rng, 3) for n in T.names})
        Y = prequant.PhaseDiffOp(T, {n: random_poly(T, rng, 3) for n in T.names})
        omega = THETA.exterior_derivative_pair(X, Y)
        shifted = PhasePoly(T, {e: c.shift_hbar(-1) for e, c in omega.terms.items()})
        if prequant.connection_curvature(X, Y, THETA) != shifted:
            ok = False
            break
    check("1g R(X,Y) = omega(X,Y)/hbar (100 vector-field pairs)", ok)


def test_1h_bargmann_polarization():
    check("1h [a, dbar] = 0", prequant.bargmann_polarization_check().is_zero())


# -- group 2: exact matrices, hbar = 1, cutoff 10 ---------------------------


def test_2a_ladder_ccr_and_adjoint():
    basis = fock.BargmannBasis(1, 10)
    ann, cre = fock.ladder_matrices(basis, 1)
    a, astar = ann[0], cre[0]
    interior = basis.interior_indices()
    comm = (a * astar - astar * a).restrict(interior)
    target = fock.ExactMatrix.identity(len(basis)).restrict(interior) * HbarScalar.of(1)
    ok = comm == target and fock.adjoint_check(basis, 0, 1).is_zero()
    check("2a [a,a*] = hbar below the boundary and a* is the Gram adjoint (D = 10)", ok)


def test_2b_oscillator_spectrum():
    basis = fock.BargmannBasis(2, 10)
    H = fock.oscillator_hamiltonian(basis, 1)
    ok = H.is_diagonal()
    mult = {}
    for idx, mono in enumerate(basis.monomials):
        k = sum(mono)
        if k > 8:
            continue
        if H[idx, idx] != HbarScalar.of(Qi(k + 1)):
            ok = False
        mult[k] = mult.get(k, 0) + 1
    ok = ok and all(mult[k] == k + 1 for k in range(9))
    check("2b H0 spectrum (k + 1)*hbar with multiplicity k+1 for two modes, N <= 8", ok)


def test_2c_su2_realization():
    basis = fock.BargmannBasis(2, 10)
    ops = fock.schwinger_su2(basis, 1)
    interior = basis.interior_indices()
    ih = HbarScalar.of(Qi(0, 1))
    ok = True
    for a, b, c in (("M1", "M2", "M3"), ("M2", "M3", "M1"), ("M3", "M1", "M2")):
        if (ops[a] * ops[b] - ops[b] * ops[a]).restrict(interior) != (
            ops[c] * ih
        ).restrict(interior):
            ok = False
    for N in range(9):
        idxs = fock.degree_indices(basis, N)
        j = Fraction(N, 2)
        target = fock.ExactMatrix.identity(len(basis)).restrict(idxs) * HbarScalar.of(
            Qi(j * (j + 1))
        )
        if ops["M2tot"].restrict(idxs) != target:
            ok = False
        m3 = sorted(str(v) for v in ops["M3"].restrict(idxs).diagonal())
        want = sorted(str(HbarScalar.of(Qi(Fraction(k) - j))) for k in range(N + 1))
        if m3 != want:
            ok = False
    check("2c SU(2) commutators, M3 spectrum {-j..j}, Casimir j(j+1) (N <= 8)", ok)


def test_2d_car_identities():
    ok = all(fock.car_identities_hold(fock.car_matrices(m)) for m in range(1, 7))
    check("2d CAR identities exact for m <= 6 modes", ok)


def test_2e_quaternionic_identities():
    checks = kgeom.run_all_checks(samples=25, seed=0)
    check("2e quaternion, zero-divisor, and holomorphic-form identities", all(checks.values()))


# -- group 3: numerics ------------------------------------------------------


def test_3a_wigner_functions():
    t0 = time.perf_counter()
    e0, e1 = numlab.wigner_origin_values(1.0)
    f0 = float(numlab.wigner_transform(numlab.hermite_wavefunction(0), np.array(0.0), np.array(0.0)))
    f1 = float(numlab.wigner_transform(numlab.hermite_wavefunction(1), np.array(0.0), np.array(0.0)))
    ok = abs(f0 - e0) < 1e-6 and abs(f1 - e1) < 1e-6
    for n in (0, 1):
        pos, norm = numlab.marginal_check(numlab.hermite_wavefunction(n))
        ok = ok and pos < 1e-6 and norm < 1e-6
    ok = ok and time.perf_counter() - t0 < 30.0
    check("3a Wigner origin values, marginals, total mass (tol 1e-6, < 30 s)", ok)


def test_3b_stora_distribution():
    t0 = time.perf_counter()
    rng = np.random.default_rng(1)
    ok = True
    for d in (2, 3, 4, 5, 6):
        A = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
        rho = A @ A.conj().T
        rho /= np.trace(rho).real
        basis = [np.eye(d, dtype=complex)[:, k] for k in range(d)]
        for _ in range(10):
            v = rng.normal(size=d) + 1j * rng.normal(size=d)
            v /= np.linalg.norm(v)
            row = sum(numlab.stora_distribution(rho, v, b) for b in basis)
            if abs(row - np.real(np.vdot(v, rho @ v))) >= 1e-10:
                ok = False
    state = np.array([1.0, 1j]) / math.sqrt(2.0)
    scan = numlab.stora_negativity_scan(np.outer(state, state.conj()), 40, 40)
    ok = ok and scan.min_value < 0 and time.perf_counter() - t0 < 5.0
    check("3b Stora row sums (tol 1e-10, d <= 6) and a located negative value (< 5 s)", ok)


def test_3c_sphere_residue():
    t0 = time.perf_counter()
    ok = all(
        abs(numlab.sphere_residue_integral(float(N)) - N) < 1e-6 for N in range(1, 6)
    )
    ok = ok and time.perf_counter() - t0 < 10.0
    check("3c normalized sphere residue integral = N for N = 1..5 (tol 1e-6, < 10 s)", ok)


def test_3d_loop_integral():
    t0 = time.perf_counter()
    cases = [
        (numlab.regular_polygon(4), 1),
        (numlab.regular_polygon(7, turns=2), 2),
        (numlab.regular_polygon(5, turns=-1), -1),
        ([(3.0, 1.0), (5.0, 1.0), (5.0, 2.0), (3.0, 2.0)], 0),
    ]
    ok = all(
        abs(numlab.loop_integral_eta1(path) - 2.0 * math.pi * w) < 1e-8
        for path, w in cases
    )
    ok = ok and time.perf_counter() - t0 < 1.0
    check("3d loop integral of eta_1 = 2*pi*winding (tol 1e-8, < 1 s)", ok)


def test_3e_circle_spectra():
    t0 = time.perf_counter()
    ok = True
    spectra = []
    for lam in (Fraction(0), Fraction(1, 3), Fraction(1, 2)):
        op = prequant.circle_prequantize(lam, 50)
        vals = set()
        for n in range(-50, 51):
            if op.eigenvalue(n) != HbarScalar.of(Qi(Fraction(n) + lam), 1):
                ok = False
            vals.add(Fraction(n) + lam)
        spectra.append(vals)
    ok = ok and not (spectra[0] & spectra[1] or spectra[0] & spectra[2] or spectra[1] & spectra[2])
    ok = ok and time.perf_counter() - t0 < 1.0
    check("3e circle eigenvalues hbar*(n + lambda), |n| <= 50, disjoint spectra (< 1 s)", ok)


def test_3f_zeta_partition_function():
    t0 = time.perf_counter()
    lo, hi = zetafock.zeta_bracket(2.0, 10**6)
    target = math.pi**2 / 6.0
    ok = lo - 1e-6 <= target <= hi + 1e-6 and hi - lo < 1e-6
    ep = zetafock.euler_product(2.0, 10**4)
    factor = zetafock.euler_product_tail_factor(2.0, 10**4)
    ok = ok and ep <= hi and lo <= ep * factor
    ok = ok and time.perf_counter() - t0 < 30.0
    check("3f Z(2) bracket contains pi^2/6 (M = 10^6, tol 1e-6); Euler product consistent", ok)


# -- group 4: end-to-end ----------------------------------------------------


def test_4_run_all_deterministic():
    config = RunConfig(seed=0)
    t0 = time.perf_counter()
    first = [r.to_json() for r in run_suite("all", config)]
    elapsed = time.perf_counter() - t0
    second = [r.to_json() for r in run_suite("all", config)]
    ok = first == second and elapsed < 120.0
    ok = ok and all(
        c["status"] == "pass" for rep in first for c in json.loads(rep)["checks"]
    )
    check("4 run all: byte-identical reports, all pass, < 120 s", ok)
