"""Machine-readable verification reports over every module.

A suite is a list of check records {id, anchor, status, witness, tolerance,
runtime}; the anchor names the identity being verified (or is tagged
"plumbing").  Serialization is canonical and, with timings suppressed,
byte-identical across runs for a fixed seed and config.
"""

from __future__ import annotations

import json
import math
import random
import time
from dataclasses import dataclass, field, asdict
from fractions import Fraction
from typing import Callable, Dict, List, Optional

from . import fock, kgeom, moyal, numlab, prequant, zetafock
from .opalg import CanonicalOperator, commutator, weyl_map, wigner_map
from .poly import PhasePoly, PoissonStructure, VariableTable, poisson_bracket
from .scalars import HbarScalar, Qi

SUITE_NAMES = ("moyal", "prequant", "fock", "numlab", "kgeom", "zeta")


@dataclass(frozen=True)
class RunConfig:
    hbar: Fraction = Fraction(1)
    seed: int = 0
    tolerance: float = 1e-6
    cutoff: int = 10
    samples: int = 20
    fast: bool = False

    def wigner_order(self) -> int:
        return 80 if self.fast else 200

    def sphere_resolution(self) -> int:
        return 32 if self.fast else 64

    def zeta_cutoff(self) -> int:
        return 10**5 if self.fast else 10**6

    def to_json_dict(self) -> Dict:
        return {
            "hbar": str(self.hbar),
            "seed": self.seed,
            "tolerance": self.tolerance,
            "cutoff": self.cutoff,
            "samples": self.samples,
            "fast": self.fast,
        }


@dataclass
class CheckRecord:
    id: str
    anchor: str
    status: str
    witness: object
    tolerance: Optional[float]
    runtime: Optional[float]


@dataclass
class RunReport:
    suite: str
    config: Dict
    checks: List[CheckRecord] = field(default_factory=list)

    def all_pass(self) -> bool:
        return all(c.status == "pass" for c in self.checks)

    def to_json(self, timings: bool = False) -> str:
        payload = {
            "suite": self.suite,
            "config": self.config,
            "checks": [
                {
                    "id": c.id,
                    "anchor": c.anchor,
                    "status": c.status,
                    "witness": c.witness,
                    "tolerance": c.tolerance,
                    "runtime": c.runtime if timings else None,
                }
                for c in sorted(self.checks, key=lambda c: c.id)
            ],
        }
        return json.dumps(payload, indent=1, sort_keys=True)

    def to_csv_lines(self) -> List[str]:
        lines = ["id,anchor,status,tolerance,witness"]
        for c in sorted(self.checks, key=lambda c: c.id):
            witness = json.dumps(c.witness, sort_keys=True).replace('"', "'")
            tol = "" if c.tolerance is None else repr(c.tolerance)
            lines.append(f'{c.id},"{c.anchor}",{c.status},{tol},"{witness}"')
        return lines


class _Recorder:
    def __init__(self, suite: str, config: RunConfig):
        self.report = RunReport(suite, config.to_json_dict())
        self.suite = suite

    def check(self, cid, anchor, ok, witness, tolerance=None, runtime=None):
        self.report.checks.append(
            CheckRecord(
                f"{self.suite}.{cid}",
                anchor,
                "pass" if ok else "fail",
                witness,
                tolerance,
                runtime,
            )
        )

    def timed(self, cid, anchor, fn, tolerance=None):
        t0 = time.perf_counter()
        ok, witness = fn()
        self.check(cid, anchor, ok, witness, tolerance, time.perf_counter() - t0)


def random_poly(table: VariableTable, rng: random.Random, degree: int, real: bool = False) -> PhasePoly:
    """Random sparse polynomial of total degree <= degree with small coefficients."""
    n = len(table)
    terms = {}
    for _ in range(rng.randint(2, 5)):
        exps = [0] * n
        for _ in range(rng.randint(0, degree)):
            exps[rng.randrange(n)] += 1
        re = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
        im = 0 if real else Fraction(rng.randint(-4, 4), rng.randint(1, 3))
        c = Qi(re, im)
        if not c.is_zero():
            terms[tuple(exps)] = terms.get(tuple(exps), HbarScalar()) + HbarScalar.of(c)
    return PhasePoly(table, terms)


# ---------------------------------------------------------------------------


def suite_moyal(config: RunConfig) -> RunReport:
    rec = _Recorder("moyal", config)
    rng = random.Random(config.seed)
    table = VariableTable.canonical(1)
    q = PhasePoly.variable(table, "q")
    p = PhasePoly.variable(table, "p")
    ctx = moyal.StarContext.canonical(1)
    P = ctx.structure
    ihbar = PhasePoly.constant(table, HbarScalar.of(Qi(0, 1), 1))

    qh, ph = CanonicalOperator.q(), CanonicalOperator.p()
    ih = CanonicalOperator.identity() * HbarScalar.of(Qi(0, 1), 1)
    rec.timed(
        "01-ccr",
        "[qhat, phat] = i*hbar",
        lambda: (commutator(qh, ph) == ih, str(commutator(qh, ph))),
    )

    def quad():
        lhs = commutator(qh**2, ph**2) * Qi(Fraction(1, 2))
        rhs = (qh * ph + ph * qh) * HbarScalar.of(Qi(0, 1), 1)
        return lhs == rhs, str(lhs)

    rec.timed("02-quadratic", "(1/2)[qhat^2, phat^2] = i*hbar(qhat*phat + phat*qhat)", quad)

    def star_qp():
        sp = moyal.star_product(q, p, ctx)
        ok = (
            sp == q * p + ihbar * Qi(Fraction(1, 2))
            and sp - moyal.star_product(p, q, ctx) == ihbar
            and (sp + moyal.star_product(p, q, ctx)) * Qi(Fraction(1, 2)) == q * p
        )
        return ok, sp.to_json_terms()

    rec.timed("03-star-qp", "q*p = qp + i*hbar/2; commutator i*hbar; symmetrization qp", star_qp)

    def weyl_hom():
        for _ in range(config.samples):
            f = random_poly(table, rng, 5)
            g = random_poly(table, rng, 5)
            if not moyal.weyl_homomorphism_check(f, g, ctx).is_zero():
                return False, {"f": f.to_json_terms(), "g": g.to_json_terms()}
        return True, {"pairs": config.samples}

    rec.timed("04-weyl-homomorphism", "W(f*g) = W(f)W(g)", weyl_hom)

    def roundtrip():
        for _ in range(config.samples):
            f = random_poly(table, rng, 5)
            if wigner_map(weyl_map(f)) != f:
                return False, f.to_json_terms()
        return True, {"polynomials": config.samples}

    rec.timed("05-wigner-weyl", "wigner o weyl = id", roundtrip)

    def assoc():
        for _ in range(max(3, config.samples // 2)):
            f = random_poly(table, rng, 4)
            g = random_poly(table, rng, 4)
            h = random_poly(table, rng, 4)
            lhs = moyal.star_product(moyal.star_product(f, g, ctx), h, ctx)
            rhs = moyal.star_product(f, moyal.star_product(g, h, ctx), ctx)
            if lhs != rhs:
                return False, {"f": f.to_json_terms()}
            jac = (
                moyal.moyal_bracket(f, moyal.moyal_bracket(g, h, ctx), ctx)
                + moyal.moyal_bracket(g, moyal.moyal_bracket(h, f, ctx), ctx)
                + moyal.moyal_bracket(h, moyal.moyal_bracket(f, g, ctx), ctx)
            )
            if not jac.is_zero():
                return False, {"jacobi": jac.to_json_terms()}
        return True, {"triples": max(3, config.samples // 2)}

    rec.timed("06-associativity-jacobi", "star associativity and Moyal-bracket Jacobi", assoc)

    def witness():
        w = moyal.groenewold_witness(ctx)
        expected = PhasePoly.constant(table, HbarScalar.of(Qi(Fraction(-3, 2)), 2))
        quad_w = moyal.moyal_bracket(q**2, p**2, ctx) - poisson_bracket(q**2, p**2, P)
        return w == expected and quad_w.is_zero(), w.to_json_terms()

    rec.timed("07-groenewold", "MB(q^3, p^3) - {q^3, p^3} = -(3/2)hbar^2; quadratic witness 0", witness)

    def hochschild():
        for _ in range(5):
            f, g, h = (random_poly(table, rng, 3) for _ in range(3))
            if not moyal.hochschild_cocycle_check(f, g, h, ctx).is_zero():
                return False, f.to_json_terms()
        return True, {"triples": 5}

    rec.timed("08-hochschild", "B1 = (i/2){.,.} is a Hochschild 2-cocycle", hochschild)
    return rec.report


def suite_prequant(config: RunConfig) -> RunReport:
    rec = _Recorder("prequant", config)
    rng = random.Random(config.seed)
    table = VariableTable.canonical(1)
    P = PoissonStructure.canonical(1)
    theta = prequant.ContactForm.canonical(1)

    def dirac():
        for _ in range(config.samples):
            f = random_poly(table, rng, 4, real=True)
            g = random_poly(table, rng, 4, real=True)
            lhs = prequant.diffop_commutator(
                prequant.prequantize(f, theta, P), prequant.prequantize(g, theta, P)
            )
            rhs = prequant.prequantize(poisson_bracket(f, g, P), theta, P).scale(
                HbarScalar.of(Qi(0, 1), 1)
            )
            if lhs != rhs:
                return False, {"f": f.to_json_terms(), "g": g.to_json_terms()}
        return True, {"pairs": config.samples}

    rec.timed("01-dirac", "[P(f), P(g)] = i*hbar*P({f, g})", dirac)

    def hermitian():
        for _ in range(config.samples):
            f = random_poly(table, rng, 4, real=True)
            op = prequant.prequantize(f, theta, P)
            if prequant.formal_adjoint(op) != op:
                return False, f.to_json_terms()
        return True, {"operators": config.samples}

    rec.timed("02-hermiticity", "P(f) is formally self-adjoint for real f", hermitian)

    def curvature():
        for _ in range(max(5, config.samples // 2)):
            X = prequant.PhaseDiffOp(
                table,
                {n: random_poly(table, rng, 2) for n in table.names},
            )
            Y = prequant.PhaseDiffOp(
                table,
                {n: random_poly(table, rng, 2) for n in table.names},
            )
            R = prequant.connection_curvature(X, Y, theta)
            omega = theta.exterior_derivative_pair(X, Y)
            shifted = PhasePoly(
                table, {e: c.shift_hbar(-1) for e, c in omega.terms.items()}
            )
            if R != shifted:
                return False, str(R)
        return True, {"pairs": max(5, config.samples // 2)}

    rec.timed("03-curvature", "R(X, Y) = omega(X, Y)/hbar", curvature)

    def kinetic():
        defect = prequant.prequant_defect_kinetic(1)
        one = PhasePoly.constant(table, 1)
        p = PhasePoly.variable(table, "p")
        applied = defect.apply(one)
        return (
            not defect.is_zero() and applied == p**2 * Qi(Fraction(-1, 2)),
            str(defect),
        )

    rec.timed("04-kinetic-defect", "P(p)^2/(2m) - P(p^2/(2m)) is nonzero (second order)", kinetic)

    def circle():
        lams = (Fraction(0), Fraction(1, 3), Fraction(1, 2))
        spectra = []
        for lam in lams:
            op = prequant.circle_prequantize(lam, 50)
            vals = set()
            for n in range(-50, 51):
                ev = op.eigenvalue(n)
                if ev != HbarScalar.of(Qi(Fraction(n) + lam), 1):
                    return False, {"lambda": str(lam), "n": n}
                vals.add(str(Fraction(n) + lam))
            spectra.append(vals)
        disjoint = all(
            not (spectra[i] & spectra[j])
            for i in range(3)
            for j in range(i + 1, 3)
        )
        return disjoint, {"modes": 101, "lambdas": [str(l) for l in lams]}

    rec.timed("05-circle-spectrum", "circle operator eigenvalue hbar*(n + lambda); disjoint spectra", circle)

    rec.timed(
        "06-bargmann",
        "[a, dbar] = 0 (annihilator preserves the polarization)",
        lambda: (
            prequant.bargmann_polarization_check().is_zero(),
            str(prequant.bargmann_polarization_check()),
        ),
    )
    return rec.report


def suite_fock(config: RunConfig) -> RunReport:
    rec = _Recorder("fock", config)
    hbar = config.hbar
    D = config.cutoff

    def ccr_interior():
        basis = fock.BargmannBasis(1, D)
        ann, cre = fock.ladder_matrices(basis, hbar)
        a, astar = ann[0], cre[0]
        interior = basis.interior_indices()
        comm = (a * astar - astar * a).restrict(interior)
        target = fock.ExactMatrix.identity(len(basis)).restrict(interior) * HbarScalar.of(
            Qi(Fraction(hbar))
        )
        boundary = fock.ccr_boundary_defect(basis, 0, hbar)
        nonzero_rows = sorted({i for (i, _j) in boundary.entries})
        expected_rows = [
            i for i, m in enumerate(basis.monomials) if sum(m) == D - 1
        ]
        return (
            comm == target and nonzero_rows == expected_rows,
            {"interior_dim": len(interior), "boundary_rows": nonzero_rows},
        )

    rec.timed("01-ccr", "[a, a*] = hbar below the truncation boundary", ccr_interior)

    def adjoint():
        basis = fock.BargmannBasis(1, D)
        return (
            fock.adjoint_check(basis, 0, hbar).is_zero()
            and fock.adjoint_boundary_defect(basis, 0, hbar).is_zero(),
            {"gram": "diag(prod alpha_i! hbar^alpha_i)"},
        )

    rec.timed("02-adjoint", "a* is the Gram adjoint of a (exactly, including the boundary)", adjoint)

    def osc():
        basis = fock.BargmannBasis(2, D)
        H = fock.oscillator_hamiltonian(basis, hbar)
        if not H.is_diagonal():
            return False, "not diagonal"
        mult: Dict[str, int] = {}
        for idx, mono in enumerate(basis.monomials):
            k = sum(mono)
            if k > min(8, D - 2):
                continue
            ev = H[idx, idx]
            expect = HbarScalar.of(Qi(Fraction(hbar) * (k + 1)))
            if ev != expect:
                return False, {"monomial": list(mono)}
            key = str(Fraction(hbar) * (k + 1))
            mult[key] = mult.get(key, 0) + 1
        ok = all(
            mult[str(Fraction(hbar) * (k + 1))] == k + 1 for k in range(min(8, D - 2) + 1)
        )
        return ok, {"multiplicities": mult}

    rec.timed("03-oscillator", "H0 eigenvalue (k + n/2)*hbar with multiplicity k+1 for n = 2", osc)

    def su2():
        basis = fock.BargmannBasis(2, D)
        ops = fock.schwinger_su2(basis, hbar)
        interior = basis.interior_indices()
        ih = HbarScalar.of(Qi(0, Fraction(hbar)))
        for a, b, c in (("M1", "M2", "M3"), ("M2", "M3", "M1"), ("M3", "M1", "M2")):
            lhs = (ops[a] * ops[b] - ops[b] * ops[a]).restrict(interior)
            rhs = (ops[c] * ih).restrict(interior)
            if lhs != rhs:
                return False, {"commutator": f"[{a},{b}]"}
        for N in range(0, min(8, D - 2) + 1):
            idxs = [i for i in fock.degree_indices(basis, N)]
            j = Fraction(N, 2)
            cas = Fraction(hbar) ** 2 * j * (j + 1)
            block = ops["M2tot"].restrict(idxs)
            target = fock.ExactMatrix.identity(len(basis)).restrict(idxs) * HbarScalar.of(
                Qi(cas)
            )
            if block != target:
                return False, {"degree": N}
            m3 = ops["M3"].restrict(idxs)
            evs = sorted(str(v) for v in m3.diagonal())
            want = sorted(
                str(HbarScalar.of(Qi(Fraction(hbar) * (Fraction(k) - j))))
                for k in range(N + 1)
            )
            if evs != want:
                return False, {"M3_degree": N}
        return True, {"max_degree": min(8, D - 2)}

    rec.timed("04-su2", "[M_a, M_b] = i*hbar*M_c; M3 spectrum {-j..j}*hbar; Casimir j(j+1)*hbar^2", su2)

    def car():
        m = 6 if not config.fast else 4
        alg = fock.car_matrices(m)
        return fock.car_identities_hold(alg), {"modes": m, "dim": alg.dim}

    rec.timed("05-car", "{b_i, b_j*} = delta_ij, {b_i, b_j} = 0", car)
    return rec.report


def suite_numlab(config: RunConfig) -> RunReport:
    rec = _Recorder("numlab", config)
    rng = random.Random(config.seed)
    # fast mode trades quadrature order for a looser (recorded) tolerance
    tol = max(config.tolerance, 1e-4) if config.fast else config.tolerance
    hbar = float(config.hbar)
    order = config.wigner_order()

    def origin():
        e0, e1 = numlab.wigner_origin_values(hbar)
        psi0 = numlab.hermite_wavefunction(0, hbar)
        psi1 = numlab.hermite_wavefunction(1, hbar)
        import numpy as np

        f0 = float(numlab.wigner_transform(psi0, np.array(0.0), np.array(0.0), hbar, order=order))
        f1 = float(numlab.wigner_transform(psi1, np.array(0.0), np.array(0.0), hbar, order=order))
        err = max(abs(f0 - e0), abs(f1 - e1))
        return err < tol, {"F0": f0, "F1": f1, "max_error": err}

    rec.timed("01-wigner-origin", "F_0(0,0) = 1/(pi*hbar), F_1(0,0) = -1/(pi*hbar)", origin, tol)

    def marginals():
        worst = 0.0
        half, m_order = (6.5, 140) if config.fast else (8.0, 240)
        for n in (0, 1, 2, 3):
            psi = numlab.hermite_wavefunction(n, hbar)
            pos, norm = numlab.marginal_check(psi, hbar, half_width=half, order=m_order)
            worst = max(worst, pos, norm)
        return worst < tol, {"max_defect": worst}

    rec.timed("02-wigner-marginals", "Wigner marginals recover |psi|^2 and total mass 1", marginals, tol)

    def stora_rows():
        import numpy as np

        nprng = __import__("numpy").random.default_rng(config.seed)
        worst = 0.0
        for d in (2, 3, 4, 6):
            A = nprng.normal(size=(d, d)) + 1j * nprng.normal(size=(d, d))
            rho = A @ A.conj().T
            rho = rho / np.trace(rho).real
            basis = [np.eye(d, dtype=complex)[:, k] for k in range(d)]
            for _ in range(5):
                v = nprng.normal(size=d) + 1j * nprng.normal(size=d)
                v = v / np.linalg.norm(v)
                row = sum(numlab.stora_distribution(rho, v, b) for b in basis)
                expect = float(np.real(np.vdot(v, rho @ v)))
                worst = max(worst, abs(row - expect))
        return worst < 1e-10, {"max_defect": worst}

    rec.timed("03-stora-rowsum", "sum_b Re(<a|b><b|rho|a>) = <a|rho|a>", stora_rows, 1e-10)

    def stora_neg():
        import numpy as np

        v = np.array([1.0, 1j]) / math.sqrt(2.0)
        rho = np.outer(v, v.conj())
        scan = numlab.stora_negativity_scan(rho, 40, 40)
        return scan.min_value < -1e-3 and scan.row_sum_defect < 1e-10, {
            "min_value": scan.min_value,
            "theta": scan.theta,
            "phi": scan.phi,
        }

    rec.timed("04-stora-negativity", "the spin quasi-probability takes negative values", stora_neg, 1e-10)

    def sphere():
        res = config.sphere_resolution()
        worst = 0.0
        halved = {}
        for N in range(1, 6):
            val = numlab.sphere_residue_integral(float(N), hbar, res, res)
            worst = max(worst, abs(val - N))
            halved[str(N)] = numlab.sphere_residue_integral(float(N), hbar, res, res, halved=True)
        return worst < tol, {"max_error": worst, "halved_values": halved}

    rec.timed("05-sphere-residue", "normalized residue integral over the level sphere = N", sphere, tol)

    def loop():
        cases = [
            (numlab.regular_polygon(4), 1),
            (numlab.regular_polygon(7, turns=2), 2),
            (numlab.regular_polygon(5, turns=-1), -1),
            ([(3.0, 1.0), (5.0, 1.0), (5.0, 2.0), (3.0, 2.0)], 0),
        ]
        worst = 0.0
        for path, w in cases:
            val = numlab.loop_integral_eta1(path)
            worst = max(worst, abs(val - 2.0 * math.pi * w))
        return worst < 1e-8, {"max_error": worst}

    rec.timed("06-loop", "closed-loop integral of eta_1 = 2*pi*(winding number)", loop, 1e-8)
    return rec.report


def suite_kgeom(config: RunConfig) -> RunReport:
    rec = _Recorder("kgeom", config)
    t0 = time.perf_counter()
    checks = kgeom.run_all_checks(samples=config.samples, seed=config.seed)
    dt = time.perf_counter() - t0
    anchors = {
        "I_squared": "I^2 = -1",
        "J_squared": "J^2 = -1",
        "K_squared": "K^2 = -1",
        "IJK": "IJK = -1",
        "IJ_is_K": "IJ = K",
        "commutator_IJ_2K": "[I, J] = 2K",
        "norm_law": "q qbar = |q|^2",
        "zero_divisor_product": "(J + iK)(1 + iI) = 0",
        "factors_nonzero": "both zero-divisor factors are nonzero",
        "holomorphicity": "Omega(X, (1 + iI)Y) = 0",
        "wz_coordinates": "Omega = dw wedge dz",
        "omega_antisymmetric": "Omega is antisymmetric",
    }
    for i, (key, ok) in enumerate(sorted(checks.items()), start=1):
        rec.check(f"{i:02d}-{key}", anchors.get(key, "plumbing"), ok, ok, None, dt / len(checks))
    return rec.report


def suite_zeta(config: RunConfig) -> RunReport:
    rec = _Recorder("zeta", config)
    rng = random.Random(config.seed)

    def bracket():
        cutoff = config.zeta_cutoff()
        lo, hi = zetafock.zeta_bracket(2.0, cutoff)
        target = math.pi**2 / 6.0
        return (
            lo - config.tolerance <= target <= hi + config.tolerance and hi - lo < config.tolerance,
            {"low": lo, "high": hi, "target": target},
        )

    rec.timed("01-bracket", "Z(beta) partial sum + integral tail brackets zeta(2) = pi^2/6", bracket, config.tolerance)

    def euler():
        P = 10**4
        beta = 2.0
        ep = zetafock.euler_product(beta, P)
        factor = zetafock.euler_product_tail_factor(beta, P)
        lo, hi = zetafock.zeta_bracket(beta, 10**5)
        ok = ep <= hi and lo <= ep * factor
        return ok, {"product": ep, "tail_factor": factor, "series_bracket": [lo, hi]}

    rec.timed("02-euler", "truncated Euler product is consistent with the series bracket", euler)

    def occupation():
        for _ in range(config.samples):
            n = rng.randint(1, 10**6)
            state = zetafock.FockInteger(n)
            if state.number_eigenvalue() != n:
                return False, {"n": n}
            if abs(state.log_energy() - math.log(n)) > 1e-9:
                return False, {"n": n, "log": state.log_energy()}
        return True, {"samples": config.samples}

    rec.timed("03-occupation", "number operator eigenvalue on |n> equals n; H|n> = ln(n)|n>", occupation)

    def smooth():
        exact = zetafock.smooth_sum_exact(2, 5)
        if exact != Fraction(25, 16):
            return False, {"product": str(exact)}
        depth = 30
        truncated = Fraction(1)
        for p in (2, 3, 5):
            truncated *= sum(Fraction(1, p ** (2 * e)) for e in range(depth))
        brute = zetafock.smooth_sum_bruteforce(2, 5, depth)
        return truncated == brute, {"product": str(exact)}

    rec.timed("04-smooth", "finite Euler product equals the exact smooth-number sum", smooth)
    return rec.report


SUITES: Dict[str, Callable[[RunConfig], RunReport]] = {
    "moyal": suite_moyal,
    "prequant": suite_prequant,
    "fock": suite_fock,
    "numlab": suite_numlab,
    "kgeom": suite_kgeom,
    "zeta": suite_zeta,
}


def run_suite(name: str, config: RunConfig) -> List[RunReport]:
    """Run one suite (or ``all``); reports come back ordered by suite name."""
    if name == "all":
        return [SUITES[s](config) for s in SUITE_NAMES]
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}")
    return [SUITES[name](config)]


def render_figures(directory: str, config: RunConfig) -> List[str]:
    """Save Wigner-function heatmaps and a sphere-convergence plot as PNGs."""
    import os

    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    import numpy as np

    os.makedirs(directory, exist_ok=True)
    written = []
    hbar = float(config.hbar)
    xs = np.linspace(-4.0, 4.0, 81)
    for n in (0, 1):
        psi = numlab.hermite_wavefunction(n, hbar)
        F = numlab.wigner_grid(psi, xs, xs, hbar=hbar, order=config.wigner_order())
        fig, ax = plt.subplots(figsize=(5, 4))
        lim = float(np.max(np.abs(F)))
        im = ax.pcolormesh(xs, xs, F.T, cmap="RdBu_r", vmin=-lim, vmax=lim)
        ax.set_xlabel("x")
        ax.set_ylabel("p")
        ax.set_title(f"Wigner function, oscillator state n={n}")
        fig.colorbar(im, ax=ax)
        path = os.path.join(directory, f"wigner_n{n}.png")
        fig.savefig(path, dpi=120, bbox_inches="tight")
        plt.close(fig)
        written.append(path)

    fig, ax = plt.subplots(figsize=(5, 4))
    for N in range(1, 6):
        vals = numlab.sphere_residue_convergence(float(N), hbar, doublings=5)
        errs = [abs(v - N) + 1e-18 for v in vals]
        ax.semilogy([16 * 2**k for k in range(len(errs))], errs, marker="o", label=f"N={N}")
    ax.set_xlabel("grid resolution")
    ax.set_ylabel("|integral - N|")
    ax.set_title("Sphere residue integral convergence")
    ax.legend()
    path = os.path.join(directory, "sphere_convergence.png")
    fig.savefig(path, dpi=120, bbox_inches="tight")
    plt.close(fig)
    written.append(path)
    return written
