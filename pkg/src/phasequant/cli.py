"""Command-line front end.

Every symbolic subcommand parses text expressions into exact polynomials and
prints canonical JSON; grid-producing subcommands default to CSV.  Exit codes:
0 on success, 1 when a verification check fails, 2 on usage or parse errors.

Flags are overridden by environment variables PHASEQUANT_FORMAT,
PHASEQUANT_HBAR, PHASEQUANT_SEED, PHASEQUANT_TOLERANCE only when the flag is
absent; a key=value config file (--config or PHASEQUANT_CONFIG) sits below
both.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from fractions import Fraction
from typing import Dict, List, Optional

from . import fock, kgeom, moyal, numlab, prequant, zetafock
from .opalg import CanonicalOperator, weyl_map, wigner_map
from .parser import ParseError, parse_expression
from .poly import PhasePoly, VariableTable
from .report import RunConfig, SUITE_NAMES, render_figures, run_suite
from .scalars import HbarScalar, Qi

USAGE_ERROR = 2
CHECK_FAILURE = 1

ENV_PREFIX = "PHASEQUANT_"


def _read_config_file(path: str) -> Dict[str, str]:
    values = {}
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected key=value")
            key, _, value = line.partition("=")
            values[key.strip()] = value.strip()
    return values


class Settings:
    """Layered option lookup: CLI flag, then env var, then config file."""

    def __init__(self, args: argparse.Namespace):
        self.args = args
        path = getattr(args, "config", None) or os.environ.get(ENV_PREFIX + "CONFIG")
        self.file_values = _read_config_file(path) if path else {}

    def get(self, name: str, default):
        flag = getattr(self.args, name, None)
        if flag is not None:
            return flag
        env = os.environ.get(ENV_PREFIX + name.upper())
        if env is not None:
            return env
        if name in self.file_values:
            return self.file_values[name]
        return default

    def fmt(self, default="json") -> str:
        value = str(self.get("format", default))
        if value not in ("json", "csv"):
            raise ValueError(f"unknown format {value!r}")
        return value

    def hbar(self) -> Fraction:
        return Fraction(str(self.get("hbar", "1")))

    def seed(self) -> int:
        return int(self.get("seed", 0))

    def tolerance(self) -> float:
        return float(self.get("tolerance", 1e-6))

    def run_config(self) -> RunConfig:
        return RunConfig(
            hbar=self.hbar(),
            seed=self.seed(),
            tolerance=self.tolerance(),
            cutoff=int(self.get("cutoff", 10)),
            samples=int(self.get("samples", 20)),
            fast=bool(getattr(self.args, "fast", False)),
        )


def _table(args) -> VariableTable:
    dof = getattr(args, "dof", None) or 1
    if getattr(args, "chart", "real") == "complex":
        return VariableTable.complex_chart(dof)
    return VariableTable.canonical(dof)


def _context(args) -> moyal.StarContext:
    dof = getattr(args, "dof", None) or 1
    if getattr(args, "chart", "real") == "complex":
        return moyal.StarContext.complex_canonical(dof)
    return moyal.StarContext.canonical(dof)


def _emit_poly(poly: PhasePoly, settings: Settings):
    if settings.get("hbar", None) is not None:
        poly = poly.substitute_hbar(settings.hbar())
    if settings.fmt() == "csv":
        print("re,im,hbar,exps")
        for t in poly.to_json_terms():
            print(f"{t['re']},{t['im']},{t['hbar']},\"{t['exps']}\"")
    else:
        print(
            json.dumps(
                {"variables": list(poly.table.names), "terms": poly.to_json_terms()},
                indent=1,
            )
        )


def cmd_star(args, settings: Settings) -> int:
    table = _table(args)
    f = parse_expression(args.f, table)
    g = parse_expression(args.g, table)
    _emit_poly(moyal.star_product(f, g, _context(args)), settings)
    return 0


def cmd_moyal_bracket(args, settings: Settings) -> int:
    table = _table(args)
    f = parse_expression(args.f, table)
    g = parse_expression(args.g, table)
    _emit_poly(moyal.moyal_bracket(f, g, _context(args)), settings)
    return 0


def cmd_groenewold(args, settings: Settings) -> int:
    _emit_poly(moyal.groenewold_witness(), settings)
    return 0


def cmd_weyl(args, settings: Settings) -> int:
    table = VariableTable.canonical(args.dof or 1)
    f = parse_expression(args.f, table)
    print(weyl_map(f).to_json())
    return 0


def _poly_to_operator(f: PhasePoly) -> CanonicalOperator:
    """Read each monomial q^a p^b as the standard-ordered word qhat^a phat^b."""
    n = len(f.table) // 2
    op = CanonicalOperator.zero(n)
    for exps, coeff in f.terms.items():
        op = op + CanonicalOperator.monomial(exps[:n], exps[n:], coeff)
    return op


def cmd_wigner_map(args, settings: Settings) -> int:
    table = VariableTable.canonical(args.dof or 1)
    f = parse_expression(args.f, table)
    _emit_poly(wigner_map(_poly_to_operator(f)), settings)
    return 0


def cmd_prequant(args, settings: Settings) -> int:
    table = VariableTable.canonical(args.dof or 1)
    f = parse_expression(args.f, table)
    op = prequant.prequantize(f)
    print(json.dumps({"text": str(op), "operator": op.to_json_dict()}, indent=1))
    return 0


def cmd_circle(args, settings: Settings) -> int:
    lam = Fraction(args.lam)
    op = prequant.circle_prequantize(lam, args.window)
    spectrum = {str(n): str(op.eigenvalue(n)) for n in range(-args.window, args.window + 1)}
    print(json.dumps({"lambda": str(lam), "window": args.window, "spectrum": spectrum}, indent=1))
    return 0


def _print_identity_report(checks: List[Dict], settings: Settings) -> int:
    ok = all(c["status"] == "pass" for c in checks)
    if settings.fmt() == "csv":
        print("id,status,detail")
        for c in checks:
            print(f"{c['id']},{c['status']},\"{c['detail']}\"")
    else:
        print(json.dumps({"checks": checks, "all_pass": ok}, indent=1))
    return 0 if ok else CHECK_FAILURE


def cmd_fock(args, settings: Settings) -> int:
    hbar = settings.hbar()
    basis = fock.BargmannBasis(args.modes, args.cutoff)
    ann, cre = fock.ladder_matrices(basis, hbar)
    interior = basis.interior_indices()
    checks = []
    hs = HbarScalar.of(Qi(hbar))
    for i in range(args.modes):
        for j in range(args.modes):
            comm = (ann[i] * cre[j] - cre[j] * ann[i]).restrict(interior)
            target = (
                fock.ExactMatrix.identity(len(basis)).restrict(interior) * hs
                if i == j
                else fock.ExactMatrix.zero(len(interior), len(interior))
            )
            checks.append(
                {
                    "id": f"ccr-{i}{j}",
                    "status": "pass" if comm == target else "fail",
                    "detail": f"[a_{i}, a*_{j}] = {hbar if i == j else 0} on the interior block",
                }
            )
        defect = fock.adjoint_check(basis, i, hbar)
        checks.append(
            {
                "id": f"adjoint-{i}",
                "status": "pass" if defect.is_zero() else "fail",
                "detail": "a* is the Gram adjoint of a",
            }
        )
    gram = fock.gram_matrix(basis, hbar)
    checks.append(
        {
            "id": "gram-diagonal",
            "status": "pass" if gram.is_diagonal() else "fail",
            "detail": "monomial basis is orthogonal",
        }
    )
    boundary = fock.ccr_boundary_defect(basis, 0, hbar)
    checks.append(
        {
            "id": "boundary",
            "status": "pass" if not boundary.is_zero() else "fail",
            "detail": f"truncation defect of [a, a*] is confined to {len(boundary.entries)} boundary entries",
        }
    )
    return _print_identity_report(checks, settings)


def cmd_su2(args, settings: Settings) -> int:
    hbar = settings.hbar()
    N = args.N
    basis = fock.BargmannBasis(2, N + 2)
    ops = fock.schwinger_su2(basis, hbar)
    interior = basis.interior_indices()
    ih = HbarScalar.of(Qi(0, hbar))
    checks = []
    for a, b, c in (("M1", "M2", "M3"), ("M2", "M3", "M1"), ("M3", "M1", "M2")):
        comm = (ops[a] * ops[b] - ops[b] * ops[a]).restrict(interior)
        ok = comm == (ops[c] * ih).restrict(interior)
        checks.append(
            {"id": f"comm-{a}{b}", "status": "pass" if ok else "fail", "detail": f"[{a}, {b}] = i*hbar*{c}"}
        )
    idxs = fock.degree_indices(basis, N)
    j = Fraction(N, 2)
    target = fock.ExactMatrix.identity(len(basis)).restrict(idxs) * HbarScalar.of(
        Qi(hbar**2 * j * (j + 1))
    )
    ok = ops["M2tot"].restrict(idxs) == target
    checks.append(
        {"id": "casimir", "status": "pass" if ok else "fail", "detail": f"M^2 = j(j+1)*hbar^2 on the spin-{j} block"}
    )
    m3 = sorted(str(v) for v in ops["M3"].restrict(idxs).diagonal())
    want = sorted(str(HbarScalar.of(Qi(hbar * (Fraction(k) - j)))) for k in range(N + 1))
    checks.append(
        {"id": "m3-spectrum", "status": "pass" if m3 == want else "fail", "detail": "M3 spectrum {-j..j}*hbar"}
    )
    return _print_identity_report(checks, settings)


def cmd_car(args, settings: Settings) -> int:
    alg = fock.car_matrices(args.modes)
    ok = fock.car_identities_hold(alg)
    checks = [
        {
            "id": "car",
            "status": "pass" if ok else "fail",
            "detail": f"anticommutation relations for {args.modes} modes (dim {alg.dim})",
        }
    ]
    return _print_identity_report(checks, settings)


def _parse_grid(text: str):
    def axis(spec):
        lo, hi, num = spec.split(":")
        return float(lo), float(hi), int(num)

    parts = text.split(",")
    if len(parts) == 1:
        parts = parts * 2
    if len(parts) != 2:
        raise ValueError("grid must be 'lo:hi:n' or 'lo:hi:n,lo:hi:n'")
    return axis(parts[0]), axis(parts[1])


def cmd_wigner(args, settings: Settings) -> int:
    import numpy as np

    hbar = float(settings.hbar())
    psi = numlab.hermite_wavefunction(args.state, hbar)
    (x0, x1, nx), (p0, p1, np_) = _parse_grid(args.grid)
    xs = np.linspace(x0, x1, nx)
    ps = np.linspace(p0, p1, np_)
    F = numlab.wigner_grid(psi, xs, ps, hbar=hbar)
    if settings.fmt(default="csv") == "csv":
        print("x,p,F")
        for i, x in enumerate(xs):
            for k, p in enumerate(ps):
                print(f"{float(x)!r},{float(p)!r},{float(F[i, k])!r}")
    else:
        print(
            json.dumps(
                {"x": xs.tolist(), "p": ps.tolist(), "F": F.tolist(), "hbar": hbar},
                indent=1,
            )
        )
    if args.figure:
        import matplotlib

        matplotlib.use("Agg")
        import matplotlib.pyplot as plt

        fig, ax = plt.subplots(figsize=(5, 4))
        lim = float(np.max(np.abs(F)))
        im = ax.pcolormesh(xs, ps, F.T, cmap="RdBu_r", vmin=-lim, vmax=lim)
        ax.set_xlabel("x")
        ax.set_ylabel("p")
        ax.set_title(f"Wigner function, n={args.state}")
        fig.colorbar(im, ax=ax)
        fig.savefig(args.figure, dpi=120, bbox_inches="tight")
        plt.close(fig)
    return 0


def cmd_stora(args, settings: Settings) -> int:
    import numpy as np

    if args.theta is not None:
        state = numlab.bloch_state(args.theta, args.phi)
    else:
        state = np.array([1.0, 1j]) / math.sqrt(2.0)
    rho = np.outer(state, state.conj())
    scan = numlab.stora_negativity_scan(rho, args.resolution, args.resolution)
    print(
        json.dumps(
            {
                "min_value": scan.min_value,
                "theta": scan.theta,
                "phi": scan.phi,
                "row_sum_defect": scan.row_sum_defect,
                "negative": scan.min_value < 0,
            },
            indent=1,
        )
    )
    return 0


def cmd_sphere(args, settings: Settings) -> int:
    hbar = float(settings.hbar())
    value = numlab.sphere_residue_integral(args.N, hbar, args.resolution, args.resolution)
    halved = numlab.sphere_residue_integral(
        args.N, hbar, args.resolution, args.resolution, halved=True
    )
    print(
        json.dumps(
            {
                "N": args.N,
                "normalized_integral": value,
                "halved_normalization": halved,
                "convergence": numlab.sphere_residue_convergence(args.N, hbar),
            },
            indent=1,
        )
    )
    ok = abs(value - args.N) < settings.tolerance()
    return 0 if ok else CHECK_FAILURE


def cmd_loop(args, settings: Settings) -> int:
    with open(args.path, "r", encoding="utf-8") as fh:
        vertices = json.load(fh)
    value = numlab.loop_integral_eta1(vertices)
    print(
        json.dumps(
            {
                "integral": value,
                "winding": round(value / (2.0 * math.pi)),
                "two_pi_multiple": value / (2.0 * math.pi),
            },
            indent=1,
        )
    )
    return 0


def cmd_kgeom(args, settings: Settings) -> int:
    checks = kgeom.run_all_checks(seed=settings.seed())
    print(json.dumps({"checks": checks, "all_pass": all(checks.values())}, indent=1))
    return 0 if all(checks.values()) else CHECK_FAILURE


def cmd_zeta(args, settings: Settings) -> int:
    partial, (lo, hi) = zetafock.partition_function(args.beta, args.cutoff)
    product = zetafock.euler_product(args.beta, args.prime_cutoff)
    print(
        json.dumps(
            {
                "beta": args.beta,
                "cutoff": args.cutoff,
                "partial_sum": partial,
                "bracket": [partial + lo, partial + hi],
                "euler_product": product,
                "euler_tail_factor": zetafock.euler_product_tail_factor(
                    args.beta, args.prime_cutoff
                ),
            },
            indent=1,
        )
    )
    return 0


def cmd_run(args, settings: Settings) -> int:
    config = settings.run_config()
    try:
        reports = run_suite(args.suite, config)
    except KeyError as exc:
        print(str(exc), file=sys.stderr)
        return USAGE_ERROR
    if settings.fmt() == "csv":
        for report in reports:
            for line in report.to_csv_lines():
                print(line)
    else:
        for report in reports:
            print(report.to_json(timings=args.timings))
    if args.figures:
        for path in render_figures(args.figures, config):
            print(f"figure: {path}", file=sys.stderr)
    return 0 if all(r.all_pass() for r in reports) else CHECK_FAILURE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="phasequant",
        description="Exact symbolic and numeric quantization workbench.",
    )
    parser.add_argument("--config", help="key=value config file")
    parser.add_argument("--format", choices=("json", "csv"))
    parser.add_argument("--hbar", help="rational value substituted for hbar")
    parser.add_argument("--seed", type=int, help="seed for randomized property checks")
    parser.add_argument("--tolerance", type=float, help="numeric tolerance")
    sub = parser.add_subparsers(dest="command", required=True)

    def expr_cmd(name, fn, nargs=2, help=""):
        p = sub.add_parser(name, help=help)
        if nargs >= 1:
            p.add_argument("f", help="expression")
        if nargs >= 2:
            p.add_argument("g", help="expression")
        p.add_argument("--dof", type=int, default=None, help="degrees of freedom")
        p.add_argument("--chart", choices=("real", "complex"), default="real")
        p.set_defaults(fn=fn)
        return p

    expr_cmd("star", cmd_star, 2, "star product of two expressions")
    expr_cmd("moyal-bracket", cmd_moyal_bracket, 2, "Moyal bracket of two expressions")
    g = sub.add_parser("groenewold", help="the cubic obstruction witness")
    g.set_defaults(fn=cmd_groenewold)
    expr_cmd("weyl", cmd_weyl, 1, "symmetric-ordering operator of an expression")
    expr_cmd("wigner-map", cmd_wigner_map, 1, "symbol of a standard-ordered operator")
    expr_cmd("prequant", cmd_prequant, 1, "prequantization operator of an expression")

    p = sub.add_parser("circle", help="prequantization spectrum on circle modes")
    p.add_argument("--lam", default="0", help="holonomy parameter in [0, 1)")
    p.add_argument("--window", type=int, default=10)
    p.set_defaults(fn=cmd_circle)

    p = sub.add_parser("fock", help="ladder/Gram identity report")
    p.add_argument("--modes", type=int, default=1)
    p.add_argument("--cutoff", type=int, default=8)
    p.set_defaults(fn=cmd_fock)

    p = sub.add_parser("su2", help="Schwinger spin realization report")
    p.add_argument("--N", type=int, default=4, help="total degree (N = 2j)")
    p.set_defaults(fn=cmd_su2)

    p = sub.add_parser("car", help="fermionic anticommutation report")
    p.add_argument("--modes", type=int, default=3)
    p.set_defaults(fn=cmd_car)

    p = sub.add_parser("wigner", help="Wigner function on a grid (CSV)")
    p.add_argument("--state", type=int, default=0, help="oscillator level n")
    p.add_argument("--grid", default="-4:4:41", help="lo:hi:n[,lo:hi:n]")
    p.add_argument("--figure", help="also save a heatmap PNG here")
    p.set_defaults(fn=cmd_wigner)

    p = sub.add_parser("stora", help="spin quasi-probability negativity scan")
    p.add_argument("--theta", type=float, default=None)
    p.add_argument("--phi", type=float, default=0.0)
    p.add_argument("--resolution", type=int, default=60)
    p.set_defaults(fn=cmd_stora)

    p = sub.add_parser("sphere", help="residue integral over the level sphere")
    p.add_argument("--N", type=float, default=1.0)
    p.add_argument("--resolution", type=int, default=64)
    p.set_defaults(fn=cmd_sphere)

    p = sub.add_parser("loop", help="loop integral of the angle form")
    p.add_argument("--path", required=True, help="JSON file with [[x, y], ...]")
    p.set_defaults(fn=cmd_loop)

    p = sub.add_parser("kgeom", help="quaternionic identity suite")
    p.set_defaults(fn=cmd_kgeom)

    p = sub.add_parser("zeta", help="prime Fock partition function")
    p.add_argument("--beta", type=float, default=2.0)
    p.add_argument("--cutoff", type=int, default=10**6)
    p.add_argument("--prime-cutoff", type=int, default=10**4)
    p.set_defaults(fn=cmd_zeta)

    p = sub.add_parser("run", help="run a verification suite")
    p.add_argument("suite", choices=("all",) + SUITE_NAMES)
    p.add_argument("--fast", action="store_true", help="reduced resolutions")
    p.add_argument("--timings", action="store_true", help="include per-check runtimes")
    p.add_argument("--figures", help="directory for rendered figures")
    p.add_argument("--cutoff", type=int, default=None)
    p.add_argument("--samples", type=int, default=None)
    p.set_defaults(fn=cmd_run)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        settings = Settings(args)
        return args.fn(args, settings)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except (ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
