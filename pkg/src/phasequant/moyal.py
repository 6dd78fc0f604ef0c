"""Groenewold-Moyal star product on polynomials.

The star product is the terminating differential series
f*g = fg + sum_n hbar^n B_n(f, g) with
B_n(f, g) = (1/n!) (i/2)^n P^{j1 k1}...P^{jn kn} d_{j1..jn}f d_{k1..kn}g,
taken for a constant Poisson bivector P.  On polynomials the series stops
at n = min(deg f, deg g), so everything stays exact.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Sequence

from .opalg import CanonicalOperator, weyl_map
from .poly import PhasePoly, PoissonStructure, TableMismatchError, poisson_bracket
from .scalars import HbarScalar, Qi, QI_I


class StarContext:
    """Bundles the Poisson bivector with the grading convention.

    Only the physics convention (expansion parameter i*hbar, so that
    q*p - p*q = i*hbar) is implemented; the flag records the choice.
    """

    __slots__ = ("structure", "convention")

    def __init__(self, structure: PoissonStructure, convention: str = "physics"):
        if convention != "physics":
            raise ValueError("only the physics grading convention is supported")
        object.__setattr__(self, "structure", structure)
        object.__setattr__(self, "convention", convention)

    def __setattr__(self, name, value):
        raise AttributeError("StarContext is immutable")

    @staticmethod
    def canonical(n: int = 1) -> "StarContext":
        return StarContext(PoissonStructure.canonical(n))

    @staticmethod
    def complex_canonical(n: int = 1) -> "StarContext":
        return StarContext(PoissonStructure.complex_canonical(n))


def _bidiff_layers(f: PhasePoly, g: PhasePoly, P: PoissonStructure, max_n: int):
    """Yield, for n = 1.., the raw sums sum P^{jk} d_j(...) d_k(...) iterated n times.

    Each layer is a list of (f_part, g_part, Qi coefficient) triples.
    """
    names = P.table.names
    layer = [(f, g, Qi(1))]
    for _ in range(max_n):
        nxt = []
        for fp, gp, c in layer:
            for j, row in enumerate(P.matrix):
                dfp = fp.derivative(names[j])
                if dfp.is_zero():
                    continue
                for k, pjk in enumerate(row):
                    if pjk.is_zero():
                        continue
                    dgp = gp.derivative(names[k])
                    if dgp.is_zero():
                        continue
                    nxt.append((dfp, dgp, c * pjk))
        layer = nxt
        yield layer
        if not layer:
            return


def star_bidifferential(
    f: PhasePoly, g: PhasePoly, ctx: StarContext, n: int
) -> PhasePoly:
    """B_n(f, g): the hbar^n coefficient of the Moyal series (without hbar)."""
    P = ctx.structure
    if f.table != P.table or g.table != P.table:
        raise TableMismatchError("operands and context tables differ")
    if n == 0:
        return f * g
    layers = list(_bidiff_layers(f, g, P, n))
    if len(layers) < n:
        return PhasePoly.zero(P.table)
    half_i = Qi(0, Fraction(1, 2))
    pref = Qi(1)
    for _ in range(n):
        pref = pref * half_i
    from math import factorial

    pref = pref * Qi(Fraction(1, factorial(n)))
    out = PhasePoly.zero(P.table)
    for fp, gp, c in layers[n - 1]:
        out = out + fp * gp * (c * pref)
    return out


def star_product(f: PhasePoly, g: PhasePoly, ctx: StarContext) -> PhasePoly:
    """f * g, exact; the series terminates at min(deg f, deg g)."""
    P = ctx.structure
    if f.table != P.table or g.table != P.table:
        raise TableMismatchError("operands and context tables differ")
    result = f * g
    nmax = min(max(f.total_degree(), 0), max(g.total_degree(), 0))
    for n, layer in enumerate(_bidiff_layers(f, g, P, nmax), start=1):
        if not layer:
            break
        bn = star_bidifferential(f, g, ctx, n)
        result = result + bn * HbarScalar.of(1, n)
    return result


def moyal_bracket(f: PhasePoly, g: PhasePoly, ctx: StarContext) -> PhasePoly:
    """(f*g - g*f) / (i*hbar); the hbar^0 part is the Poisson bracket."""
    diff = star_product(f, g, ctx) - star_product(g, f, ctx)
    # divide exactly by i*hbar
    out = {}
    for exps, c in diff.terms.items():
        shifted = c.shift_hbar(-1)
        out[exps] = shifted * Qi(0, -1)  # 1/i = -i
    return PhasePoly(ctx.structure.table, out)


def groenewold_witness(ctx: StarContext | None = None) -> PhasePoly:
    """moyal_bracket(q^3, p^3) - {q^3, p^3}: the obstruction, of pure order hbar^2."""
    if ctx is None:
        ctx = StarContext.canonical(1)
    table = ctx.structure.table
    if len(table) != 2:
        raise ValueError("the witness is stated for one degree of freedom")
    q = PhasePoly.variable(table, table.names[0])
    p = PhasePoly.variable(table, table.names[1])
    f, g = q**3, p**3
    return moyal_bracket(f, g, ctx) - poisson_bracket(f, g, ctx.structure)


def hochschild_cocycle_check(
    f: PhasePoly, g: PhasePoly, h: PhasePoly, ctx: StarContext | None = None
) -> PhasePoly:
    """The Hochschild 2-cocycle defect of B1(f, g) = (i/2){f, g}.

    Returns f*B1(g,h) - B1(fg,h) + B1(f,gh) - B1(f,g)*h; zero for all inputs.
    """
    if ctx is None:
        ctx = StarContext.canonical(1)
    P = ctx.structure
    half_i = Qi(0, Fraction(1, 2))

    def b1(a, b):
        return poisson_bracket(a, b, P) * half_i

    return f * b1(g, h) - b1(f * g, h) + b1(f, g * h) - b1(f, g) * h


def weyl_homomorphism_check(
    f: PhasePoly, g: PhasePoly, ctx: StarContext | None = None
) -> CanonicalOperator:
    """Defect W(f*g) - W(f)W(g); exactly zero for all polynomial f, g."""
    if ctx is None:
        n = len(f.table) // 2
        ctx = StarContext.canonical(n)
    return weyl_map(star_product(f, g, ctx)) - weyl_map(f) * weyl_map(g)


def gauge_equivalence_check(
    gauge_ops: Sequence[Callable[[PhasePoly], PhasePoly]],
    b_original: Callable[[PhasePoly, PhasePoly, int], PhasePoly],
    b_transformed: Callable[[PhasePoly, PhasePoly, int], PhasePoly],
    f: PhasePoly,
    g: PhasePoly,
    order: int,
) -> list[PhasePoly]:
    """Order-by-order defects of the gauge-equivalence relation.

    ``gauge_ops[k]`` is G_k (G_0 must be the identity); ``b_original`` and
    ``b_transformed`` give B_l(f, g) and B'_l(f, g).  For each n <= order the
    defect  sum_{j+k+l=n} B_l(G_j f, G_k g) - sum_{l+m=n} G_m(B'_l(f, g))
    is returned; all zero iff the gauge transformation intertwines the two
    star products through the given order.
    """
    defects = []
    for n in range(1, order + 1):
        lhs = PhasePoly.zero(f.table)
        for j in range(0, n + 1):
            if j >= len(gauge_ops):
                continue
            for k in range(0, n + 1 - j):
                if k >= len(gauge_ops):
                    continue
                l = n - j - k
                lhs = lhs + b_original(gauge_ops[j](f), gauge_ops[k](g), l)
        rhs = PhasePoly.zero(f.table)
        for m in range(0, n + 1):
            if m >= len(gauge_ops):
                continue
            rhs = rhs + gauge_ops[m](b_transformed(f, g, n - m))
        defects.append(lhs - rhs)
    return defects
