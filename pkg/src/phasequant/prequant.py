"""Prequantization: first-order differential operators on phase space.

P(f) = i*hbar*X_f + f + theta(X_f) with theta the contact form (p dq on the
canonical chart).  The bracket-to-commutator law, hermiticity, the
curvature of the prequantum connection, the kinetic-energy defect, the
cylinder lambda-family and the Bargmann polarization commutator all live
here.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Tuple

from .poly import (
    PhasePoly,
    PoissonStructure,
    TableMismatchError,
    VariableTable,
    poisson_bracket,
)
from .scalars import HbarScalar, Qi, QI_I


class PhaseDiffOp:
    """First-order operator  sum_i A_i d/dx_i + B  with polynomial coefficients."""

    __slots__ = ("table", "first", "zeroth")

    def __init__(self, table: VariableTable, first=None, zeroth: PhasePoly | None = None):
        coeffs = {}
        if first:
            for name, poly in first.items():
                table.index(name)
                if not isinstance(poly, PhasePoly) or poly.table != table:
                    raise TableMismatchError("coefficient table mismatch")
                if not poly.is_zero():
                    coeffs[name] = poly
        if zeroth is None:
            zeroth = PhasePoly.zero(table)
        elif zeroth.table != table:
            raise TableMismatchError("zeroth-order table mismatch")
        object.__setattr__(self, "table", table)
        object.__setattr__(self, "first", coeffs)
        object.__setattr__(self, "zeroth", zeroth)

    def __setattr__(self, name, value):
        raise AttributeError("PhaseDiffOp is immutable")

    @staticmethod
    def zero(table: VariableTable) -> "PhaseDiffOp":
        return PhaseDiffOp(table)

    @staticmethod
    def identity(table: VariableTable) -> "PhaseDiffOp":
        return PhaseDiffOp(table, zeroth=PhasePoly.constant(table, 1))

    def coefficient(self, name: str) -> PhasePoly:
        self.table.index(name)
        return self.first.get(name, PhasePoly.zero(self.table))

    def is_zero(self) -> bool:
        return not self.first and self.zeroth.is_zero()

    def is_vector_field(self) -> bool:
        return self.zeroth.is_zero()

    def __eq__(self, other):
        if not isinstance(other, PhaseDiffOp):
            return NotImplemented
        return (
            self.table == other.table
            and self.first == other.first
            and self.zeroth == other.zeroth
        )

    def __add__(self, other: "PhaseDiffOp"):
        if self.table != other.table:
            raise TableMismatchError("operand tables differ")
        first = dict(self.first)
        for n, c in other.first.items():
            first[n] = first.get(n, PhasePoly.zero(self.table)) + c
        return PhaseDiffOp(self.table, first, self.zeroth + other.zeroth)

    def __neg__(self):
        return PhaseDiffOp(
            self.table, {n: -c for n, c in self.first.items()}, -self.zeroth
        )

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "PhaseDiffOp":
        c = HbarScalar._coerce(c)
        return PhaseDiffOp(
            self.table,
            {n: p * c for n, p in self.first.items()},
            self.zeroth * c,
        )

    def apply(self, f: PhasePoly) -> PhasePoly:
        """Apply to a polynomial."""
        if f.table != self.table:
            raise TableMismatchError("argument table differs")
        out = self.zeroth * f
        for name, coeff in self.first.items():
            out = out + coeff * f.derivative(name)
        return out

    def __str__(self):
        parts = []
        for name in self.table.names:
            if name in self.first:
                parts.append(f"({self.first[name]})*d/d{name}")
        if not self.zeroth.is_zero() or not parts:
            parts.append(f"({self.zeroth})")
        return " + ".join(parts)

    __repr__ = __str__

    def to_json_dict(self):
        return {
            "variables": list(self.table.names),
            "first_order": {
                n: self.first[n].to_json_terms() for n in self.table.names if n in self.first
            },
            "zeroth_order": self.zeroth.to_json_terms(),
        }


class ContactForm:
    """theta = sum_i theta_i dx^i with polynomial coefficients."""

    __slots__ = ("table", "coeffs")

    def __init__(self, table: VariableTable, coeffs: Dict[str, PhasePoly]):
        clean = {}
        for name, poly in coeffs.items():
            table.index(name)
            if poly.table != table:
                raise TableMismatchError("coefficient table mismatch")
            if not poly.is_zero():
                clean[name] = poly
        object.__setattr__(self, "table", table)
        object.__setattr__(self, "coeffs", clean)

    def __setattr__(self, name, value):
        raise AttributeError("ContactForm is immutable")

    @staticmethod
    def canonical(n: int = 1) -> "ContactForm":
        """theta = p dq on the canonical chart."""
        table = VariableTable.canonical(n)
        if n == 1:
            return ContactForm(table, {"q": PhasePoly.variable(table, "p")})
        return ContactForm(
            table,
            {f"q{i}": PhasePoly.variable(table, f"p{i}") for i in range(1, n + 1)},
        )

    @staticmethod
    def bargmann(n: int = 1) -> "ContactForm":
        """theta = (i/2)(z dzb - zb dz) on the complex chart."""
        table = VariableTable.complex_chart(n)
        half_i = Qi(0, Fraction(1, 2))
        coeffs = {}
        if n == 1:
            pairs = [("z", "zb")]
        else:
            pairs = [(f"z{i}", f"zb{i}") for i in range(1, n + 1)]
        for zn, zbn in pairs:
            z = PhasePoly.variable(table, zn)
            zb = PhasePoly.variable(table, zbn)
            coeffs[zbn] = z * half_i
            coeffs[zn] = zb * (-half_i)
        return ContactForm(table, coeffs)

    def pair(self, X: PhaseDiffOp) -> PhasePoly:
        """theta(X) for a vector field X."""
        if X.table != self.table:
            raise TableMismatchError("vector field table differs")
        out = PhasePoly.zero(self.table)
        for name, theta_i in self.coeffs.items():
            out = out + theta_i * X.coefficient(name)
        return out

    def exterior_derivative_pair(self, X: PhaseDiffOp, Y: PhaseDiffOp) -> PhasePoly:
        """omega(X, Y) for omega = d theta, evaluated on vector fields.

        d theta = sum_{i,j} d_j(theta_i) dx^j wedge dx^i.
        """
        out = PhasePoly.zero(self.table)
        for i_name, theta_i in self.coeffs.items():
            for j_name in self.table.names:
                dji = theta_i.derivative(j_name)
                if dji.is_zero():
                    continue
                xj, yi = X.coefficient(j_name), Y.coefficient(i_name)
                yj, xi = Y.coefficient(j_name), X.coefficient(i_name)
                out = out + dji * (xj * yi - yj * xi)
        return out


def hamiltonian_vector_field(f: PhasePoly, P: PoissonStructure) -> PhaseDiffOp:
    """X_f with X_f g = {f, g}: X_f = sum_j (sum_i P^{ij} d_i f) d_j."""
    if f.table != P.table:
        raise TableMismatchError("polynomial and structure tables differ")
    names = P.table.names
    dfs = [f.derivative(n) for n in names]
    first = {}
    for j, name in enumerate(names):
        acc = PhasePoly.zero(P.table)
        for i in range(len(names)):
            pij = P.matrix[i][j]
            if pij.is_zero() or dfs[i].is_zero():
                continue
            acc = acc + dfs[i] * pij
        if not acc.is_zero():
            first[name] = acc
    return PhaseDiffOp(P.table, first)


def prequantize(
    f: PhasePoly,
    theta: ContactForm | None = None,
    P: PoissonStructure | None = None,
) -> PhaseDiffOp:
    """P(f) = i*hbar*X_f + f + theta(X_f)."""
    if theta is None:
        theta = ContactForm.canonical(len(f.table) // 2)
    if P is None:
        P = PoissonStructure.canonical(len(f.table) // 2)
    xf = hamiltonian_vector_field(f, P)
    i_hbar = HbarScalar.of(QI_I, 1)
    return xf.scale(i_hbar) + PhaseDiffOp(f.table, zeroth=f + theta.pair(xf))


def diffop_commutator(A: PhaseDiffOp, B: PhaseDiffOp) -> PhaseDiffOp:
    """[A, B] for first-order A, B; the result is again first order."""
    if A.table != B.table:
        raise TableMismatchError("operand tables differ")
    table = A.table
    first = {}
    for i_name in table.names:
        acc = PhasePoly.zero(table)
        for j_name in table.names:
            aj, bj = A.coefficient(j_name), B.coefficient(j_name)
            acc = acc + aj * B.coefficient(i_name).derivative(j_name)
            acc = acc - bj * A.coefficient(i_name).derivative(j_name)
        if not acc.is_zero():
            first[i_name] = acc
    zero = PhasePoly.zero(table)
    for j_name in table.names:
        zero = zero + A.coefficient(j_name) * B.zeroth.derivative(j_name)
        zero = zero - B.coefficient(j_name) * A.zeroth.derivative(j_name)
    return PhaseDiffOp(table, first, zero)


def formal_adjoint(A: PhaseDiffOp) -> PhaseDiffOp:
    """Adjoint w.r.t. the Liouville volume: (A_i d_i + B)* = -d_i conj(A_i) + conj(B)."""
    table = A.table
    first = {}
    zero = A.zeroth.conjugate()
    for name in table.names:
        ai = A.coefficient(name)
        if ai.is_zero():
            continue
        cai = ai.conjugate()
        first[name] = -cai
        zero = zero - cai.derivative(name)
    return PhaseDiffOp(table, first, zero)


class SecondOrderDiffOp:
    """Order <= 2 carrier, produced only by compositions of first-order operators.

    Coefficients are indexed by sorted variable-name tuples of length 0..2.
    """

    __slots__ = ("table", "coeffs")

    def __init__(self, table: VariableTable, coeffs=None):
        clean: Dict[Tuple[str, ...], PhasePoly] = {}
        if coeffs:
            for key, poly in coeffs.items():
                key = tuple(sorted(key))
                if len(key) > 2:
                    raise ValueError("order > 2 not supported")
                for n in key:
                    table.index(n)
                if poly.table != table:
                    raise TableMismatchError("coefficient table mismatch")
                if not poly.is_zero():
                    prev = clean.get(key)
                    poly = poly if prev is None else prev + poly
                    if poly.is_zero():
                        clean.pop(key, None)
                    else:
                        clean[key] = poly
        object.__setattr__(self, "table", table)
        object.__setattr__(self, "coeffs", clean)

    def __setattr__(self, name, value):
        raise AttributeError("SecondOrderDiffOp is immutable")

    @staticmethod
    def from_first_order(A: PhaseDiffOp) -> "SecondOrderDiffOp":
        coeffs = {(): A.zeroth}
        for n, c in A.first.items():
            coeffs[(n,)] = c
        return SecondOrderDiffOp(A.table, coeffs)

    @staticmethod
    def compose_first_order(A: PhaseDiffOp, B: PhaseDiffOp) -> "SecondOrderDiffOp":
        """A o B as an order-2 operator."""
        if A.table != B.table:
            raise TableMismatchError("operand tables differ")
        table = A.table
        coeffs: Dict[Tuple[str, ...], PhasePoly] = {}

        def add(key, poly):
            key = tuple(sorted(key))
            if poly.is_zero():
                return
            coeffs[key] = coeffs.get(key, PhasePoly.zero(table)) + poly

        add((), A.zeroth * B.zeroth)
        for j, bj in B.first.items():
            add((j,), A.zeroth * bj)
        for i, ai in A.first.items():
            add((), ai * B.zeroth.derivative(i))
            add((i,), ai * B.zeroth)
            for j, bj in B.first.items():
                add((j,), ai * bj.derivative(i))
                add((i, j), ai * bj)
        return SecondOrderDiffOp(table, coeffs)

    def __add__(self, other):
        if isinstance(other, PhaseDiffOp):
            other = SecondOrderDiffOp.from_first_order(other)
        if self.table != other.table:
            raise TableMismatchError("operand tables differ")
        coeffs = dict(self.coeffs)
        for k, c in other.coeffs.items():
            coeffs[k] = coeffs.get(k, PhasePoly.zero(self.table)) + c
        return SecondOrderDiffOp(self.table, coeffs)

    def __neg__(self):
        return SecondOrderDiffOp(
            self.table, {k: -c for k, c in self.coeffs.items()}
        )

    def __sub__(self, other):
        if isinstance(other, PhaseDiffOp):
            other = SecondOrderDiffOp.from_first_order(other)
        return self + (-other)

    def scale(self, c) -> "SecondOrderDiffOp":
        c = HbarScalar._coerce(c)
        return SecondOrderDiffOp(
            self.table, {k: p * c for k, p in self.coeffs.items()}
        )

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        if not isinstance(other, SecondOrderDiffOp):
            return NotImplemented
        return self.table == other.table and self.coeffs == other.coeffs

    def apply(self, f: PhasePoly) -> PhasePoly:
        out = PhasePoly.zero(self.table)
        for key, coeff in self.coeffs.items():
            d = f
            for n in key:
                d = d.derivative(n)
            out = out + coeff * d
        return out

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for key in sorted(self.coeffs):
            ds = "".join(f"*d/d{n}" for n in key)
            parts.append(f"({self.coeffs[key]}){ds}")
        return " + ".join(parts)

    __repr__ = __str__


def prequant_defect_kinetic(mass: Fraction | int = 1) -> SecondOrderDiffOp:
    """P(p^2/2m) - (1/2m) P(p) o P(p) for one degree of freedom; nonzero."""
    mass = Fraction(mass)
    table = VariableTable.canonical(1)
    p = PhasePoly.variable(table, "p")
    h0 = p * p * Qi(Fraction(1, 2) / mass)
    lhs = SecondOrderDiffOp.from_first_order(prequantize(h0))
    pp = prequantize(p)
    rhs = SecondOrderDiffOp.compose_first_order(pp, pp).scale(
        Qi(Fraction(1, 2) / mass)
    )
    return lhs - rhs


def connection_curvature(
    X: PhaseDiffOp, Y: PhaseDiffOp, theta: ContactForm
) -> PhasePoly:
    """R(X, Y) = i([D_X, D_Y] - D_[X,Y]) for D_X = X - (i/hbar) theta(X).

    Expanded: (1/hbar)(X theta(Y) - Y theta(X) - theta([X, Y])); equals
    omega(X, Y)/hbar for omega = d theta.
    """
    if not (X.is_vector_field() and Y.is_vector_field()):
        raise ValueError("curvature arguments must be pure vector fields")
    inner = (
        X.apply(theta.pair(Y))
        - Y.apply(theta.pair(X))
        - theta.pair(diffop_commutator(X, Y))
    )
    out = {}
    for exps, c in inner.terms.items():
        out[exps] = c.shift_hbar(-1)
    return PhasePoly(X.table, out)


class CircleModeOp:
    """Banded operator on Fourier modes e^{in*phi}, n in [-K, K]."""

    __slots__ = ("window", "bands")

    def __init__(self, window: int, bands: Dict[int, Dict[int, HbarScalar]]):
        if window < 1:
            raise ValueError("mode window must be >= 1")
        clean: Dict[int, Dict[int, HbarScalar]] = {}
        for shift, diag in bands.items():
            shift = int(shift)
            if abs(shift) > 2 * window:
                raise ValueError("band outside the mode window")
            d = {}
            for n, c in diag.items():
                n = int(n)
                if abs(n) > window or abs(n + shift) > window:
                    raise ValueError("entry outside the mode window")
                c = HbarScalar._coerce(c)
                if not c.is_zero():
                    d[n] = c
            if d:
                clean[shift] = d
        object.__setattr__(self, "window", window)
        object.__setattr__(self, "bands", clean)

    def __setattr__(self, name, value):
        raise AttributeError("CircleModeOp is immutable")

    def eigenvalue(self, n: int) -> HbarScalar:
        """Diagonal entry on mode n (valid for diagonal operators)."""
        if abs(n) > self.window:
            raise ValueError("mode outside the window")
        if any(shift != 0 for shift in self.bands):
            raise ValueError("operator is not diagonal")
        return self.bands.get(0, {}).get(n, HbarScalar())

    def spectrum(self):
        """Sorted list of (mode, eigenvalue) pairs for a diagonal operator."""
        return [(n, self.eigenvalue(n)) for n in range(-self.window, self.window + 1)]


def circle_prequantize(lam: Fraction | int, window: int) -> CircleModeOp:
    """P_lambda(p) = hbar*lambda - i*hbar*d/dphi: eigenvalue hbar*(n + lambda) on mode n."""
    lam = Fraction(lam)
    if not 0 <= lam < 1:
        raise ValueError("lambda must lie in [0, 1)")
    if window < 1:
        raise ValueError("mode window must be >= 1")
    diag = {
        n: HbarScalar.of(Qi(n + lam), 1) for n in range(-window, window + 1)
    }
    return CircleModeOp(window, {0: diag})


def bargmann_annihilator() -> PhaseDiffOp:
    """a = hbar d/dz + zb/2 on the one-mode complex chart."""
    table = VariableTable.complex_chart(1)
    zb = PhasePoly.variable(table, "zb")
    return PhaseDiffOp(
        table,
        {"z": PhasePoly.constant(table, HbarScalar.of(1, 1))},
        zb * Qi(Fraction(1, 2)),
    )


def bargmann_dbar() -> PhaseDiffOp:
    """Dbar = d/dzb + z/(2*hbar) on the one-mode complex chart."""
    table = VariableTable.complex_chart(1)
    z = PhasePoly.variable(table, "z")
    return PhaseDiffOp(
        table,
        {"zb": PhasePoly.constant(table, 1)},
        z * HbarScalar.of(Qi(Fraction(1, 2)), -1),
    )


def bargmann_polarization_check() -> PhaseDiffOp:
    """[a, Dbar]; exactly zero, forcing the zb/2 term in a."""
    return diffop_commutator(bargmann_annihilator(), bargmann_dbar())
