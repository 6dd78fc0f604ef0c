"""Commutative phase-space polynomial algebra over exact scalars.

A :class:`PhasePoly` is a finite sum of monomials in named variables with
:class:`~phasequant.scalars.HbarScalar` coefficients.  The variable table
carries a conjugation pairing so that both real charts (q, p) and complex
charts (z, zb) are supported.  Poisson brackets are taken with respect to a
constant antisymmetric bivector.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Dict, Iterable, Sequence, Tuple

from .scalars import HbarScalar, Qi, QI_I, QI_ZERO, HS_ONE


class TableMismatchError(ValueError):
    """Raised when operands live over different variable tables."""


class VariableTable:
    """Ordered variable names with a conjugation involution.

    ``pairing`` maps each variable to its complex conjugate; real variables
    are self-paired.  The table order fixes the canonical term order.
    """

    __slots__ = ("names", "pairing", "_index")

    def __init__(self, names: Sequence[str], pairing: Dict[str, str] | None = None):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError("duplicate variable names")
        pairing = dict(pairing) if pairing else {n: n for n in names}
        for n in names:
            pairing.setdefault(n, n)
        for a, b in pairing.items():
            if a not in names or b not in names:
                raise ValueError(f"pairing mentions unknown variable {a!r}/{b!r}")
            if pairing[b] != a:
                raise ValueError("conjugation pairing must be an involution")
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "pairing", pairing)
        object.__setattr__(self, "_index", {n: i for i, n in enumerate(names)})

    def __setattr__(self, name, value):
        raise AttributeError("VariableTable is immutable")

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown variable {name!r}") from None

    def __len__(self):
        return len(self.names)

    def __eq__(self, other):
        if not isinstance(other, VariableTable):
            return NotImplemented
        return self.names == other.names and self.pairing == other.pairing

    def __hash__(self):
        return hash((self.names, tuple(sorted(self.pairing.items()))))

    def __repr__(self):
        return f"VariableTable({list(self.names)!r})"

    @staticmethod
    def canonical(n: int = 1) -> "VariableTable":
        """Real chart q1..qn, p1..pn (plain q, p for n=1)."""
        if n == 1:
            return VariableTable(("q", "p"))
        names = tuple(f"q{i}" for i in range(1, n + 1)) + tuple(
            f"p{i}" for i in range(1, n + 1)
        )
        return VariableTable(names)

    @staticmethod
    def complex_chart(n: int = 1) -> "VariableTable":
        """Complex chart z1..zn, zb1..zbn with z_j conjugate to zb_j."""
        if n == 1:
            return VariableTable(("z", "zb"), {"z": "zb", "zb": "z"})
        names = tuple(f"z{i}" for i in range(1, n + 1)) + tuple(
            f"zb{i}" for i in range(1, n + 1)
        )
        pairing = {f"z{i}": f"zb{i}" for i in range(1, n + 1)}
        pairing.update({v: k for k, v in pairing.items()})
        return VariableTable(names, pairing)


def _grlex_key(exps: Tuple[int, ...]):
    # graded lexicographic: total degree first, then lex on exponents
    return (sum(exps), tuple(-e for e in exps))


class PhasePoly:
    """Multivariate polynomial with HbarScalar coefficients."""

    __slots__ = ("table", "terms")

    def __init__(self, table: VariableTable, terms=None):
        clean: Dict[Tuple[int, ...], HbarScalar] = {}
        n = len(table)
        if terms:
            for exps, coeff in terms.items():
                exps = tuple(int(e) for e in exps)
                if len(exps) != n:
                    raise ValueError("exponent vector length mismatch")
                if any(e < 0 for e in exps):
                    raise ValueError("negative exponent")
                coeff = HbarScalar._coerce(coeff)
                if not coeff.is_zero():
                    prev = clean.get(exps)
                    coeff = coeff if prev is None else prev + coeff
                    if coeff.is_zero():
                        clean.pop(exps, None)
                    else:
                        clean[exps] = coeff
        object.__setattr__(self, "table", table)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("PhasePoly is immutable")

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero(table: VariableTable) -> "PhasePoly":
        return PhasePoly(table)

    @staticmethod
    def constant(table: VariableTable, c) -> "PhasePoly":
        return PhasePoly(table, {(0,) * len(table): HbarScalar._coerce(c)})

    @staticmethod
    def variable(table: VariableTable, name: str) -> "PhasePoly":
        i = table.index(name)
        exps = tuple(1 if j == i else 0 for j in range(len(table)))
        return PhasePoly(table, {exps: HS_ONE})

    # -- ring operations ----------------------------------------------

    def _check(self, other: "PhasePoly"):
        if self.table != other.table:
            raise TableMismatchError("operands use different variable tables")

    def __add__(self, other):
        if isinstance(other, (int, Fraction, Qi, HbarScalar)):
            other = PhasePoly.constant(self.table, other)
        self._check(other)
        out = dict(self.terms)
        for exps, c in other.terms.items():
            out[exps] = out.get(exps, HbarScalar()) + c
        return PhasePoly(self.table, out)

    __radd__ = __add__

    def __neg__(self):
        return PhasePoly(self.table, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, Qi, HbarScalar)):
            other = PhasePoly.constant(self.table, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Qi, HbarScalar)):
            c = HbarScalar._coerce(other)
            return PhasePoly(self.table, {e: k * c for e, k in self.terms.items()})
        self._check(other)
        out: Dict[Tuple[int, ...], HbarScalar] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                prod = c1 * c2
                out[e] = out.get(e, HbarScalar()) + prod
        return PhasePoly(self.table, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = PhasePoly.constant(self.table, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, PhasePoly):
            return NotImplemented
        return self.table == other.table and self.terms == other.terms

    def __hash__(self):
        return hash((self.table, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def constant_value(self):
        """The coefficient if the polynomial is constant, else None."""
        if not self.terms:
            return HbarScalar()
        zero_exps = (0,) * len(self.table)
        if set(self.terms) != {zero_exps}:
            return None
        return self.terms[zero_exps]

    def total_degree(self) -> int:
        """Degree in the phase-space variables (hbar does not count); -1 for 0."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def coefficient(self, exps: Iterable[int]) -> HbarScalar:
        return self.terms.get(tuple(exps), HbarScalar())

    def constant_term(self) -> HbarScalar:
        return self.coefficient((0,) * len(self.table))

    # -- calculus -----------------------------------------------------

    def derivative(self, var: str) -> "PhasePoly":
        i = self.table.index(var)
        out = {}
        for exps, c in self.terms.items():
            k = exps[i]
            if k == 0:
                continue
            new = list(exps)
            new[i] = k - 1
            out[tuple(new)] = c * k
        return PhasePoly(self.table, out)

    def conjugate(self) -> "PhasePoly":
        """Complex conjugation: i -> -i, variables swapped by the pairing; hbar fixed."""
        tbl = self.table
        out = {}
        for exps, c in self.terms.items():
            new = [0] * len(tbl)
            for i, e in enumerate(exps):
                j = tbl.index(tbl.pairing[tbl.names[i]])
                new[j] += e
            key = tuple(new)
            val = c.conjugate()
            prev = out.get(key)
            out[key] = val if prev is None else prev + val
        return PhasePoly(tbl, out)

    def substitute_hbar(self, value) -> "PhasePoly":
        """Replace the formal hbar by a rational value (exact)."""
        out = {}
        for exps, c in self.terms.items():
            out[exps] = HbarScalar.of(c.substitute_hbar(value))
        return PhasePoly(self.table, out)

    def hbar_graded_part(self, k: int) -> "PhasePoly":
        """The part of the polynomial carrying hbar^k exactly."""
        out = {}
        for exps, c in self.terms.items():
            part = c.hbar_part(k)
            if not part.is_zero():
                out[exps] = HbarScalar.of(part, k)
        return PhasePoly(self.table, out)

    def divisible_by_hbar(self, k: int) -> bool:
        """True if every coefficient has hbar order >= k."""
        return all(c.min_hbar_power() >= k for c in self.terms.values())

    def ordered_terms(self):
        """Terms in canonical (graded lexicographic) order."""
        return sorted(self.terms.items(), key=lambda kv: _grlex_key(kv[0]))

    # -- serialization ------------------------------------------------

    def to_json_terms(self):
        """Canonical JSON-ready term list, one entry per (monomial, hbar power)."""
        out = []
        for exps, coeff in self.ordered_terms():
            for k in sorted(coeff.coeffs):
                c = coeff.coeffs[k]
                out.append(
                    {
                        "re": str(c.re),
                        "im": str(c.im),
                        "hbar": k,
                        "exps": list(exps),
                    }
                )
        return out

    def to_json(self) -> str:
        return json.dumps(
            {"variables": list(self.table.names), "terms": self.to_json_terms()},
            separators=(",", ":"),
        )

    @staticmethod
    def from_json_terms(table: VariableTable, terms) -> "PhasePoly":
        acc: Dict[Tuple[int, ...], HbarScalar] = {}
        for t in terms:
            exps = tuple(int(e) for e in t["exps"])
            c = HbarScalar.of(Qi(Fraction(t["re"]), Fraction(t["im"])), int(t["hbar"]))
            acc[exps] = acc.get(exps, HbarScalar()) + c
        return PhasePoly(table, acc)

    def __repr__(self):
        return f"PhasePoly({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exps, coeff in self.ordered_terms():
            mono = "*".join(
                f"{n}^{e}" if e > 1 else n
                for n, e in zip(self.table.names, exps)
                if e > 0
            )
            cs = str(coeff)
            if " + " in cs or cs.startswith("-"):
                cs = f"({cs})"
            parts.append(f"{cs}*{mono}" if mono else cs)
        return " + ".join(parts)


class PoissonStructure:
    """Constant antisymmetric bivector P over a variable table.

    {f, g} = sum_ij P[i][j] * df/dx_i * dg/dx_j
    """

    __slots__ = ("table", "matrix")

    def __init__(self, table: VariableTable, matrix: Sequence[Sequence]):
        n = len(table)
        mat = tuple(tuple(Qi._coerce(x) for x in row) for row in matrix)
        if len(mat) != n or any(len(r) != n for r in mat):
            raise ValueError("bivector matrix must be n x n")
        for i in range(n):
            for j in range(n):
                if mat[i][j] != -mat[j][i]:
                    raise ValueError("bivector must be antisymmetric")
        object.__setattr__(self, "table", table)
        object.__setattr__(self, "matrix", mat)

    def __setattr__(self, name, value):
        raise AttributeError("PoissonStructure is immutable")

    @staticmethod
    def canonical(n: int = 1) -> "PoissonStructure":
        """{q_j, p_k} = delta_jk on the canonical (q, p) chart."""
        table = VariableTable.canonical(n)
        dim = 2 * n
        mat = [[QI_ZERO] * dim for _ in range(dim)]
        for j in range(n):
            mat[j][n + j] = Qi(1)
            mat[n + j][j] = Qi(-1)
        return PoissonStructure(table, mat)

    @staticmethod
    def complex_canonical(n: int = 1) -> "PoissonStructure":
        """{z_j, zb_k} = i*delta_jk on the complex chart."""
        table = VariableTable.complex_chart(n)
        dim = 2 * n
        mat = [[QI_ZERO] * dim for _ in range(dim)]
        for j in range(n):
            mat[j][n + j] = QI_I
            mat[n + j][j] = -QI_I
        return PoissonStructure(table, mat)

    def __eq__(self, other):
        if not isinstance(other, PoissonStructure):
            return NotImplemented
        return self.table == other.table and self.matrix == other.matrix


def poisson_bracket(f: PhasePoly, g: PhasePoly, P: PoissonStructure) -> PhasePoly:
    """{f, g} with respect to the constant bivector P."""
    if f.table != P.table or g.table != P.table:
        raise TableMismatchError("polynomials and Poisson structure tables differ")
    names = P.table.names
    result = PhasePoly.zero(P.table)
    dfs = [f.derivative(n) for n in names]
    dgs = [g.derivative(n) for n in names]
    for i, row in enumerate(P.matrix):
        if dfs[i].is_zero():
            continue
        for j, pij in enumerate(row):
            if pij.is_zero() or dgs[j].is_zero():
                continue
            result = result + dfs[i] * dgs[j] * pij
    return result
