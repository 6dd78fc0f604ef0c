"""Exact truncated Bargmann-Fock representations.

The monomial basis z^alpha (each exponent below a per-mode cutoff D) is
kept non-orthonormal: creation is multiplication by z (entries 1),
annihilation is hbar*d/dz, and adjointness holds with respect to the
explicit diagonal Gram matrix G with <z^a, z^a> = prod a_i! hbar^{a_i}.
This keeps every identity in exact rational arithmetic.  Creation past the
cutoff is truncated to zero, so CCR-type identities are asserted strictly
below the truncation boundary.

Also here: the Schwinger SU(2) generators on two modes and the fermionic
CAR matrices via the Jordan-Wigner construction.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Dict, List, Sequence, Tuple

from .scalars import HbarScalar, Qi, QI_I, QI_ONE, QI_ZERO


class BargmannBasis:
    """Monomials z^alpha with alpha_i < cutoff for each of n modes, graded-lex order."""

    __slots__ = ("modes", "cutoff", "monomials", "_index")

    def __init__(self, modes: int, cutoff: int):
        if modes < 1:
            raise ValueError("need at least one mode")
        if cutoff < 2:
            raise ValueError("cutoff must be >= 2")
        monos: List[Tuple[int, ...]] = []

        def rec(prefix, left):
            if left == 0:
                monos.append(tuple(prefix))
                return
            for e in range(cutoff):
                rec(prefix + [e], left - 1)

        rec([], modes)
        monos.sort(key=lambda a: (sum(a), tuple(-e for e in a)))
        object.__setattr__(self, "modes", modes)
        object.__setattr__(self, "cutoff", cutoff)
        object.__setattr__(self, "monomials", tuple(monos))
        object.__setattr__(self, "_index", {m: i for i, m in enumerate(monos)})

    def __setattr__(self, name, value):
        raise AttributeError("BargmannBasis is immutable")

    def __len__(self):
        return len(self.monomials)

    def index(self, mono: Sequence[int]) -> int:
        return self._index[tuple(mono)]

    def interior_indices(self) -> List[int]:
        """Indices of monomials with every exponent <= cutoff - 2.

        On these, one application of any creation operator stays in the basis,
        so all CCR-type identities are exact.
        """
        d = self.cutoff
        return [
            i for i, m in enumerate(self.monomials) if all(e <= d - 2 for e in m)
        ]


class ExactMatrix:
    """Dense-semantics matrix over HbarScalar, stored sparsely."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries=None):
        clean: Dict[Tuple[int, int], HbarScalar] = {}
        if entries:
            for (i, j), c in entries.items():
                if not (0 <= i < rows and 0 <= j < cols):
                    raise IndexError("entry out of range")
                c = HbarScalar._coerce(c)
                if not c.is_zero():
                    clean[(i, j)] = c
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", clean)

    def __setattr__(self, name, value):
        raise AttributeError("ExactMatrix is immutable")

    @staticmethod
    def identity(n: int) -> "ExactMatrix":
        return ExactMatrix(n, n, {(i, i): HbarScalar.of(1) for i in range(n)})

    @staticmethod
    def zero(rows: int, cols: int) -> "ExactMatrix":
        return ExactMatrix(rows, cols)

    def __getitem__(self, ij) -> HbarScalar:
        return self.entries.get(ij, HbarScalar())

    def __add__(self, other: "ExactMatrix"):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        out = dict(self.entries)
        for ij, c in other.entries.items():
            out[ij] = out.get(ij, HbarScalar()) + c
        return ExactMatrix(self.rows, self.cols, out)

    def __neg__(self):
        return ExactMatrix(
            self.rows, self.cols, {ij: -c for ij, c in self.entries.items()}
        )

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, ExactMatrix):
            if self.cols != other.rows:
                raise ValueError("shape mismatch")
            by_row: Dict[int, List[Tuple[int, HbarScalar]]] = {}
            for (k, j), c in other.entries.items():
                by_row.setdefault(k, []).append((j, c))
            out: Dict[Tuple[int, int], HbarScalar] = {}
            for (i, k), a in self.entries.items():
                for j, b in by_row.get(k, ()):
                    ij = (i, j)
                    out[ij] = out.get(ij, HbarScalar()) + a * b
            return ExactMatrix(self.rows, other.cols, out)
        c = HbarScalar._coerce(other)
        return ExactMatrix(
            self.rows, self.cols, {ij: e * c for ij, e in self.entries.items()}
        )

    __rmul__ = __mul__

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(
            self.cols, self.rows, {(j, i): c for (i, j), c in self.entries.items()}
        )

    def conjugate(self) -> "ExactMatrix":
        return ExactMatrix(
            self.rows, self.cols, {ij: c.conjugate() for ij, c in self.entries.items()}
        )

    def dagger(self) -> "ExactMatrix":
        return self.transpose().conjugate()

    def is_zero(self) -> bool:
        return not self.entries

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def restrict(self, indices: Sequence[int]) -> "ExactMatrix":
        """Submatrix on the given row/column index set (square restriction)."""
        pos = {k: i for i, k in enumerate(indices)}
        out = {}
        for (i, j), c in self.entries.items():
            if i in pos and j in pos:
                out[(pos[i], pos[j])] = c
        return ExactMatrix(len(indices), len(indices), out)

    def apply(self, vec: Sequence) -> List[HbarScalar]:
        vec = [HbarScalar._coerce(v) for v in vec]
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        out = [HbarScalar() for _ in range(self.rows)]
        for (i, j), c in self.entries.items():
            out[i] = out[i] + c * vec[j]
        return out

    def substitute_hbar(self, value) -> "ExactMatrix":
        return ExactMatrix(
            self.rows,
            self.cols,
            {
                ij: HbarScalar.of(c.substitute_hbar(value))
                for ij, c in self.entries.items()
            },
        )

    def diagonal(self) -> List[HbarScalar]:
        return [self[(i, i)] for i in range(min(self.rows, self.cols))]

    def is_diagonal(self) -> bool:
        return all(i == j for (i, j) in self.entries)

    def __repr__(self):
        return f"ExactMatrix({self.rows}x{self.cols}, {len(self.entries)} entries)"


def ladder_matrices(basis: BargmannBasis, hbar=None):
    """(annihilators, creators) in the monomial basis.

    Creation by mode i sends z^a to z^(a+e_i) (entry 1), truncated to zero
    at the cutoff; annihilation sends z^a to hbar*a_i*z^(a-e_i).  With
    ``hbar`` a rational number the formal hbar is substituted.
    """
    dim = len(basis)
    d = basis.cutoff
    ann, cre = [], []
    hs = HbarScalar.of(Fraction(hbar), 0) if hbar is not None else HbarScalar.of(1, 1)
    for mode in range(basis.modes):
        a_entries, c_entries = {}, {}
        for col, mono in enumerate(basis.monomials):
            e = mono[mode]
            if e > 0:
                down = list(mono)
                down[mode] = e - 1
                a_entries[(basis.index(down), col)] = hs * e
            if e + 1 < d:
                up = list(mono)
                up[mode] = e + 1
                c_entries[(basis.index(up), col)] = HbarScalar.of(1)
        ann.append(ExactMatrix(dim, dim, a_entries))
        cre.append(ExactMatrix(dim, dim, c_entries))
    return ann, cre


def gram_matrix(basis: BargmannBasis, hbar=None) -> ExactMatrix:
    """Diagonal Gram matrix <z^a, z^a> = prod_i a_i! hbar^{a_i}, with <1,1> = 1."""
    entries = {}
    for i, mono in enumerate(basis.monomials):
        num = 1
        for e in mono:
            num *= factorial(e)
        k = sum(mono)
        if hbar is not None:
            entries[(i, i)] = HbarScalar.of(num * Fraction(hbar) ** k)
        else:
            entries[(i, i)] = HbarScalar.of(num, k)
    return ExactMatrix(len(basis), len(basis), entries)


def adjoint_check(basis: BargmannBasis, mode: int = 0, hbar=None) -> ExactMatrix:
    """Defect (a*)^T G - G a, restricted below the truncation boundary.

    Zero there; the unrestricted defect is nonzero only on boundary rows.
    """
    ann, cre = ladder_matrices(basis, hbar)
    g = gram_matrix(basis, hbar)
    defect = cre[mode].transpose() * g - g * ann[mode]
    return defect.restrict(basis.interior_indices())


def adjoint_boundary_defect(basis: BargmannBasis, mode: int = 0, hbar=None) -> ExactMatrix:
    """The full (unrestricted) adjointness defect.

    This is identically zero: truncating creation to zero at the cutoff is
    exactly what makes the truncated a and a* adjoint on the whole space.
    The truncation artifact lives in the CCR instead; see
    :func:`ccr_boundary_defect`.
    """
    ann, cre = ladder_matrices(basis, hbar)
    g = gram_matrix(basis, hbar)
    return cre[mode].transpose() * g - g * ann[mode]


def ccr_boundary_defect(basis: BargmannBasis, mode: int = 0, hbar=None) -> ExactMatrix:
    """[a, a*] - hbar*Id on the full truncated space.

    Nonzero exactly on the boundary monomials (exponent cutoff-1 in the
    given mode), where the missing creation target breaks the CCR.
    """
    ann, cre = ladder_matrices(basis, hbar)
    a, c = ann[mode], cre[mode]
    hs = HbarScalar.of(Fraction(hbar), 0) if hbar is not None else HbarScalar.of(1, 1)
    return a * c - c * a - ExactMatrix.identity(len(basis)) * hs


def oscillator_hamiltonian(basis: BargmannBasis, hbar=None) -> ExactMatrix:
    """H0 = sum_i (a_i* a_i + a_i a_i*)/2; eigenvalue (k + n/2)*hbar on degree k."""
    ann, cre = ladder_matrices(basis, hbar)
    dim = len(basis)
    h = ExactMatrix.zero(dim, dim)
    half = Qi(Fraction(1, 2))
    for a, c in zip(ann, cre):
        h = h + (c * a + a * c) * half
    return h


def schwinger_su2(basis: BargmannBasis, hbar=None) -> Dict[str, ExactMatrix]:
    """Schwinger generators M_j = (1/2) a* sigma_j a on two modes.

    Returns M1, M2, M3, Mplus, Mminus and the Casimir
    M2tot = M3^2 + (Mplus*Mminus + Mminus*Mplus)/2
          = M3^2 - hbar*M3 + Mplus*Mminus.
    """
    if basis.modes != 2:
        raise ValueError("the Schwinger construction needs exactly two modes")
    ann, cre = ladder_matrices(basis, hbar)
    a1, a2 = ann
    c1, c2 = cre
    half = Qi(Fraction(1, 2))
    half_i = Qi(0, Fraction(1, 2))
    m1 = (c1 * a2 + c2 * a1) * half
    m2 = (c1 * a2 - c2 * a1) * (-half_i)
    m3 = (c1 * a1 - c2 * a2) * half
    mplus = c1 * a2
    mminus = c2 * a1
    m2tot = m3 * m3 + (mplus * mminus + mminus * mplus) * half
    return {
        "M1": m1,
        "M2": m2,
        "M3": m3,
        "Mplus": mplus,
        "Mminus": mminus,
        "M2tot": m2tot,
    }


def degree_indices(basis: BargmannBasis, degree: int) -> List[int]:
    return [i for i, m in enumerate(basis.monomials) if sum(m) == degree]


class CarAlgebra:
    """Fermionic modes via Jordan-Wigner: 2^m matrices with entries in {0, +-1}."""

    __slots__ = ("modes", "annihilators", "creators")

    MAX_MODES = 12

    def __init__(self, modes: int):
        if not 1 <= modes <= self.MAX_MODES:
            raise ValueError(f"mode count must be in 1..{self.MAX_MODES}")
        dim = 1 << modes
        ann, cre = [], []
        one = HbarScalar.of(1)
        for k in range(modes):
            a_entries, c_entries = {}, {}
            for state in range(dim):
                bit = (state >> k) & 1
                # parity of the occupied modes before mode k (Jordan-Wigner string)
                parity = bin(state & ((1 << k) - 1)).count("1") & 1
                sign = one if parity == 0 else -one
                if bit:
                    a_entries[(state ^ (1 << k), state)] = sign
                else:
                    c_entries[(state ^ (1 << k), state)] = sign
            ann.append(ExactMatrix(dim, dim, a_entries))
            cre.append(ExactMatrix(dim, dim, c_entries))
        object.__setattr__(self, "modes", modes)
        object.__setattr__(self, "annihilators", tuple(ann))
        object.__setattr__(self, "creators", tuple(cre))

    def __setattr__(self, name, value):
        raise AttributeError("CarAlgebra is immutable")

    @property
    def dim(self) -> int:
        return 1 << self.modes

    def number_operator(self) -> ExactMatrix:
        n = ExactMatrix.zero(self.dim, self.dim)
        for a, c in zip(self.annihilators, self.creators):
            n = n + c * a
        return n


def car_matrices(modes: int) -> CarAlgebra:
    return CarAlgebra(modes)


def car_identities_hold(car: CarAlgebra) -> bool:
    """All three CAR identities as exact matrix equations."""
    dim = car.dim
    ident = ExactMatrix.identity(dim)
    for i, ai in enumerate(car.annihilators):
        for j, aj in enumerate(car.annihilators):
            if not (ai * aj + aj * ai).is_zero():
                return False
            ci, cj = car.creators[i], car.creators[j]
            if not (ci * cj + cj * ci).is_zero():
                return False
            anti = ai * cj + cj * ai
            expected = ident if i == j else ExactMatrix.zero(dim, dim)
            if anti != expected:
                return False
    return True
