"""Noncommutative canonical operator algebra on qhat_i, phat_i.

Operators are stored in standard normal form: every word is
qhat_1^a1 ... qhat_n^an phat_1^b1 ... phat_n^bn.  Products are reduced with
the single rewrite rule phat*qhat -> qhat*phat - i*hbar (distinct modes
commute), which is terminating and confluent.  The Weyl (symmetrization)
map and its Wigner inverse connect this algebra to the commutative
polynomials of :mod:`phasequant.poly`.
"""

from __future__ import annotations

import json
from fractions import Fraction
from itertools import permutations
from math import comb, factorial
from typing import Dict, Tuple

from .poly import PhasePoly, VariableTable
from .scalars import HbarScalar, Qi, QI_I, HS_ONE

# word key: (qexps, pexps), each a tuple of length n
Word = Tuple[Tuple[int, ...], Tuple[int, ...]]


class ModeMismatchError(ValueError):
    """Raised when operators have different degrees-of-freedom counts."""


def _mul_single_mode(a1: int, b1: int, a2: int, b2: int):
    """Normal-order qhat^a1 phat^b1 * qhat^a2 phat^b2 for one mode.

    Yields (qexp, pexp, coeff) using
    phat^b qhat^a = sum_k (-i*hbar)^k k! C(a,k) C(b,k) qhat^(a-k) phat^(b-k).
    """
    m_ih = HbarScalar.of(Qi(0, -1), 1)  # -i*hbar
    for k in range(min(b1, a2) + 1):
        c = HS_ONE
        for _ in range(k):
            c = c * m_ih
        c = c * (factorial(k) * comb(a2, k) * comb(b1, k))
        yield a1 + a2 - k, b1 + b2 - k, c


class CanonicalOperator:
    """Polynomial in qhat_i, phat_i with [qhat_j, phat_k] = i*hbar*delta_jk."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        n = int(n)
        if n < 1:
            raise ValueError("need at least one mode")
        clean: Dict[Word, HbarScalar] = {}
        if terms:
            for (qe, pe), coeff in terms.items():
                qe, pe = tuple(map(int, qe)), tuple(map(int, pe))
                if len(qe) != n or len(pe) != n:
                    raise ValueError("word length mismatch")
                coeff = HbarScalar._coerce(coeff)
                if coeff.is_zero():
                    continue
                key = (qe, pe)
                prev = clean.get(key)
                coeff = coeff if prev is None else prev + coeff
                if coeff.is_zero():
                    clean.pop(key, None)
                else:
                    clean[key] = coeff
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("CanonicalOperator is immutable")

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero(n: int = 1) -> "CanonicalOperator":
        return CanonicalOperator(n)

    @staticmethod
    def identity(n: int = 1) -> "CanonicalOperator":
        z = (0,) * n
        return CanonicalOperator(n, {(z, z): HS_ONE})

    @staticmethod
    def q(mode: int = 0, n: int = 1) -> "CanonicalOperator":
        z = (0,) * n
        qe = tuple(1 if i == mode else 0 for i in range(n))
        return CanonicalOperator(n, {(qe, z): HS_ONE})

    @staticmethod
    def p(mode: int = 0, n: int = 1) -> "CanonicalOperator":
        z = (0,) * n
        pe = tuple(1 if i == mode else 0 for i in range(n))
        return CanonicalOperator(n, {(z, pe): HS_ONE})

    @staticmethod
    def monomial(qe, pe, coeff=1) -> "CanonicalOperator":
        qe, pe = tuple(qe), tuple(pe)
        return CanonicalOperator(len(qe), {(qe, pe): HbarScalar._coerce(coeff)})

    # -- algebra ------------------------------------------------------

    def _check(self, other: "CanonicalOperator"):
        if self.n != other.n:
            raise ModeMismatchError("mode counts differ")

    def __add__(self, other):
        if isinstance(other, (int, Fraction, Qi, HbarScalar)):
            other = CanonicalOperator.identity(self.n) * other
        self._check(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, HbarScalar()) + c
        return CanonicalOperator(self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return CanonicalOperator(self.n, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, Qi, HbarScalar)):
            other = CanonicalOperator.identity(self.n) * other
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Qi, HbarScalar)):
            c = HbarScalar._coerce(other)
            return CanonicalOperator(self.n, {w: k * c for w, k in self.terms.items()})
        self._check(other)
        out: Dict[Word, HbarScalar] = {}
        for (qe1, pe1), c1 in self.terms.items():
            for (qe2, pe2), c2 in other.terms.items():
                # normal-order mode by mode; distinct modes commute
                partial = [((), (), c1 * c2)]
                for i in range(self.n):
                    nxt = []
                    for qacc, pacc, coeff in partial:
                        for a, b, extra in _mul_single_mode(
                            qe1[i], pe1[i], qe2[i], pe2[i]
                        ):
                            nxt.append((qacc + (a,), pacc + (b,), coeff * extra))
                    partial = nxt
                for qe, pe, coeff in partial:
                    key = (qe, pe)
                    out[key] = out.get(key, HbarScalar()) + coeff
        return CanonicalOperator(self.n, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = CanonicalOperator.identity(self.n)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, CanonicalOperator):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def dagger(self) -> "CanonicalOperator":
        """Formal adjoint: reverse each word and conjugate coefficients."""
        out = CanonicalOperator.zero(self.n)
        for (qe, pe), c in self.terms.items():
            # (qhat^a phat^b)^dagger = phat^b qhat^a = p-word times q-word
            rev = CanonicalOperator(
                self.n, {((0,) * self.n, pe): HbarScalar._coerce(1)}
            ) * CanonicalOperator(self.n, {(qe, (0,) * self.n): HbarScalar._coerce(1)})
            out = out + rev * c.conjugate()
        return out

    def to_json(self) -> str:
        items = []
        for (qe, pe) in sorted(
            self.terms, key=lambda w: (sum(w[0]) + sum(w[1]), w)
        ):
            coeff = self.terms[(qe, pe)]
            for k in sorted(coeff.coeffs):
                c = coeff.coeffs[k]
                items.append(
                    {
                        "re": str(c.re),
                        "im": str(c.im),
                        "hbar": k,
                        "word": {"qexps": list(qe), "pexps": list(pe)},
                    }
                )
        return json.dumps({"modes": self.n, "terms": items}, separators=(",", ":"))

    def __repr__(self):
        return f"CanonicalOperator({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (qe, pe) in sorted(self.terms, key=lambda w: (sum(w[0]) + sum(w[1]), w)):
            factors = []
            for i, e in enumerate(qe):
                if e:
                    name = "qh" if self.n == 1 else f"qh{i+1}"
                    factors.append(f"{name}^{e}" if e > 1 else name)
            for i, e in enumerate(pe):
                if e:
                    name = "ph" if self.n == 1 else f"ph{i+1}"
                    factors.append(f"{name}^{e}" if e > 1 else name)
            mono = "*".join(factors)
            cs = str(self.terms[(qe, pe)])
            if " + " in cs or cs.startswith("-"):
                cs = f"({cs})"
            parts.append(f"{cs}*{mono}" if mono else cs)
        return " + ".join(parts)


def commutator(a: CanonicalOperator, b: CanonicalOperator) -> CanonicalOperator:
    return a * b - b * a


def anticommutator(a: CanonicalOperator, b: CanonicalOperator) -> CanonicalOperator:
    return a * b + b * a


def _split_qp(table: VariableTable):
    """Indices of q-variables and p-variables in a canonical (q, p) table."""
    names = table.names
    n2 = len(names)
    if n2 % 2:
        raise ValueError("canonical chart needs an even number of variables")
    n = n2 // 2
    expected = VariableTable.canonical(n).names
    if names != expected:
        raise ValueError(f"weyl_map expects the canonical chart {expected}, got {names}")
    return n


def weyl_map(f: PhasePoly) -> CanonicalOperator:
    """Totally symmetrized (Weyl) quantization of a (q, p) polynomial.

    Per monomial this is the McCoy closed form
    W(q^m p^n) = sum_k (-i*hbar/2)^k k! C(m,k) C(n,k) qhat^(m-k) phat^(n-k),
    applied mode by mode.
    """
    n = _split_qp(f.table)
    half_m_ih = HbarScalar.of(Qi(0, Fraction(-1, 2)), 1)  # -i*hbar/2
    out = CanonicalOperator.zero(n)
    for exps, coeff in f.terms.items():
        qexps, pexps = exps[:n], exps[n:]
        partial = [((), (), HbarScalar._coerce(coeff))]
        for i in range(n):
            m, nn = qexps[i], pexps[i]
            nxt = []
            for qacc, pacc, c in partial:
                for k in range(min(m, nn) + 1):
                    extra = HS_ONE
                    for _ in range(k):
                        extra = extra * half_m_ih
                    extra = extra * (factorial(k) * comb(m, k) * comb(nn, k))
                    nxt.append((qacc + (m - k,), pacc + (nn - k,), c * extra))
            partial = nxt
        for qe, pe, c in partial:
            out = out + CanonicalOperator(n, {(qe, pe): c})
    return out


def weyl_map_bruteforce(f: PhasePoly) -> CanonicalOperator:
    """Average over all word orderings; oracle for :func:`weyl_map`.

    Factorial cost, usable only for small total degree.
    """
    n = _split_qp(f.table)
    out = CanonicalOperator.zero(n)
    for exps, coeff in f.terms.items():
        qexps, pexps = exps[:n], exps[n:]
        letters = []
        for i, e in enumerate(qexps):
            letters += [("q", i)] * e
        for i, e in enumerate(pexps):
            letters += [("p", i)] * e
        words = set(permutations(letters))
        acc = CanonicalOperator.zero(n)
        for word in words:
            prod = CanonicalOperator.identity(n)
            for kind, i in word:
                factor = (
                    CanonicalOperator.q(i, n) if kind == "q" else CanonicalOperator.p(i, n)
                )
                prod = prod * factor
            acc = acc + prod
        # the multiset permutation count equals the number of distinct words
        acc = acc * Qi(Fraction(1, len(words)))
        out = out + acc * coeff
    return out


def wigner_map(a: CanonicalOperator) -> PhasePoly:
    """Exact inverse of :func:`weyl_map` on polynomials.

    The Weyl image of q^m p^n is qhat^m phat^n plus lower-order words, so
    the monomial system is triangular and can be peeled from the top.
    """
    n = a.n
    table = VariableTable.canonical(n)
    result = PhasePoly.zero(table)
    rest = a
    while not rest.is_zero():
        (qe, pe) = max(rest.terms, key=lambda w: (sum(w[0]) + sum(w[1]), w))
        coeff = rest.terms[(qe, pe)]
        mono = PhasePoly(table, {qe + pe: coeff})
        result = result + mono
        rest = rest - weyl_map(mono)
    return result
