"""Exact scalar arithmetic: Gaussian rationals and Laurent polynomials in hbar.

All symbolic computation in the package bottoms out in these two types.
Irrational constants (pi, square roots) never appear here; anything numeric
lives in :mod:`phasequant.numlab`.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

RationalLike = Union[int, Fraction]


class Qi:
    """Gaussian rational re + i*im with exact Fraction components."""

    __slots__ = ("re", "im")

    def __init__(self, re: RationalLike = 0, im: RationalLike = 0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("Qi is immutable")

    @staticmethod
    def _coerce(x) -> "Qi":
        if isinstance(x, Qi):
            return x
        if isinstance(x, (int, Fraction)):
            return Qi(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to Qi")

    def __add__(self, other):
        other = Qi._coerce(other)
        return Qi(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return Qi(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-Qi._coerce(other))

    def __rsub__(self, other):
        return Qi._coerce(other) + (-self)

    def __mul__(self, other):
        other = Qi._coerce(other)
        return Qi(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = Qi._coerce(other)
        d = other.re * other.re + other.im * other.im
        if d == 0:
            raise ZeroDivisionError("division by zero Qi")
        return Qi(
            (self.re * other.re + self.im * other.im) / d,
            (self.im * other.re - self.re * other.im) / d,
        )

    def __rtruediv__(self, other):
        return Qi._coerce(other) / self

    def conjugate(self) -> "Qi":
        return Qi(self.re, -self.im)

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        try:
            other = Qi._coerce(other)
        except TypeError:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"Qi({self.re!r}, {self.im!r})"

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}*i"
        sign = "+" if self.im > 0 else "-"
        return f"({self.re}{sign}{abs(self.im)}*i)"


QI_ZERO = Qi(0)
QI_ONE = Qi(1)
QI_I = Qi(0, 1)


class HbarScalar:
    """Laurent polynomial in hbar with Qi coefficients: sum c_k * hbar^k.

    Negative exponents are allowed (needed e.g. by the prequantum
    connection D = d - (i/hbar) theta).  Zero coefficients are never
    stored.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        clean = {}
        if coeffs:
            for k, c in coeffs.items():
                c = Qi._coerce(c)
                if not c.is_zero():
                    clean[int(k)] = c
        object.__setattr__(self, "coeffs", clean)

    def __setattr__(self, name, value):
        raise AttributeError("HbarScalar is immutable")

    @staticmethod
    def of(value, hbar_power: int = 0) -> "HbarScalar":
        return HbarScalar({hbar_power: Qi._coerce(value)})

    @staticmethod
    def _coerce(x) -> "HbarScalar":
        if isinstance(x, HbarScalar):
            return x
        if isinstance(x, (int, Fraction, Qi)):
            return HbarScalar.of(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to HbarScalar")

    def __add__(self, other):
        other = HbarScalar._coerce(other)
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, QI_ZERO) + c
        return HbarScalar(out)

    __radd__ = __add__

    def __neg__(self):
        return HbarScalar({k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-HbarScalar._coerce(other))

    def __rsub__(self, other):
        return HbarScalar._coerce(other) + (-self)

    def __mul__(self, other):
        other = HbarScalar._coerce(other)
        out = {}
        for k1, c1 in self.coeffs.items():
            for k2, c2 in other.coeffs.items():
                k = k1 + k2
                out[k] = out.get(k, QI_ZERO) + c1 * c2
        return HbarScalar(out)

    __rmul__ = __mul__

    def conjugate(self) -> "HbarScalar":
        return HbarScalar({k: c.conjugate() for k, c in self.coeffs.items()})

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        try:
            other = HbarScalar._coerce(other)
        except TypeError:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def substitute_hbar(self, value) -> Qi:
        """Evaluate at a rational hbar value (exact)."""
        value = Fraction(value)
        total = QI_ZERO
        for k, c in self.coeffs.items():
            if k < 0 and value == 0:
                raise ZeroDivisionError("hbar=0 with negative hbar power")
            total = total + c * Qi(value**k)
        return total

    def hbar_part(self, k: int) -> Qi:
        return self.coeffs.get(k, QI_ZERO)

    def min_hbar_power(self) -> int:
        if not self.coeffs:
            raise ValueError("zero scalar has no hbar degree")
        return min(self.coeffs)

    def shift_hbar(self, delta: int) -> "HbarScalar":
        """Multiply by hbar**delta."""
        return HbarScalar({k + delta: c for k, c in self.coeffs.items()})

    def __repr__(self):
        return f"HbarScalar({self.coeffs!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in sorted(self.coeffs):
            c = self.coeffs[k]
            if k == 0:
                parts.append(str(c))
            elif k == 1:
                parts.append(f"{c}*hbar")
            else:
                parts.append(f"{c}*hbar^{k}")
        return " + ".join(parts)


HS_ZERO = HbarScalar()
HS_ONE = HbarScalar.of(1)
HS_I = HbarScalar.of(QI_I)
HS_HBAR = HbarScalar.of(1, 1)
