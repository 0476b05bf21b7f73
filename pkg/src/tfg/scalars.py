"""Gaussian rationals: the exact scalar field Q(i)."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

__all__ = ["GaussRational", "as_gauss", "ZERO", "ONE"]


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


class GaussRational:
    """An element re + im*i of Q(i).

    Instances are immutable and hashable; equality with ints and Fractions
    works when the imaginary part is zero.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", _frac(re))
        object.__setattr__(self, "im", _frac(im))

    @classmethod
    def _raw(cls, re: Fraction, im: Fraction) -> "GaussRational":
        obj = object.__new__(cls)
        object.__setattr__(obj, "re", re)
        object.__setattr__(obj, "im", im)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("GaussRational is immutable")

    def __reduce__(self):
        return (GaussRational, (self.re, self.im))

    # arithmetic

    def __add__(self, other):
        o = as_gauss(other, strict=False)
        if o is None:
            return NotImplemented
        if not self.im and not o.im:
            return GaussRational._raw(self.re + o.re, self.im)
        return GaussRational._raw(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = as_gauss(other, strict=False)
        if o is None:
            return NotImplemented
        return GaussRational._raw(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = as_gauss(other, strict=False)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = as_gauss(other, strict=False)
        if o is None:
            return NotImplemented
        a, b, c, d = self.re, self.im, o.re, o.im
        if not b and not d:
            return GaussRational._raw(a * c, b)
        return GaussRational._raw(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = as_gauss(other, strict=False)
        if o is None:
            return NotImplemented
        return self * o.reciprocal()

    def __rtruediv__(self, other):
        o = as_gauss(other, strict=False)
        if o is None:
            return NotImplemented
        return o * self.reciprocal()

    def __neg__(self):
        return GaussRational._raw(-self.re, -self.im)

    def __pos__(self):
        return self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.reciprocal()
        result = ONE
        for _ in range(abs(k)):
            result = result * base
        return result

    def reciprocal(self) -> "GaussRational":
        n = self.norm()
        if not n:
            raise ZeroDivisionError("division by zero in Q(i)")
        return GaussRational._raw(self.re / n, -self.im / n)

    def conjugate(self) -> "GaussRational":
        return GaussRational._raw(self.re, -self.im)

    def norm(self) -> Fraction:
        """Squared modulus re^2 + im^2."""
        return self.re * self.re + self.im * self.im

    # comparison / conversion

    def __eq__(self, other):
        o = as_gauss(other, strict=False)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def is_real(self) -> bool:
        return not self.im

    def __repr__(self):
        return f"GaussRational({str(self.re)!r}, {str(self.im)!r})"

    def __str__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"({self.re}{sign}{abs(self.im)}i)"

    def to_json(self) -> dict:
        return {"re": str(self.re), "im": str(self.im)}

    @classmethod
    def from_json(cls, obj) -> "GaussRational":
        if isinstance(obj, dict):
            return cls(obj.get("re", "0"), obj.get("im", "0"))
        return cls(obj)


ZERO = GaussRational._raw(Fraction(0), Fraction(0))
ONE = GaussRational._raw(Fraction(1), Fraction(0))
I = GaussRational._raw(Fraction(0), Fraction(1))


def as_gauss(x, strict: bool = True):
    """Coerce ints, Fractions and Gaussian rationals; floats are rejected."""
    if isinstance(x, GaussRational):
        return x
    if isinstance(x, bool):
        x = int(x)
    if isinstance(x, (int, Fraction, Rational)):
        return GaussRational._raw(Fraction(x), Fraction(0))
    if strict:
        raise TypeError(f"{x!r} is not an exact Gaussian rational")
    return None
