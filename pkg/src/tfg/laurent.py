"""Laurent polynomials in z over Q(i), and square matrices of them.

A level-k ``LaurentMatrix`` is an element of the finite-level algebra
A_k = span{1_{U(k,l)} delta_m}, written in the matrix model
C(T, M_{n_k}). Entry (i, j) with coefficient a z^e corresponds to the
term a 1_{U(k,i)} delta_{i - j + n_k e}.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping

import numpy as np

from .errors import DomainError
from .odometer import OdometerType
from .scalars import ONE, ZERO, GaussRational, as_gauss

__all__ = ["LaurentPoly", "LaurentMatrix"]


class LaurentPoly:
    """Sparse map exponent -> nonzero Gaussian rational coefficient."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, object] | None = None):
        clean: dict[int, GaussRational] = {}
        for e, c in (terms or {}).items():
            c = as_gauss(c)
            if c:
                clean[int(e)] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _wrap(cls, terms: dict[int, GaussRational]) -> "LaurentPoly":
        p = object.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def monomial(cls, e: int = 0, c=ONE) -> "LaurentPoly":
        return cls({e: c})

    @property
    def terms(self) -> dict[int, GaussRational]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self._terms == other._terms
        c = as_gauss(other, strict=False)
        if c is None:
            return NotImplemented
        return self._terms == ({0: c} if c else {})

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, ZERO) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentPoly._wrap(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._wrap({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        out: dict[int, GaussRational] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                s = out.get(e, ZERO) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return LaurentPoly._wrap(out)

    __rmul__ = __mul__

    def star(self) -> "LaurentPoly":
        """Adjoint on the unit circle: conjugate coefficients, z -> z^{-1}."""
        return LaurentPoly._wrap({-e: c.conjugate() for e, c in self._terms.items()})

    def at_one(self) -> GaussRational:
        total = ZERO
        for c in self._terms.values():
            total = total + c
        return total

    def evaluate(self, z):
        """Value at ``z``: exact for a nonzero Gaussian rational, else complex."""
        if isinstance(z, (GaussRational, int)):
            z = as_gauss(z)
            total = ZERO
            for e, c in self._terms.items():
                total = total + c * z**e
            return total
        z = complex(z)
        return sum((complex(c) * z**e for e, c in self._terms.items()), 0j)

    def __repr__(self):
        return f"LaurentPoly({self})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e in sorted(self._terms):
            c = self._terms[e]
            if e == 0:
                parts.append(str(c))
            elif c == 1:
                parts.append(f"z^{e}" if e != 1 else "z")
            else:
                parts.append(f"{c}*z^{e}" if e != 1 else f"{c}*z")
        return " + ".join(parts)

    def to_json(self) -> dict:
        return {str(e): c.to_json() for e, c in sorted(self._terms.items())}

    @classmethod
    def from_json(cls, obj: Mapping) -> "LaurentPoly":
        return cls({int(e): GaussRational.from_json(c) for e, c in obj.items()})


def _as_poly(x):
    if isinstance(x, LaurentPoly):
        return x
    c = as_gauss(x, strict=False)
    if c is None:
        return None
    return LaurentPoly._wrap({0: c} if c else {})


@dataclass(frozen=True, eq=False)
class LaurentMatrix:
    """An n_k x n_k matrix of Laurent polynomials, stored sparsely.

    ``entries`` maps (row, column) to a nonzero ``LaurentPoly``.
    """

    space: OdometerType
    level: int
    entries: dict = field(default_factory=dict)

    def __post_init__(self):
        n = self.space.size(self.level)
        clean = {}
        for (i, j), p in self.entries.items():
            if not (0 <= i < n and 0 <= j < n):
                raise DomainError(f"entry ({i}, {j}) outside a {n} x {n} matrix")
            p = _as_poly(p)
            if p:
                clean[(i, j)] = p
        object.__setattr__(self, "entries", clean)

    @classmethod
    def _wrap(cls, space, level, entries) -> "LaurentMatrix":
        m = object.__new__(cls)
        object.__setattr__(m, "space", space)
        object.__setattr__(m, "level", level)
        object.__setattr__(m, "entries", entries)
        return m

    @property
    def n(self) -> int:
        return self.space.size(self.level)

    @classmethod
    def zero(cls, space: OdometerType, k: int) -> "LaurentMatrix":
        return cls(space, k, {})

    @classmethod
    def identity(cls, space: OdometerType, k: int) -> "LaurentMatrix":
        return cls(space, k, {(i, i): LaurentPoly.monomial(0) for i in range(space.size(k))})

    @classmethod
    def from_terms(cls, space: OdometerType, k: int, terms: Iterable[tuple[int, int, object]]) -> "LaurentMatrix":
        """Build sum of c * 1_{U(k,i)} delta_m from triples (i, m, c)."""
        n = space.size(k)
        entries: dict = {}
        for i, m, c in terms:
            j = (i - m) % n
            e = (j + m - i) // n
            p = entries.get((i, j), LaurentPoly()) + LaurentPoly.monomial(e, c)
            entries[(i, j)] = p
        return cls(space, k, entries)

    def terms(self) -> Iterator[tuple[int, int, GaussRational]]:
        """Inverse of ``from_terms``: triples (i, m, c)."""
        n = self.n
        for (i, j), p in sorted(self.entries.items()):
            for e, c in sorted(p.items()):
                yield i, i - j + n * e, c

    def __getitem__(self, ij: tuple[int, int]) -> LaurentPoly:
        return self.entries.get(ij, LaurentPoly())

    def _check(self, other: "LaurentMatrix"):
        if not isinstance(other, LaurentMatrix):
            raise TypeError(f"expected LaurentMatrix, got {type(other).__name__}")
        if other.space != self.space or other.level != self.level:
            raise DomainError(
                f"level mismatch: {self.level} vs {other.level}; refine_matrix to a common level first"
            )

    def __eq__(self, other):
        if not isinstance(other, LaurentMatrix):
            return NotImplemented
        return self.space == other.space and self.level == other.level and self.entries == other.entries

    def __hash__(self):
        return hash((self.space, self.level, frozenset(self.entries.items())))

    def __add__(self, other):
        self._check(other)
        out = dict(self.entries)
        for ij, p in other.entries.items():
            s = out.get(ij, LaurentPoly()) + p
            if s:
                out[ij] = s
            else:
                out.pop(ij, None)
        return LaurentMatrix._wrap(self.space, self.level, out)

    def __neg__(self):
        return LaurentMatrix._wrap(self.space, self.level, {ij: -p for ij, p in self.entries.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "LaurentMatrix":
        c = _as_poly(c)
        if c is None:
            raise TypeError("scale factor must be exact")
        if not c:
            return LaurentMatrix.zero(self.space, self.level)
        return LaurentMatrix._wrap(self.space, self.level, {ij: p * c for ij, p in self.entries.items()})

    def __mul__(self, other):
        if not isinstance(other, LaurentMatrix):
            if _as_poly(other) is None:
                return NotImplemented
            return self.scale(other)
        self._check(other)
        by_row: dict[int, list] = {}
        for (p, j), q in other.entries.items():
            by_row.setdefault(p, []).append((j, q))
        out: dict = {}
        for (i, p), a in self.entries.items():
            for j, b in by_row.get(p, ()):
                s = out.get((i, j), LaurentPoly()) + a * b
                if s:
                    out[(i, j)] = s
                else:
                    out.pop((i, j), None)
        return LaurentMatrix._wrap(self.space, self.level, out)

    def __rmul__(self, other):
        if _as_poly(other) is None:
            return NotImplemented
        return self.scale(other)

    def __pow__(self, e: int):
        if e < 0:
            return self.adjoint() ** (-e)
        out = LaurentMatrix.identity(self.space, self.level)
        for _ in range(e):
            out = out * self
        return out

    def adjoint(self) -> "LaurentMatrix":
        return LaurentMatrix._wrap(
            self.space, self.level, {(j, i): p.star() for (i, j), p in self.entries.items()}
        )

    def is_zero(self) -> bool:
        return not self.entries

    def at_one(self) -> list[list[GaussRational]]:
        n = self.n
        rows = [[ZERO] * n for _ in range(n)]
        for (i, j), p in self.entries.items():
            rows[i][j] = p.at_one()
        return rows

    def evaluate(self, z) -> np.ndarray:
        """Complex matrix at a point of the unit circle."""
        z = complex(z)
        if abs(abs(z) - 1.0) > 1e-12:
            raise DomainError(f"|z| = {abs(z)} is not 1")
        out = np.zeros((self.n, self.n), dtype=complex)
        for (i, j), p in self.entries.items():
            out[i, j] = p.evaluate(z)
        return out

    def __repr__(self):
        return f"LaurentMatrix(level={self.level}, {self.to_rows()})"

    def to_rows(self) -> list[list[str]]:
        return [[str(self[(i, j)]) for j in range(self.n)] for i in range(self.n)]

    def to_json(self) -> dict:
        return {
            "level": self.level,
            "entries": [[self[(i, j)].to_json() for j in range(self.n)] for i in range(self.n)],
        }

    @classmethod
    def from_json(cls, space: OdometerType, obj: dict) -> "LaurentMatrix":
        try:
            k = int(obj["level"])
            rows = obj["entries"]
        except (KeyError, TypeError):
            raise DomainError('matrix JSON must look like {"level": k, "entries": [[...]]}') from None
        n = space.size(k)
        if len(rows) != n or any(len(r) != n for r in rows):
            raise DomainError(f"level-{k} matrix must be {n} x {n}")
        return cls(space, k, {(i, j): LaurentPoly.from_json(rows[i][j]) for i in range(n) for j in range(n)})
