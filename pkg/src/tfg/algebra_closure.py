"""Finite-dimensional *-algebras generated by exact matrices.

``span_saturate`` computes the unital *-algebra generated by a set of
matrices as a linear subspace of M_d(Q(i)), by repeatedly adding products
and adjoints until the dimension stops growing.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DomainError, VerificationFailure
from .full_group import FullGroupElement, all_sigma_elements
from .koopman import exact_in_Bk, koopman_matrix
from .linalg import EchelonSpan
from .scalars import ONE, ZERO, GaussRational, as_gauss

__all__ = [
    "ExactMatrix",
    "SpanBasis",
    "perm_plus_trivial",
    "permutation_matrix",
    "span_saturate",
    "same_algebra",
    "bk_fiber_algebra",
    "symmetric_group",
    "alternating_group",
]


class ExactMatrix:
    """Dense d x d matrix over Q(i), stored sparsely (zeros omitted)."""

    __slots__ = ("d", "_entries", "_hash")

    def __init__(self, rows: Sequence[Sequence]):
        d = len(rows)
        if any(len(r) != d for r in rows):
            raise DomainError("ExactMatrix must be square")
        self.d = d
        self._entries = {}
        for i, r in enumerate(rows):
            for j, x in enumerate(r):
                x = as_gauss(x)
                if x:
                    self._entries[(i, j)] = x
        self._hash = None

    @classmethod
    def _wrap(cls, d: int, entries: dict) -> "ExactMatrix":
        m = object.__new__(cls)
        m.d = d
        m._entries = entries
        m._hash = None
        return m

    @classmethod
    def identity(cls, d: int) -> "ExactMatrix":
        return cls._wrap(d, {(i, i): ONE for i in range(d)})

    @classmethod
    def zero(cls, d: int) -> "ExactMatrix":
        return cls._wrap(d, {})

    def __getitem__(self, ij) -> GaussRational:
        return self._entries.get(ij, ZERO)

    def rows(self) -> list[list[GaussRational]]:
        return [[self[(i, j)] for j in range(self.d)] for i in range(self.d)]

    def vector(self) -> dict:
        return dict(self._entries)

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.d == other.d and self._entries == other._entries

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.d, frozenset(self._entries.items())))
        return self._hash

    def _check(self, other):
        if not isinstance(other, ExactMatrix):
            raise TypeError(f"expected ExactMatrix, got {type(other).__name__}")
        if other.d != self.d:
            raise DomainError(f"dimension mismatch: {self.d} vs {other.d}")

    def __add__(self, other):
        self._check(other)
        out = dict(self._entries)
        for ij, x in other._entries.items():
            s = out.get(ij, ZERO) + x
            if s:
                out[ij] = s
            else:
                out.pop(ij, None)
        return ExactMatrix._wrap(self.d, out)

    def __neg__(self):
        return ExactMatrix._wrap(self.d, {ij: -x for ij, x in self._entries.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, ExactMatrix):
            c = as_gauss(other, strict=False)
            if c is None:
                return NotImplemented
            return ExactMatrix._wrap(self.d, {ij: x * c for ij, x in self._entries.items() if c})
        self._check(other)
        by_row: dict[int, list] = {}
        for (p, j), b in other._entries.items():
            by_row.setdefault(p, []).append((j, b))
        out: dict = {}
        for (i, p), a in self._entries.items():
            for j, b in by_row.get(p, ()):
                s = out.get((i, j), ZERO) + a * b
                if s:
                    out[(i, j)] = s
                else:
                    out.pop((i, j), None)
        return ExactMatrix._wrap(self.d, out)

    __rmul__ = __mul__

    def adjoint(self) -> "ExactMatrix":
        return ExactMatrix._wrap(self.d, {(j, i): x.conjugate() for (i, j), x in self._entries.items()})

    def __repr__(self):
        return f"ExactMatrix({[[str(x) for x in r] for r in self.rows()]})"


def permutation_matrix(perm: Sequence[int]) -> ExactMatrix:
    """Matrix sending basis vector e_i to e_{perm[i]}."""
    return ExactMatrix._wrap(len(perm), {(perm[i], i): ONE for i in range(len(perm))})


def perm_plus_trivial(perm: Sequence[int]) -> ExactMatrix:
    """Trivial representation plus permutation representation, as a block matrix.

    Index 0 carries the trivial summand; indices 1..n the permutation matrix.
    """
    entries = {(0, 0): ONE}
    for i, p in enumerate(perm):
        entries[(p + 1, i + 1)] = ONE
    return ExactMatrix._wrap(len(perm) + 1, entries)


def symmetric_group(n: int) -> list[tuple[int, ...]]:
    return list(itertools.permutations(range(n)))


def alternating_group(n: int) -> list[tuple[int, ...]]:
    from .full_group import permutation_sign

    return [p for p in itertools.permutations(range(n)) if permutation_sign(p) == 1]


@dataclass
class SpanBasis:
    """Linearly independent matrices spanning a subspace of M_d."""

    d: int
    basis: list[ExactMatrix]
    _span: EchelonSpan

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def __contains__(self, M: ExactMatrix) -> bool:
        return M.vector() in self._span

    def contains_all(self, other: "SpanBasis") -> bool:
        return all(M in self for M in other.basis)


def span_saturate(generators: Iterable[ExactMatrix], d: int | None = None) -> SpanBasis:
    """Basis of the unital *-algebra generated by ``generators``.

    Starts from the identity and the generators, then closes under adjoints
    and products of basis pairs. Every new basis element is multiplied
    against the whole basis, so the loop ends once no product is new.
    """
    generators = list(generators)
    if d is None:
        if not generators:
            raise DomainError("need at least one generator or an explicit dimension")
        d = generators[0].d
    for g in generators:
        if g.d != d:
            raise DomainError(f"generator of size {g.d} in a size-{d} family")

    span = EchelonSpan(track=False)
    basis: list[ExactMatrix] = []
    pending: list[ExactMatrix] = []

    def offer(M: ExactMatrix) -> None:
        if span.add(M.vector()):
            basis.append(M)
            pending.append(M)

    offer(ExactMatrix.identity(d))
    for g in generators:
        offer(g)
    while pending:
        M = pending.pop()
        offer(M.adjoint())
        for B in list(basis):
            offer(M * B)
            offer(B * M)
    return SpanBasis(d, basis, span)


def same_algebra(gens_a: Sequence[ExactMatrix], gens_b: Sequence[ExactMatrix]) -> bool:
    """Whether both families generate the same unital *-algebra."""
    a, b = span_saturate(gens_a), span_saturate(gens_b)
    if a.d != b.d:
        raise DomainError(f"dimension mismatch: {a.d} vs {b.d}")
    return a.dimension == b.dimension and a.contains_all(b)


def fiber_at_one(g: FullGroupElement, k: int) -> ExactMatrix:
    return ExactMatrix(koopman_matrix(g, k).at_one())


def bk_fiber_algebra(k: int, sample: Sequence[FullGroupElement]) -> SpanBasis:
    """Algebra generated by the z = 1 fibers of pi(sample) at level k.

    Every basis element is checked to lie in B_k (equal row and column
    sums); a violation raises ``VerificationFailure``.
    """
    if not sample:
        raise DomainError("need a nonempty sample")
    space = sample[0].space
    n = space.size(k)
    gens = []
    for g in sample:
        if g.space != space:
            raise DomainError("sample elements live in different odometers")
        gens.append(fiber_at_one(g, k))
    basis = span_saturate(gens, n)
    for M in basis.basis:
        if not exact_in_Bk(M.rows()):
            raise VerificationFailure(f"fiber algebra element {M!r} is outside B_{k}")
    return basis


def sigma_fiber_algebra(space, k: int) -> SpanBasis:
    """bk_fiber_algebra over every sigma_{U(k,0)}, sigma in S_{n_k}."""
    return bk_fiber_algebra(k, all_sigma_elements(space, k))
