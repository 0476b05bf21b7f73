"""The odometer space X of type (n_1, ..., n_K) and its clopen algebra.

Points of X are never materialized. A clopen set is a level ``k`` together
with a set of labels in Z/n_k; the same set of points has one label set at
every level >= its canonical level, related by reduction mod n_k.

>>> X = OdometerType((2, 4))
>>> sorted(refine(cylinder(X, 1, 0), 2).labels)
[0, 2]
>>> measure(cylinder(X, 1, 0) | cylinder(X, 2, 1))
Fraction(3, 4)
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable

from .errors import DomainError

__all__ = [
    "OdometerType",
    "ClopenSet",
    "cylinder",
    "refine",
    "union",
    "intersect",
    "difference",
    "complement",
    "translate",
    "measure",
    "is_n_disjoint",
    "first_return",
]


@dataclass(frozen=True)
class OdometerType:
    """Divisibility chain n_1 | n_2 | ... | n_K, strictly increasing.

    Leading 1s are dropped, so ``OdometerType((1, 2, 4)) == OdometerType((2, 4))``.
    Levels are 1-based throughout the package.
    """

    levels: tuple[int, ...]

    def __post_init__(self):
        levels = tuple(int(n) for n in self.levels)
        while len(levels) > 1 and levels[0] == 1:
            levels = levels[1:]
        if not levels:
            raise DomainError("an odometer type needs at least one level")
        if levels[0] < 2:
            raise DomainError(f"n_1 must be at least 2, got {levels[0]}")
        for a, b in zip(levels, levels[1:]):
            if b <= a or b % a:
                raise DomainError(f"levels must strictly increase by divisibility: {a} then {b}")
        object.__setattr__(self, "levels", levels)

    @property
    def depth(self) -> int:
        return len(self.levels)

    def check_level(self, k: int) -> int:
        if not isinstance(k, int) or isinstance(k, bool) or not 1 <= k <= self.depth:
            raise DomainError(f"level {k!r} outside 1..{self.depth}")
        return k

    def size(self, k: int) -> int:
        """n_k, the number of level-k cylinders."""
        return self.levels[self.check_level(k) - 1]

    def to_json(self) -> dict:
        return {"levels": list(self.levels)}

    @classmethod
    def from_json(cls, obj: dict) -> "OdometerType":
        try:
            levels = obj["levels"]
        except (KeyError, TypeError):
            raise DomainError('odometer type JSON must look like {"levels": [2, 4, ...]}') from None
        return cls(tuple(levels))


def _min_level_for(space: OdometerType, level: int, constant_on_fibers) -> int:
    # constant_on_fibers(n) decides whether the data at `level` factors through Z/n
    for j in range(1, level):
        if constant_on_fibers(space.size(j)):
            return j
    return level


@dataclass(frozen=True, eq=False)
class ClopenSet:
    """A clopen subset of X given by labels at one level.

    The stored level need not be minimal (``refine`` produces finer
    representations); equality and hashing compare the underlying sets.
    """

    space: OdometerType
    level: int
    labels: frozenset[int]

    def __post_init__(self):
        self.space.check_level(self.level)
        n = self.space.size(self.level)
        labels = frozenset(int(l) for l in self.labels)
        bad = [l for l in labels if not 0 <= l < n]
        if bad:
            raise DomainError(f"labels {sorted(bad)} outside Z/{n}")
        object.__setattr__(self, "labels", labels)

    @cached_property
    def _canon(self) -> tuple[int, frozenset[int]]:
        n = self.space.size(self.level)
        labs = self.labels

        def factors(m: int) -> bool:
            return all(((l % m) in labs) == (l in labs) for l in range(n))

        j = _min_level_for(self.space, self.level, factors)
        m = self.space.size(j)
        return j, frozenset(l for l in labs if l < m)

    def canonical(self) -> "ClopenSet":
        j, labs = self._canon
        if j == self.level:
            return self
        return ClopenSet(self.space, j, labs)

    def labels_at(self, k: int) -> frozenset[int]:
        """Labels of this set at level ``k`` (``k`` >= canonical level)."""
        j, labs = self._canon
        self.space.check_level(k)
        if k < j:
            raise DomainError(f"set is not representable at level {k} (canonical level {j})")
        if k == self.level:
            return self.labels
        n_j, n_k = self.space.size(j), self.space.size(k)
        return frozenset(l for l in range(n_k) if l % n_j in labs)

    def is_empty(self) -> bool:
        return not self.labels

    def is_full(self) -> bool:
        return len(self.labels) == self.space.size(self.level)

    def __eq__(self, other):
        if not isinstance(other, ClopenSet):
            return NotImplemented
        return self.space == other.space and self._canon == other._canon

    def __hash__(self):
        return hash((self.space, self._canon))

    def __or__(self, other):
        return union(self, other)

    def __and__(self, other):
        return intersect(self, other)

    def __sub__(self, other):
        return difference(self, other)

    def __invert__(self):
        return complement(self)

    def __repr__(self):
        return f"ClopenSet(level={self.level}, labels={sorted(self.labels)})"

    def to_json(self) -> dict:
        return {"level": self.level, "labels": sorted(self.labels)}

    @classmethod
    def from_json(cls, space: OdometerType, obj: dict) -> "ClopenSet":
        try:
            return cls(space, int(obj["level"]), frozenset(obj["labels"]))
        except (KeyError, TypeError):
            raise DomainError('clopen set JSON must look like {"level": k, "labels": [...]}') from None

    @classmethod
    def full(cls, space: OdometerType) -> "ClopenSet":
        return cls(space, 1, frozenset(range(space.size(1))))

    @classmethod
    def empty(cls, space: OdometerType) -> "ClopenSet":
        return cls(space, 1, frozenset())


def cylinder(space: OdometerType, k: int, l: int) -> ClopenSet:
    """U(k, l): points whose level-k coordinate is l."""
    n = space.size(k)
    if not 0 <= l < n:
        raise DomainError(f"label {l} outside Z/{n}")
    return ClopenSet(space, k, frozenset({l}))


def refine(A: ClopenSet, k: int) -> ClopenSet:
    if k < A.level:
        raise DomainError(f"cannot refine from level {A.level} down to {k}")
    return ClopenSet(A.space, k, A.labels_at(k))


def _common(A: ClopenSet, B: ClopenSet) -> tuple[int, frozenset[int], frozenset[int]]:
    if A.space != B.space:
        raise DomainError("clopen sets live in different odometers")
    k = max(A.canonical().level, B.canonical().level)
    return k, A.labels_at(k), B.labels_at(k)


def union(A: ClopenSet, B: ClopenSet) -> ClopenSet:
    k, a, b = _common(A, B)
    return ClopenSet(A.space, k, a | b).canonical()


def intersect(A: ClopenSet, B: ClopenSet) -> ClopenSet:
    k, a, b = _common(A, B)
    return ClopenSet(A.space, k, a & b).canonical()


def difference(A: ClopenSet, B: ClopenSet) -> ClopenSet:
    k, a, b = _common(A, B)
    return ClopenSet(A.space, k, a - b).canonical()


def complement(A: ClopenSet) -> ClopenSet:
    n = A.space.size(A.level)
    return ClopenSet(A.space, A.level, frozenset(range(n)) - A.labels).canonical()


def translate(A: ClopenSet, m: int) -> ClopenSet:
    """T^m(A). The label shift is computed at A's stored level."""
    n = A.space.size(A.level)
    return ClopenSet(A.space, A.level, frozenset((l + m) % n for l in A.labels))


def measure(A: ClopenSet) -> Fraction:
    """Mass under the unique T-invariant probability measure."""
    return Fraction(len(A.labels), A.space.size(A.level))


def is_n_disjoint(A: ClopenSet, n: int) -> bool:
    """True iff A, T(A), ..., T^{n-1}(A) are pairwise disjoint."""
    if n < 1:
        raise DomainError("n must be positive")
    if A.is_empty():
        return True
    size = A.space.size(A.level)
    if n > size:
        # T^{n_k} fixes every level-k set
        return False
    seen: set[int] = set()
    for i in range(n):
        shifted = {(l + i) % size for l in A.labels}
        if seen & shifted:
            return False
        seen |= shifted
    return True


def first_return(A: ClopenSet, level: int | None = None) -> dict[int, int]:
    """First-return time t_A, as a map from the labels of A at ``level``.

    ``level`` defaults to the stored level of ``A``; the value is the same on
    every finer cylinder.
    """
    if A.is_empty():
        raise DomainError("the empty set has no first-return map")
    k = A.level if level is None else level
    labs = A.labels_at(k)
    n = A.space.size(k)
    ordered = sorted(labs)
    # gaps to the cyclic successor
    nxt = ordered[1:] + [ordered[0] + n]
    return {l: s - l for l, s in zip(ordered, nxt)}


def cylinders(space: OdometerType, k: int) -> Iterable[ClopenSet]:
    return (cylinder(space, k, l) for l in range(space.size(k)))
