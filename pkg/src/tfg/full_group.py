"""Elements of the topological full group [[T]] of an odometer.

An element at level k is an integer cocycle c on Z/n_k: on the cylinder
U(k, l) it acts as T^{c(l)}. The induced label map l -> (l + c(l)) mod n_k
must be a permutation. Cocycle values are actual powers of T and are not
reduced; the Koopman matrix needs the winding they carry.

Composition follows function composition: ``compose(g, h)`` applies ``h``
first.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .errors import DomainError, NotAHomeomorphism
from .odometer import ClopenSet, OdometerType, _min_level_for, cylinder, first_return, is_n_disjoint

__all__ = [
    "FullGroupElement",
    "from_cocycle",
    "identity",
    "power_of_T",
    "sigma_element",
    "return_element",
    "compose",
    "inverse",
    "commutator",
    "act",
    "index",
    "normal_form",
    "from_normal_form",
    "in_derived_at_level",
    "in_derived_up_to",
    "permutation_sign",
]


def permutation_sign(perm: Sequence[int]) -> int:
    """Sign of a permutation of range(len(perm)), via cycle count."""
    seen = [False] * len(perm)
    transpositions = 0
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        transpositions += length - 1
    return -1 if transpositions % 2 else 1


@dataclass(frozen=True, eq=False)
class FullGroupElement:
    """A homeomorphism of X that is locally a power of T.

    ``cocycle[l]`` is the power of T applied on U(level, l). The stored
    level may be finer than necessary; equality and hashing compare
    canonical forms.
    """

    space: OdometerType
    level: int
    cocycle: tuple[int, ...]

    def __post_init__(self):
        n = self.space.size(self.level)
        c = tuple(int(v) for v in self.cocycle)
        if len(c) != n:
            raise DomainError(f"cocycle at level {self.level} needs {n} values, got {len(c)}")
        if len({(l + v) % n for l, v in enumerate(c)}) != n:
            raise NotAHomeomorphism(f"label map of cocycle {list(c)} is not a bijection of Z/{n}")
        object.__setattr__(self, "cocycle", c)

    @cached_property
    def _canon(self) -> tuple[int, tuple[int, ...]]:
        c = self.cocycle

        def factors(m: int) -> bool:
            return all(c[l] == c[l % m] for l in range(len(c)))

        j = _min_level_for(self.space, self.level, factors)
        return j, c[: self.space.size(j)]

    def canonical(self) -> "FullGroupElement":
        j, c = self._canon
        if j == self.level:
            return self
        return FullGroupElement(self.space, j, c)

    @property
    def canonical_level(self) -> int:
        return self._canon[0]

    def cocycle_at(self, k: int) -> tuple[int, ...]:
        j, c = self._canon
        self.space.check_level(k)
        if k < j:
            raise DomainError(f"element is not constant on level-{k} cylinders (canonical level {j})")
        m = len(c)
        return tuple(c[l % m] for l in range(self.space.size(k)))

    def at_level(self, k: int) -> "FullGroupElement":
        """The same element with its cocycle written at level ``k``."""
        return FullGroupElement(self.space, k, self.cocycle_at(k))

    def label_map(self, k: int | None = None) -> tuple[int, ...]:
        k = self.level if k is None else k
        c = self.cocycle_at(k)
        n = len(c)
        return tuple((l + v) % n for l, v in enumerate(c))

    def is_identity(self) -> bool:
        return not any(self._canon[1])

    def __eq__(self, other):
        if not isinstance(other, FullGroupElement):
            return NotImplemented
        return self.space == other.space and self._canon == other._canon

    def __hash__(self):
        return hash((self.space, self._canon))

    def __mul__(self, other):
        if not isinstance(other, FullGroupElement):
            return NotImplemented
        return compose(self, other)

    def __pow__(self, e: int):
        if e < 0:
            return inverse(self) ** (-e)
        out = identity(self.space)
        for _ in range(e):
            out = compose(out, self)
        return out

    def __repr__(self):
        j, c = self._canon
        return f"FullGroupElement(level={j}, cocycle={list(c)})"

    def to_json(self) -> dict:
        return {"level": self.level, "cocycle": list(self.cocycle)}

    @classmethod
    def from_json(cls, space: OdometerType, obj: dict) -> "FullGroupElement":
        try:
            return from_cocycle(space, int(obj["level"]), obj["cocycle"])
        except (KeyError, TypeError):
            raise DomainError('element JSON must look like {"level": k, "cocycle": [...]}') from None


def from_cocycle(space: OdometerType, k: int, c: Sequence[int]) -> FullGroupElement:
    """Validated, canonicalized element with cocycle ``c`` at level ``k``."""
    return FullGroupElement(space, k, tuple(c)).canonical()


def identity(space: OdometerType) -> FullGroupElement:
    return FullGroupElement(space, 1, (0,) * space.size(1))


def power_of_T(space: OdometerType, m: int) -> FullGroupElement:
    return FullGroupElement(space, 1, (m,) * space.size(1))


def sigma_element(A: ClopenSet, sigma: Sequence[int]) -> FullGroupElement:
    """sigma_A: permute the levels A, T(A), ..., T^{n-1}(A) of a tower.

    ``sigma`` is given in image form, ``sigma[i]`` being the image of i.
    Points outside the tower are fixed.
    """
    n = len(sigma)
    if sorted(sigma) != list(range(n)):
        raise DomainError(f"{list(sigma)} is not a permutation of 0..{n - 1}")
    if not is_n_disjoint(A, n):
        raise DomainError(f"set is not {n}-disjoint")
    size = A.space.size(A.level)
    c = [0] * size
    for i in range(n):
        for l in A.labels:
            c[(l + i) % size] = sigma[i] - i
    return from_cocycle(A.space, A.level, c)


def return_element(A: ClopenSet) -> FullGroupElement:
    """T_A: first return to A on A, identity elsewhere."""
    if A.is_empty():
        return identity(A.space)
    size = A.space.size(A.level)
    c = [0] * size
    for l, t in first_return(A).items():
        c[l] = t
    return from_cocycle(A.space, A.level, c)


def _common_level(*gs: FullGroupElement) -> int:
    space = gs[0].space
    for g in gs[1:]:
        if g.space != space:
            raise DomainError("elements live in different odometers")
    return max(g.canonical_level for g in gs)


def compose(g: FullGroupElement, h: FullGroupElement) -> FullGroupElement:
    """g o h (apply h, then g)."""
    k = _common_level(g, h)
    cg, ch = g.cocycle_at(k), h.cocycle_at(k)
    n = len(cg)
    c = [cg[(l + ch[l]) % n] + ch[l] for l in range(n)]
    return from_cocycle(g.space, k, c)


def inverse(g: FullGroupElement) -> FullGroupElement:
    j, c = g._canon
    n = len(c)
    out = [0] * n
    for l, v in enumerate(c):
        out[(l + v) % n] = -v
    return from_cocycle(g.space, j, out)


def commutator(g: FullGroupElement, h: FullGroupElement) -> FullGroupElement:
    """[g, h] = g h g^-1 h^-1."""
    return compose(compose(g, h), compose(inverse(g), inverse(h)))


def act(g: FullGroupElement, A: ClopenSet) -> ClopenSet:
    """The image g(A)."""
    if g.space != A.space:
        raise DomainError("element and set live in different odometers")
    k = max(g.canonical_level, A.canonical().level)
    rho = g.label_map(k)
    return ClopenSet(A.space, k, frozenset(rho[l] for l in A.labels_at(k))).canonical()


def index(g: FullGroupElement) -> int:
    """The index homomorphism [[T]] -> Z: mean value of the cocycle."""
    j, c = g._canon
    total = sum(c)
    n = len(c)
    if total % n:
        raise AssertionError(f"cocycle sum {total} not divisible by {n}")
    return total // n


def normal_form(g: FullGroupElement, k: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Write g = (prod_l T_{U(k,l)}^{m_l}) o sigma_{U(k,0)}.

    Returns ``(m, sigma)`` with ``sigma`` the level-k label permutation in
    image form. A point of U(k, l) is first moved to U(k, sigma(l)) by the
    tower permutation, then wound ``m[sigma(l)]`` times around by the
    first-return map of its new cylinder.
    """
    c = g.cocycle_at(k)
    n = len(c)
    sigma = tuple((l + v) % n for l, v in enumerate(c))
    m = [0] * n
    for l, v in enumerate(c):
        q, r = divmod(v - (sigma[l] - l), n)
        assert r == 0
        m[sigma[l]] = q
    return tuple(m), sigma


def from_normal_form(space: OdometerType, k: int, m: Sequence[int], sigma: Sequence[int]) -> FullGroupElement:
    """Recompose an element from generators, the inverse of ``normal_form``."""
    out = sigma_element(cylinder(space, k, 0), sigma)
    for l, e in enumerate(m):
        if e:
            out = compose(return_element(cylinder(space, k, l)) ** e, out)
    return out


def in_derived_at_level(g: FullGroupElement, k: int) -> bool:
    """Membership in the commutator subgroup of the level-k group Z^{n_k} x| S_{n_k}.

    The criterion is: cocycle sum zero and even label permutation. True
    implies membership in [[T]]'; False only says nothing is decided at
    this level.
    """
    c = g.cocycle_at(k)
    return sum(c) == 0 and permutation_sign(g.label_map(k)) == 1


def in_derived_up_to(g: FullGroupElement, K: int | None = None) -> bool:
    """Semi-decision for [[T]]': some level between the canonical one and K certifies it."""
    K = g.space.depth if K is None else K
    return any(in_derived_at_level(g, k) for k in range(g.canonical_level, K + 1))


def all_sigma_elements(space: OdometerType, k: int) -> list[FullGroupElement]:
    """sigma_{U(k,0)} for every sigma in S_{n_k}."""
    A = cylinder(space, k, 0)
    return [sigma_element(A, p) for p in itertools.permutations(range(space.size(k)))]
