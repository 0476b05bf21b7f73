"""The topological full group of the infinite dihedral action on an odometer.

J(x) = -x reverses the odometer and J T J = T^{-1}, so (m, flip) acts as
T^m J^flip. An element is a cocycle of such pairs on level-k cylinders;
on labels it acts by l -> (+-l + m) mod n_k.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .errors import DomainError, NotAHomeomorphism
from .full_group import FullGroupElement, from_cocycle, normal_form
from .odometer import OdometerType, _min_level_for

__all__ = [
    "DihedralScalar",
    "DihedralElement",
    "Letter",
    "embed",
    "gen_J",
    "gen_J_kl",
    "compose",
    "inverse",
    "decompose",
    "recompose",
    "restrict_flip_free",
]


@dataclass(frozen=True)
class DihedralScalar:
    """T^m J^flip in Z x| Z_2."""

    m: int
    flip: bool = False

    @property
    def sign(self) -> int:
        return -1 if self.flip else 1

    def __mul__(self, other: "DihedralScalar") -> "DihedralScalar":
        return DihedralScalar(self.m + self.sign * other.m, self.flip != other.flip)

    def inverse(self) -> "DihedralScalar":
        return DihedralScalar(-self.sign * self.m, self.flip)

    def on_label(self, l: int, n: int) -> int:
        return (self.sign * l + self.m) % n

    def to_json(self) -> dict:
        return {"m": self.m, "flip": self.flip}

    @classmethod
    def from_json(cls, obj) -> "DihedralScalar":
        if isinstance(obj, int):
            return cls(obj, False)
        return cls(int(obj["m"]), bool(obj.get("flip", False)))


IDENTITY_SCALAR = DihedralScalar(0, False)


@dataclass(frozen=True, eq=False)
class DihedralElement:
    space: OdometerType
    level: int
    cocycle: tuple[DihedralScalar, ...]

    def __post_init__(self):
        n = self.space.size(self.level)
        c = tuple(s if isinstance(s, DihedralScalar) else DihedralScalar(*s) for s in self.cocycle)
        if len(c) != n:
            raise DomainError(f"cocycle at level {self.level} needs {n} values, got {len(c)}")
        if len({s.on_label(l, n) for l, s in enumerate(c)}) != n:
            raise NotAHomeomorphism(f"label map of dihedral cocycle is not a bijection of Z/{n}")
        object.__setattr__(self, "cocycle", c)

    @cached_property
    def _canon(self) -> tuple[int, tuple[DihedralScalar, ...]]:
        c = self.cocycle

        def factors(m: int) -> bool:
            return all(c[l] == c[l % m] for l in range(len(c)))

        j = _min_level_for(self.space, self.level, factors)
        return j, c[: self.space.size(j)]

    @property
    def canonical_level(self) -> int:
        return self._canon[0]

    def canonical(self) -> "DihedralElement":
        j, c = self._canon
        return self if j == self.level else DihedralElement(self.space, j, c)

    def cocycle_at(self, k: int) -> tuple[DihedralScalar, ...]:
        j, c = self._canon
        self.space.check_level(k)
        if k < j:
            raise DomainError(f"element is not constant on level-{k} cylinders (canonical level {j})")
        m = len(c)
        return tuple(c[l % m] for l in range(self.space.size(k)))

    def label_map(self, k: int | None = None) -> tuple[int, ...]:
        k = self.level if k is None else k
        c = self.cocycle_at(k)
        n = len(c)
        return tuple(s.on_label(l, n) for l, s in enumerate(c))

    def flipped_labels(self, k: int) -> list[int]:
        return [l for l, s in enumerate(self.cocycle_at(k)) if s.flip]

    def is_flip_free(self) -> bool:
        return not any(s.flip for s in self._canon[1])

    def __eq__(self, other):
        if not isinstance(other, DihedralElement):
            return NotImplemented
        return self.space == other.space and self._canon == other._canon

    def __hash__(self):
        return hash((self.space, self._canon))

    def __mul__(self, other):
        if not isinstance(other, DihedralElement):
            return NotImplemented
        return compose(self, other)

    def __repr__(self):
        j, c = self._canon
        body = ", ".join(f"{s.m}{'J' if s.flip else ''}" for s in c)
        return f"DihedralElement(level={j}, [{body}])"

    def to_json(self) -> dict:
        return {"level": self.level, "cocycle": [s.to_json() for s in self.cocycle]}

    @classmethod
    def from_json(cls, space: OdometerType, obj: dict) -> "DihedralElement":
        try:
            return cls(space, int(obj["level"]), tuple(DihedralScalar.from_json(s) for s in obj["cocycle"])).canonical()
        except (KeyError, TypeError):
            raise DomainError('dihedral JSON must look like {"level": k, "cocycle": [{"m": 0, "flip": false}, ...]}') from None


def _make(space: OdometerType, k: int, c: Sequence[DihedralScalar]) -> DihedralElement:
    return DihedralElement(space, k, tuple(c)).canonical()


def embed(g: FullGroupElement) -> DihedralElement:
    """[[T]] as the flip-free subgroup."""
    return _make(g.space, g.level, [DihedralScalar(v, False) for v in g.cocycle])


def restrict_flip_free(g: DihedralElement) -> FullGroupElement:
    if not g.is_flip_free():
        raise DomainError("element flips some cylinder; it is not in [[T]]")
    j, c = g._canon
    return from_cocycle(g.space, j, [s.m for s in c])


def identity(space: OdometerType) -> DihedralElement:
    return _make(space, 1, [IDENTITY_SCALAR] * space.size(1))


def gen_J(space: OdometerType) -> DihedralElement:
    """J: x -> -x."""
    return _make(space, 1, [DihedralScalar(0, True)] * space.size(1))


def gen_J_kl(space: OdometerType, k: int, l: int) -> DihedralElement:
    """T^{2l} J on U(k, l), identity elsewhere; it maps U(k, l) onto itself."""
    n = space.size(k)
    if not 0 <= l < n:
        raise DomainError(f"label {l} outside Z/{n}")
    c = [IDENTITY_SCALAR] * n
    c[l] = DihedralScalar(2 * l, True)
    return _make(space, k, c)


def compose(g: DihedralElement, h: DihedralElement) -> DihedralElement:
    """g o h (apply h, then g)."""
    if g.space != h.space:
        raise DomainError("elements live in different odometers")
    k = max(g.canonical_level, h.canonical_level)
    cg, ch = g.cocycle_at(k), h.cocycle_at(k)
    n = len(cg)
    return _make(g.space, k, [cg[ch[l].on_label(l, n)] * ch[l] for l in range(n)])


def inverse(g: DihedralElement) -> DihedralElement:
    j, c = g._canon
    n = len(c)
    out = [IDENTITY_SCALAR] * n
    for l, s in enumerate(c):
        out[s.on_label(l, n)] = s.inverse()
    return _make(g.space, j, out)


@dataclass(frozen=True)
class Letter:
    """One generator in a level-k word.

    ``kind`` is ``"T"`` for T_{U(k,label)}^power, ``"sigma"`` for
    sigma_{U(k,0)} with ``perm`` in image form, ``"J"`` for J_{k,label}.
    """

    kind: str
    level: int
    label: int | None = None
    perm: tuple[int, ...] | None = None
    power: int = 1

    def element(self, space: OdometerType) -> DihedralElement:
        from .full_group import return_element, sigma_element
        from .odometer import cylinder

        if self.kind == "T":
            return embed(return_element(cylinder(space, self.level, self.label)) ** self.power)
        if self.kind == "sigma":
            return embed(sigma_element(cylinder(space, self.level, 0), self.perm))
        if self.kind == "J":
            return gen_J_kl(space, self.level, self.label)
        raise DomainError(f"unknown generator kind {self.kind!r}")

    def __str__(self):
        if self.kind == "T":
            return f"T_U({self.level},{self.label})^{self.power}"
        if self.kind == "sigma":
            return f"sigma_U({self.level},0){list(self.perm)}"
        return f"J_({self.level},{self.label})"

    def to_json(self) -> dict:
        out = {"kind": self.kind, "level": self.level}
        if self.label is not None:
            out["label"] = self.label
        if self.perm is not None:
            out["perm"] = list(self.perm)
        if self.kind == "T":
            out["power"] = self.power
        return out


def decompose(g: DihedralElement, k: int) -> list[Letter]:
    """Word in T_{U(k,l)}, sigma_{U(k,0)}, J_{k,l} whose product is g.

    The word is read as a composition, leftmost letter applied last. Flips
    are cleared first: with F the product of J_{k,l} over flipped labels,
    g o F is flip-free and is written by ``full_group.normal_form``.
    """
    flipped = g.flipped_labels(k)
    rest = g
    for l in flipped:
        rest = compose(rest, gen_J_kl(g.space, k, l))
    m, sigma = normal_form(restrict_flip_free(rest), k)
    word = [Letter("T", k, label=l, power=e) for l, e in enumerate(m) if e]
    if sigma != tuple(range(len(sigma))):
        word.append(Letter("sigma", k, perm=sigma))
    word.extend(Letter("J", k, label=l) for l in flipped)
    return word


def recompose(space: OdometerType, word: Sequence[Letter]) -> DihedralElement:
    out = identity(space)
    for letter in word:
        out = compose(out, letter.element(space))
    return out
