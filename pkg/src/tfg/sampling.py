"""Seeded random generation of clopen sets and group elements."""

from __future__ import annotations

import random

from .dihedral import DihedralElement, DihedralScalar
from .full_group import FullGroupElement, from_cocycle
from .odometer import ClopenSet, OdometerType


def random_clopen(space: OdometerType, rng: random.Random, level: int | None = None, nonempty: bool = True) -> ClopenSet:
    k = rng.randint(1, space.depth) if level is None else level
    n = space.size(k)
    while True:
        labels = frozenset(l for l in range(n) if rng.random() < 0.5)
        if labels or not nonempty:
            return ClopenSet(space, k, labels)


def random_element(space: OdometerType, rng: random.Random, level: int | None = None, spread: int = 2) -> FullGroupElement:
    """Random element of the level-k group: a label permutation plus windings.

    Cocycle values are sigma(l) - l + n_k * w with |w| <= spread.
    """
    k = rng.randint(1, space.depth) if level is None else level
    n = space.size(k)
    sigma = list(range(n))
    rng.shuffle(sigma)
    c = [sigma[l] - l + n * rng.randint(-spread, spread) for l in range(n)]
    return from_cocycle(space, k, c)


def random_dihedral(space: OdometerType, rng: random.Random, level: int | None = None, spread: int = 2) -> DihedralElement:
    k = rng.randint(1, space.depth) if level is None else level
    n = space.size(k)
    sigma = list(range(n))
    rng.shuffle(sigma)
    c = []
    for l in range(n):
        flip = rng.random() < 0.5
        sign = -1 if flip else 1
        c.append(DihedralScalar(sigma[l] - sign * l + n * rng.randint(-spread, spread), flip))
    return DihedralElement(space, k, tuple(c)).canonical()
