"""Independent brute-force oracles used by the tests and verify suites.

None of these call the routine they are meant to check.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Sequence

import numpy as np

from .full_group import (
    FullGroupElement,
    commutator,
    compose,
    from_cocycle,
    inverse,
    return_element,
    sigma_element,
)
from .odometer import ClopenSet, OdometerType, cylinder


def first_return_brute(A: ClopenSet) -> dict[int, int]:
    """Step T one label at a time at the finest level until re-entering A."""
    K = A.space.depth
    n = A.space.size(K)
    fine = A.labels_at(K)
    coarse = A.space.size(A.level)
    out: dict[int, int] = {}
    for l in fine:
        m = 1
        while (l + m) % n not in fine:
            m += 1
        key = l % coarse
        if key in out and out[key] != m:
            raise AssertionError("first return is not constant on a cylinder")
        out[key] = m
    return out


def level_generators(space: OdometerType, k: int) -> list[FullGroupElement]:
    """T_{U(k,l)} for every l, and sigma_{U(k,0)} for adjacent transpositions."""
    n = space.size(k)
    gens = [return_element(cylinder(space, k, l)) for l in range(n)]
    for i in range(n - 1):
        p = list(range(n))
        p[i], p[i + 1] = p[i + 1], p[i]
        gens.append(sigma_element(cylinder(space, k, 0), p))
    return gens


def _in_box(g: FullGroupElement, k: int, bound: int) -> bool:
    return g.canonical_level <= k and max(abs(v) for v in g.cocycle_at(k)) <= bound


def ball(space: OdometerType, k: int, radius: int, bound: int) -> set[FullGroupElement]:
    """Elements within ``radius`` generator steps, staying inside the cocycle box."""
    gens = level_generators(space, k)
    steps = gens + [inverse(g) for g in gens]
    e = from_cocycle(space, 1, [0] * space.size(1))
    seen = {e}
    frontier = [e]
    for _ in range(radius):
        nxt = []
        for a in frontier:
            for s in steps:
                b = compose(s, a)
                if b not in seen and _in_box(b, k, bound):
                    seen.add(b)
                    nxt.append(b)
        frontier = nxt
    return seen


def commutator_words(space: OdometerType, k: int, conj_depth: int = 1) -> list[FullGroupElement]:
    """Commutators of generators and their conjugates by short words."""
    gens = level_generators(space, k)
    steps = gens + [inverse(g) for g in gens]
    comms = {commutator(a, b) for a in steps for b in steps}
    conjugators = {from_cocycle(space, 1, [0] * space.size(1))}
    layer = set(conjugators)
    for _ in range(conj_depth):
        layer = {compose(s, w) for s in steps for w in layer}
        conjugators |= layer
    out = {compose(w, compose(c, inverse(w))) for c in comms for w in conjugators}
    out.discard(from_cocycle(space, 1, [0] * space.size(1)))
    return sorted(out, key=repr)


def derived_reach(space: OdometerType, k: int, bound: int, depth: int = 6, conj_depth: int = 1) -> set[FullGroupElement]:
    """Breadth-first products of commutator words, inside the cocycle box."""
    words = commutator_words(space, k, conj_depth)
    words = words + [inverse(w) for w in words]
    e = from_cocycle(space, 1, [0] * space.size(1))
    seen = {e}
    frontier = [e]
    for _ in range(depth):
        nxt = []
        for a in frontier:
            for w in words:
                b = compose(w, a)
                if b not in seen and _in_box(b, k, bound):
                    seen.add(b)
                    nxt.append(b)
        frontier = nxt
        if not frontier:
            break
    return seen


def box_elements(space: OdometerType, k: int, bound: int) -> list[FullGroupElement]:
    """Every element with cocycle values in [-bound, bound] at level k."""
    n = space.size(k)
    out = []
    for c in itertools.product(range(-bound, bound + 1), repeat=n):
        if len({(l + v) % n for l, v in enumerate(c)}) == n:
            out.append(from_cocycle(space, k, c))
    return out


def trivial_plus_perm_character(perm: Sequence[int]) -> int:
    return 1 + sum(1 for i, p in enumerate(perm) if i == p)


def algebra_dimension_from_characters(group: Iterable[Sequence[int]]) -> int:
    """dim span rho(G) for rho = trivial + permutation, from characters alone.

    The trace Gram matrix <rho(g), rho(h)> = chi(g^{-1} h) has rank equal to
    the dimension of span rho(G), which is the unital *-algebra generated.
    """
    group = [tuple(p) for p in group]

    def inv(p):
        q = [0] * len(p)
        for i, v in enumerate(p):
            q[v] = i
        return tuple(q)

    def mul(a, b):
        return tuple(a[b[i]] for i in range(len(b)))

    gram = np.array(
        [[trivial_plus_perm_character(mul(inv(g), h)) for h in group] for g in group],
        dtype=float,
    )
    return int(np.linalg.matrix_rank(gram))
