"""Regular representations restricted along a finite-index subgroup.

For H <= G with left transversal x_1 = e, ..., x_n, the unitary
delta_{i,h} -> delta_{x_i h} identifies l^2(G) with n copies of l^2(H).
Under it lambda_G(g) becomes the n x n block matrix whose (i, j) block is
lambda_H(x_i^{-1} g x_j) when that element lies in H and zero otherwise.
All groups here are finite and given by multiplication tables.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Hashable, Sequence

from .algebra_closure import ExactMatrix, permutation_matrix
from .errors import DomainError
from .scalars import ONE

__all__ = [
    "FiniteGroup",
    "CosetSystem",
    "regular_rep",
    "coset_blocks",
    "block_matrix",
    "verify_corner",
    "catalog_group",
    "catalog_subgroup",
    "CATALOG",
]


@dataclass(frozen=True)
class FiniteGroup:
    """Group on {0, ..., N-1} with ``table[a][b] = a*b``."""

    table: tuple[tuple[int, ...], ...]
    identity: int = 0
    names: tuple[str, ...] | None = None
    elements: tuple | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        table = tuple(tuple(int(x) for x in row) for row in self.table)
        N = len(table)
        full = set(range(N))
        if any(len(r) != N or set(r) != full for r in table):
            raise DomainError("multiplication table is not a Latin square")
        if any(set(table[a][b] for a in range(N)) != full for b in range(N)):
            raise DomainError("multiplication table is not a Latin square")
        e = self.identity
        if any(table[e][a] != a or table[a][e] != a for a in range(N)):
            raise DomainError(f"element {e} is not an identity")
        if N <= 24:
            for a, b, c in itertools.product(range(N), repeat=3):
                if table[table[a][b]][c] != table[a][table[b][c]]:
                    raise DomainError(f"table is not associative at ({a}, {b}, {c})")
        object.__setattr__(self, "table", table)

    @property
    def order(self) -> int:
        return len(self.table)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.table[a].index(self.identity)

    def check(self, a: int) -> int:
        if not isinstance(a, int) or not 0 <= a < self.order:
            raise DomainError(f"{a!r} is not an element of a group of order {self.order}")
        return a

    def name(self, a: int) -> str:
        return self.names[a] if self.names else str(a)

    @classmethod
    def from_elements(cls, elements: Sequence[Hashable], mul: Callable, identity: Hashable, names=None) -> "FiniteGroup":
        pos = {x: i for i, x in enumerate(elements)}
        table = tuple(tuple(pos[mul(a, b)] for b in elements) for a in elements)
        names = tuple(names) if names else tuple(str(x) for x in elements)
        return cls(table, pos[identity], names, tuple(elements))

    def to_json(self) -> dict:
        return {"order": self.order, "table": [list(r) for r in self.table]}

    @classmethod
    def from_json(cls, obj: dict) -> "FiniteGroup":
        try:
            table = obj["table"]
        except (KeyError, TypeError):
            raise DomainError('group JSON must look like {"order": N, "table": [[...]]}') from None
        if "order" in obj and obj["order"] != len(table):
            raise DomainError("order does not match table size")
        return cls(tuple(map(tuple, table)), int(obj.get("identity", 0)))


@dataclass(frozen=True)
class CosetSystem:
    """Subgroup H (sorted element list) with left transversal, x_1 = e."""

    group: FiniteGroup
    subgroup: tuple[int, ...]
    transversal: tuple[int, ...]

    def __post_init__(self):
        G, H = self.group, tuple(sorted(self.subgroup))
        Hs = set(H)
        if G.identity not in Hs:
            raise DomainError("subgroup must contain the identity")
        if any(G.mul(a, G.inv(b)) not in Hs for a in H for b in H):
            raise DomainError("subset is not a subgroup")
        xs = tuple(self.transversal)
        if not xs or xs[0] != G.identity:
            raise DomainError("the first coset representative must be the identity")
        covered = [G.mul(x, h) for x in xs for h in H]
        if sorted(covered) != list(range(G.order)):
            raise DomainError("left cosets of the transversal do not partition the group")
        object.__setattr__(self, "subgroup", H)
        object.__setattr__(self, "transversal", xs)

    @classmethod
    def scan(cls, G: FiniteGroup, H: Sequence[int]) -> "CosetSystem":
        """Transversal found by scanning elements in order."""
        H = tuple(sorted(H))
        xs: list[int] = []
        seen: set[int] = set()
        for x in [G.identity] + [a for a in range(G.order) if a != G.identity]:
            if x in seen:
                continue
            xs.append(x)
            seen.update(G.mul(x, h) for h in H)
        return cls(G, H, tuple(xs))

    @property
    def index(self) -> int:
        return len(self.transversal)

    def h_position(self) -> dict[int, int]:
        return {h: p for p, h in enumerate(self.subgroup)}

    def unitary_index(self) -> dict[tuple[int, int], int]:
        """(i, position of h in H) -> x_i h; a bijection onto G."""
        G = self.group
        return {(i, p): G.mul(x, h) for i, x in enumerate(self.transversal) for p, h in enumerate(self.subgroup)}


def regular_rep(G: FiniteGroup, g: int) -> ExactMatrix:
    """lambda_G(g): delta_a -> delta_{g a}."""
    G.check(g)
    return permutation_matrix([G.mul(g, a) for a in range(G.order)])


def _subgroup_regular(system: CosetSystem, h: int) -> ExactMatrix:
    G, H = system.group, system.subgroup
    pos = system.h_position()
    return permutation_matrix([pos[G.mul(h, a)] for a in H])


def coset_blocks(system: CosetSystem, g: int) -> list[list[ExactMatrix | None]]:
    """Block form of lambda_G(g) in the coset decomposition; None is a zero block."""
    G = system.group
    G.check(g)
    Hs = set(system.subgroup)
    xs = system.transversal
    out: list[list[ExactMatrix | None]] = []
    for xi in xs:
        row = []
        for xj in xs:
            y = G.mul(G.mul(G.inv(xi), g), xj)
            row.append(_subgroup_regular(system, y) if y in Hs else None)
        out.append(row)
    return out


def block_matrix(blocks: Sequence[Sequence[ExactMatrix | None]], size: int) -> ExactMatrix:
    """Assemble blocks of side ``size`` into one matrix."""
    n = len(blocks)
    entries = {}
    for I, row in enumerate(blocks):
        for J, B in enumerate(row):
            if B is None:
                continue
            for (a, b), x in B._entries.items():
                entries[(I * size + a, J * size + b)] = x
    return ExactMatrix._wrap(n * size, entries)


def conjugated_regular(system: CosetSystem, g: int) -> ExactMatrix:
    """U* lambda_G(g) U computed directly from the unitary U."""
    index = system.unitary_index()
    order = sorted(index)  # (i, p) in block-major order
    U = ExactMatrix._wrap(system.group.order, {(index[ip], col): ONE for col, ip in enumerate(order)})
    return U.adjoint() * regular_rep(system.group, g) * U


def block_product(A, B):
    n = len(A)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = None
            for p in range(n):
                if A[i][p] is None or B[p][j] is None:
                    continue
                term = A[i][p] * B[p][j]
                acc = term if acc is None else acc + term
            row.append(acc)
        out.append(row)
    return out


def verify_corner(system: CosetSystem) -> bool:
    """Block (1, 1) of lambda_G(h) is lambda_H(h) for every h in H."""
    for h in system.subgroup:
        B = coset_blocks(system, h)[0][0]
        if B is None or B != _subgroup_regular(system, h):
            return False
    return True


# catalog

def _cyclic(n: int) -> FiniteGroup:
    return FiniteGroup.from_elements(list(range(n)), lambda a, b: (a + b) % n, 0)


def _perm_group(perms: Sequence[tuple[int, ...]]) -> FiniteGroup:
    perms = sorted(perms)
    ident = tuple(range(len(perms[0])))
    return FiniteGroup.from_elements(perms, lambda a, b: tuple(a[b[i]] for i in range(len(b))), ident)


def _closure(gens: Sequence[tuple[int, ...]]) -> list[tuple[int, ...]]:
    ident = tuple(range(len(gens[0])))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = tuple(g[a[i]] for i in range(len(a)))
                if b not in seen:
                    seen.add(b)
                    nxt.append(b)
        frontier = nxt
    return sorted(seen)


_QUAT = {  # unit products: (a, b) -> (sign, unit)
    ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
    ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
    ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
    ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
}


def _quaternion() -> FiniteGroup:
    elems = [(s, u) for u in "1ijk" for s in (1, -1)]

    def mul(a, b):
        s, u = _QUAT[(a[1], b[1])]
        return (a[0] * b[0] * s, u)

    names = [("" if s > 0 else "-") + u for s, u in elems]
    return FiniteGroup.from_elements(elems, mul, (1, "1"), names)


def _sym(n: int) -> FiniteGroup:
    return _perm_group(list(itertools.permutations(range(n))))


def _dihedral4() -> FiniteGroup:
    return _perm_group(_closure([(1, 2, 3, 0), (0, 3, 2, 1)]))


def catalog_group(name: str) -> FiniteGroup:
    """Built-in groups: z<n>, s3, s4, d4, q8."""
    name = name.lower()
    if name.startswith("z") and name[1:].isdigit() and int(name[1:]) >= 1:
        return _cyclic(int(name[1:]))
    if name == "s3":
        return _sym(3)
    if name == "s4":
        return _sym(4)
    if name == "d4":
        return _dihedral4()
    if name == "q8":
        return _quaternion()
    raise DomainError(f"unknown group {name!r}; choose from z<n>, s3, s4, d4, q8")


def _subgroup_generated(G: FiniteGroup, gens: Sequence[int]) -> tuple[int, ...]:
    seen = {G.identity}
    frontier = [G.identity]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = G.mul(a, g)
                if b not in seen:
                    seen.add(b)
                    nxt.append(b)
        frontier = nxt
    return tuple(sorted(seen))


def _even_perms(G: FiniteGroup) -> tuple[int, ...]:
    from .full_group import permutation_sign

    return tuple(a for a in range(G.order) if permutation_sign(G.elements[a]) == 1)


def catalog_subgroup(group_name: str, sub_name: str) -> tuple[FiniteGroup, tuple[int, ...]]:
    """Named subgroups: trivial, whole; d<m> in z<n>; a3; a4, v4; rotations; center, i."""
    G = catalog_group(group_name)
    g, s = group_name.lower(), sub_name.lower()
    if s == "trivial":
        return G, (G.identity,)
    if s == "whole":
        return G, tuple(range(G.order))
    if g.startswith("z") and s.startswith("d") and s[1:].isdigit():
        m = int(s[1:])
        if m < 1 or G.order % m:
            raise DomainError(f"{m} does not divide {G.order}")
        return G, tuple(range(0, G.order, m))
    if (g, s) in {("s3", "a3"), ("s4", "a4")}:
        return G, _even_perms(G)
    if (g, s) == ("s4", "v4"):
        wanted = {(0, 1, 2, 3), (1, 0, 3, 2), (2, 3, 0, 1), (3, 2, 1, 0)}
        return G, tuple(a for a in range(G.order) if G.elements[a] in wanted)
    if (g, s) == ("d4", "rotations"):
        r = [a for a in range(G.order) if G.elements[a] == (1, 2, 3, 0)]
        return G, _subgroup_generated(G, r)
    if (g, s) == ("q8", "center"):
        return G, tuple(a for a in range(G.order) if G.name(a) in {"1", "-1"})
    if (g, s) == ("q8", "i"):
        return G, tuple(a for a in range(G.order) if G.name(a) in {"1", "-1", "i", "-i"})
    raise DomainError(f"unknown subgroup {sub_name!r} of {group_name!r}")


CATALOG: tuple[tuple[str, str], ...] = (
    ("z4", "d2"),
    ("z6", "d3"),
    ("z6", "d2"),
    ("s3", "a3"),
    ("s3", "trivial"),
    ("s3", "whole"),
    ("s4", "a4"),
    ("s4", "v4"),
    ("d4", "rotations"),
    ("q8", "center"),
    ("q8", "i"),
)
