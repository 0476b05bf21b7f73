"""The Koopman representation of [[T]] in the finite-level matrix model.

``koopman_matrix(g, k)`` is the image of pi(g) in C(T, M_{n_k}): column l
has a single entry z^w at row (l + c(l)) mod n_k, where
w = floor((l + c(l)) / n_k) counts how many times the orbit segment wraps
past the top of the level-k tower. This is the unique convention with
delta(1)^m = delta(m).
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import DomainError, Inconclusive
from .full_group import (
    FullGroupElement,
    act,
    compose,
    inverse,
    power_of_T,
    sigma_element,
)
from .laurent import LaurentMatrix, LaurentPoly
from .linalg import EchelonSpan
from .odometer import ClopenSet, OdometerType, is_n_disjoint, translate
from .scalars import ZERO, GaussRational, as_gauss

__all__ = [
    "indicator",
    "delta",
    "koopman_matrix",
    "refine_matrix",
    "evaluate",
    "tau",
    "in_Bk",
    "exact_in_Bk",
    "matrix_units",
    "HereditaryIdentity",
    "hereditary_identity",
    "combination_matrix",
    "kernel_span_check",
    "wedge_separating_power",
]


def indicator(A: ClopenSet, k: int) -> LaurentMatrix:
    """1_A in A_k: the diagonal projection onto the labels of A at level k."""
    labs = A.labels_at(k)
    return LaurentMatrix(A.space, k, {(l, l): LaurentPoly.monomial(0) for l in labs})


def delta(space: OdometerType, m: int, k: int) -> LaurentMatrix:
    """delta_m = pi(T^m) at level k."""
    n = space.size(k)
    entries = {}
    for j in range(n):
        q, r = divmod(j + m, n)
        entries[(r, j)] = LaurentPoly.monomial(q)
    return LaurentMatrix(space, k, entries)


def koopman_matrix(g: FullGroupElement, k: int | None = None) -> LaurentMatrix:
    k = g.canonical_level if k is None else k
    c = g.cocycle_at(k)
    n = len(c)
    entries = {}
    for l, v in enumerate(c):
        q, r = divmod(l + v, n)
        entries[(r, l)] = LaurentPoly.monomial(q)
    return LaurentMatrix(g.space, k, entries)


def refine_matrix(M: LaurentMatrix, k: int | None = None) -> LaurentMatrix:
    """Image of M under the inclusion A_level -> A_k (default: next level).

    1_{U(level, i)} goes to the sum of its level-k subcylinders and delta_m
    is unchanged.
    """
    k = M.level + 1 if k is None else k
    if k < M.level:
        raise DomainError(f"cannot refine from level {M.level} down to {k}")
    M.space.check_level(k)
    if k == M.level:
        return M
    n, N = M.n, M.space.size(k)
    terms = []
    for i, m, c in M.terms():
        for i2 in range(i, N, n):
            terms.append((i2, m, c))
    return LaurentMatrix.from_terms(M.space, k, terms)


def evaluate(M: LaurentMatrix, z):
    """Evaluate entrywise at a point of the unit circle.

    Exact for a Gaussian rational z with |z| = 1 (returns a list of rows);
    floating for complex z with ||z| - 1| <= 1e-12 (returns a numpy array).
    """
    if isinstance(z, (GaussRational, int)) and not isinstance(z, bool):
        z = as_gauss(z)
        if z.norm() != 1:
            raise DomainError(f"|z|^2 = {z.norm()} is not 1")
        n = M.n
        rows = [[ZERO] * n for _ in range(n)]
        for (i, j), p in M.entries.items():
            rows[i][j] = p.evaluate(z)
        return rows
    return M.evaluate(z)


def tau(M: LaurentMatrix) -> GaussRational:
    """The vector state at the constant function 1_X.

    On pi([[T]]) this is the character coming from the trivial
    subrepresentation: tau(1_{U(k,i)} delta_m) = mu(U(k,i)).
    """
    total = ZERO
    for p in M.entries.values():
        total = total + p.at_one()
    return total * Fraction(1, M.n)


def exact_in_Bk(rows: Sequence[Sequence]) -> bool:
    """All row sums and all column sums coincide."""
    n = len(rows)
    sums = {sum(rows[i], ZERO) for i in range(n)}
    sums |= {sum((rows[i][j] for i in range(n)), ZERO) for j in range(n)}
    return len(sums) <= 1


def in_Bk(M: LaurentMatrix) -> bool:
    """Whether the fiber of M at z = 1 lies in B_k."""
    return exact_in_Bk(M.at_one())


def matrix_units(A: ClopenSet, n: int, k: int) -> dict[tuple[int, int], LaurentMatrix]:
    """E_{i,j} = 1_{T^i(A)} delta_{i-j} for an n-disjoint A, at level k."""
    if not is_n_disjoint(A, n):
        raise DomainError(f"set is not {n}-disjoint")
    return {
        (i, j): indicator(translate(A, i), k) * delta(A.space, i - j, k)
        for i in range(n)
        for j in range(n)
    }


def combination_matrix(space: OdometerType, k: int, combo: Sequence[tuple[object, FullGroupElement]]) -> LaurentMatrix:
    """sum of coefficient * pi(g) at level k."""
    out = LaurentMatrix.zero(space, k)
    for coef, g in combo:
        out = out + koopman_matrix(g, k).scale(coef)
    return out


@dataclass(frozen=True)
class HereditaryIdentity:
    """Both sides of (1 - pi(g)) 1_A (1 - pi(h)) = (1 - delta_a) 1_A (1 - delta_b).

    ``witness`` writes the right-hand side as an integer combination of
    Koopman unitaries, certifying membership in span pi([[T]]).
    """

    lhs: LaurentMatrix
    rhs: LaurentMatrix
    witness: tuple[tuple[int, FullGroupElement], ...]
    shift_left: int
    shift_right: int

    @property
    def witness_matrix(self) -> LaurentMatrix:
        return combination_matrix(self.lhs.space, self.lhs.level, self.witness)

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs == self.witness_matrix


def _constant_power(g: FullGroupElement, B: ClopenSet) -> int:
    k = max(g.canonical_level, B.canonical().level)
    c = g.cocycle_at(k)
    values = {c[l] for l in B.labels_at(k)}
    if len(values) != 1:
        raise DomainError(f"element is not a single power of T on the given set (powers {sorted(values)})")
    return values.pop()


def _telescope_left(n: int) -> list[tuple[int, int]]:
    # 1 - delta_n = sum s * delta_a (1 - delta_1)
    if n >= 0:
        return [(a, 1) for a in range(n)]
    return [(a, -1) for a in range(n, 0)]


def _telescope_right(m: int) -> list[tuple[int, int]]:
    # 1 - delta_m = sum t * (1 - delta_{-1}) delta_b
    if m <= 0:
        return [(b, 1) for b in range(0, m, -1)]
    return [(b, -1) for b in range(m, 0, -1)]


def hereditary_identity(g: FullGroupElement, h: FullGroupElement, A: ClopenSet, k: int | None = None) -> HereditaryIdentity:
    """Compute (delta_0 - pi(g)) 1_A (delta_0 - pi(h)) two ways.

    Requires A 2-disjoint, g equal to a single power T^a on A, and h equal
    to a single power T^b on h^{-1}(A). The witness expands
    (delta_0 - delta_a) 1_A (delta_0 - delta_b) by telescoping into terms
    delta_x (delta_0 - pi(s_A)) delta_y with s_A the swap of A and T(A).
    """
    space = A.space
    if A.is_empty():
        raise DomainError("A must be nonempty")
    if not is_n_disjoint(A, 2):
        raise DomainError("A must be 2-disjoint")
    a = _constant_power(g, A)
    pre = act(inverse(h), A)
    b = _constant_power(h, pre)
    if k is None:
        k = max(g.canonical_level, h.canonical_level, A.canonical().level, pre.canonical().level)
    one = LaurentMatrix.identity(space, k)
    proj = indicator(A, k)
    lhs = (one - koopman_matrix(g, k)) * proj * (one - koopman_matrix(h, k))
    rhs = (one - delta(space, a, k)) * proj * (one - delta(space, b, k))

    swap = sigma_element(A, (1, 0))
    coeffs: dict[FullGroupElement, int] = {}
    for x, s in _telescope_left(a):
        for y, t in _telescope_right(b):
            st = s * t
            for elem, sign in (
                (power_of_T(space, x + y), st),
                (compose(power_of_T(space, x), compose(swap, power_of_T(space, y))), -st),
            ):
                coeffs[elem] = coeffs.get(elem, 0) + sign
    witness = tuple((c, e) for e, c in sorted(coeffs.items(), key=lambda kv: repr(kv[0])) if c)
    return HereditaryIdentity(lhs, rhs, witness, a, b)


def _vec(M: LaurentMatrix) -> dict:
    return {(i, j, e): c for (i, j), p in M.entries.items() for e, c in p.items()}


def kernel_span_check(sample: Sequence[FullGroupElement], d: LaurentMatrix) -> bool:
    """Decide whether d lies in span{1 - pi(g) : g in sample}.

    Returns False when tau(d) != 0 (d is then outside ker tau altogether).
    Raises ``Inconclusive`` when tau(d) = 0 but the finite sample does not
    span d; only the closed span over all of [[T]] is claimed to contain it.
    """
    if tau(d) != 0:
        return False
    k = d.level
    one = LaurentMatrix.identity(d.space, k)
    span = EchelonSpan()
    for g in sample:
        span.add(_vec(one - koopman_matrix(g, k)))
    if _vec(d) in span:
        return True
    raise Inconclusive("d is in ker tau but outside the span of the given sample")


def kernel_span_coefficients(sample: Sequence[FullGroupElement], d: LaurentMatrix) -> dict[int, GaussRational] | None:
    """Coefficients a with d = sum a[i] (1 - pi(sample[i])), if they exist."""
    k = d.level
    one = LaurentMatrix.identity(d.space, k)
    span = EchelonSpan()
    for g in sample:
        span.add(_vec(one - koopman_matrix(g, k)))
    return span.solve(_vec(d))


def wedge_separating_power(x: Sequence[complex], y: Sequence[complex], max_power: int = 256, tol: float = 1e-9) -> tuple[int, int, int] | None:
    """Find (i, j, k) with (x_i - 1)^k (x_j - 1) != (y_i - 1)^k (y_j - 1).

    x and y are distinct points of the torus T^n off the wedge of circles
    (each has at least two coordinates different from 1). Returns None if
    no separating monomial with exponent <= max_power is found.
    """
    n = len(x)
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            for k in range(1, max_power + 1):
                fx = (x[i] - 1) ** k * (x[j] - 1)
                fy = (y[i] - 1) ** k * (y[j] - 1)
                if abs(fx - fy) > tol:
                    return i, j, k
    return None


def is_unitary(M: LaurentMatrix, samples: int = 8, tol: float = 1e-12) -> bool:
    """Numerical unitarity at evenly spaced points of the circle."""
    for s in range(samples):
        z = cmath.exp(2j * cmath.pi * (s + 0.5) / samples)
        U = M.evaluate(z)
        if not np.allclose(U @ U.conj().T, np.eye(M.n), atol=tol, rtol=0):
            return False
    return True
