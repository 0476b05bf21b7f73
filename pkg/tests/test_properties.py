"""Property tests for the algebraic invariants, driven by hypothesis."""

from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from tfg import dihedral as dh
from tfg.algebra_closure import perm_plus_trivial, span_saturate, symmetric_group
from tfg.full_group import (
    act,
    compose,
    from_cocycle,
    identity,
    index,
    inverse,
    normal_form,
    from_normal_form,
    return_element,
)
from tfg.koopman import in_Bk, koopman_matrix, refine_matrix, tau
from tfg.laurent import LaurentMatrix
from tfg.odometer import (
    ClopenSet,
    OdometerType,
    complement,
    difference,
    first_return,
    intersect,
    is_n_disjoint,
    measure,
    refine,
    translate,
    union,
)

SPACES = [OdometerType((2, 4, 8)), OdometerType((3, 6, 12)), OdometerType((2, 6))]


@st.composite
def spaces(draw):
    return draw(st.sampled_from(SPACES))


@st.composite
def clopens(draw, space, nonempty=False):
    k = draw(st.integers(1, space.depth))
    n = space.size(k)
    labels = draw(st.frozensets(st.integers(0, n - 1), min_size=1 if nonempty else 0))
    return ClopenSet(space, k, labels)


@st.composite
def elements(draw, space, max_level=None):
    k = draw(st.integers(1, max_level or space.depth))
    n = space.size(k)
    perm = draw(st.permutations(range(n)))
    winds = draw(st.lists(st.integers(-2, 2), min_size=n, max_size=n))
    return from_cocycle(space, k, [perm[l] - l + n * w for l, w in enumerate(winds)])


@st.composite
def dihedral_elements(draw, space, max_level=None):
    k = draw(st.integers(1, max_level or space.depth))
    n = space.size(k)
    perm = draw(st.permutations(range(n)))
    flips = draw(st.lists(st.booleans(), min_size=n, max_size=n))
    winds = draw(st.lists(st.integers(-2, 2), min_size=n, max_size=n))
    cocycle = []
    for l in range(n):
        sign = -1 if flips[l] else 1
        cocycle.append(dh.DihedralScalar(perm[l] - sign * l + n * winds[l], flips[l]))
    return dh.DihedralElement(space, k, tuple(cocycle))


# odometer


@given(st.data())
def test_measure_additive_and_translation_invariant(data):
    X = data.draw(spaces())
    A, B = data.draw(clopens(X)), data.draw(clopens(X))
    m = data.draw(st.integers(-20, 20))
    assert measure(union(A, B)) + measure(intersect(A, B)) == measure(A) + measure(B)
    assert measure(difference(A, B)) + measure(intersect(A, B)) == measure(A)
    assert measure(complement(A)) == 1 - measure(A)
    assert measure(translate(A, m)) == measure(A)


@given(st.data())
def test_refine_preserves_structure(data):
    X = data.draw(spaces())
    A, B = data.draw(clopens(X)), data.draw(clopens(X))
    k = data.draw(st.integers(max(A.level, B.level), X.depth))
    m = data.draw(st.integers(-10, 10))
    assert refine(A, k) == A
    assert measure(refine(A, k)) == measure(A)
    assert translate(refine(A, k), m) == translate(A, m)
    assert union(refine(A, k), B) == union(A, B)


@given(st.data())
def test_translate_composes(data):
    X = data.draw(spaces())
    A = data.draw(clopens(X))
    m, m2 = data.draw(st.integers(-30, 30)), data.draw(st.integers(-30, 30))
    assert translate(translate(A, m), m2) == translate(A, m + m2)


@given(st.data())
def test_kac_identity(data):
    X = data.draw(spaces())
    A = data.draw(clopens(X, nonempty=True))
    t = first_return(A, A.level)
    assert sum(t.values()) == X.size(A.level)
    assert index(return_element(A)) == 1


@given(st.data())
def test_n_disjoint_monotone(data):
    X = data.draw(spaces())
    A = data.draw(clopens(X, nonempty=True))
    n = data.draw(st.integers(1, 14))
    if is_n_disjoint(A, n):
        assert all(is_n_disjoint(A, j) for j in range(1, n + 1))
        assert n * measure(A) <= 1


@given(st.data())
def test_first_return_transport(data):
    X = data.draw(spaces())
    A = data.draw(clopens(X, nonempty=True))
    j = data.draw(st.integers(-15, 15))
    n = X.size(A.level)
    t0, tj = first_return(A, A.level), first_return(translate(A, j), A.level)
    assert all(tj[(l + j) % n] == v for l, v in t0.items())


# full group


@given(st.data())
def test_group_laws(data):
    X = data.draw(spaces())
    g, h, f = (data.draw(elements(X)) for _ in range(3))
    assert compose(compose(g, h), f) == compose(g, compose(h, f))
    assert compose(g, identity(X)) == g == compose(identity(X), g)
    assert compose(g, inverse(g)).is_identity()


@given(st.data())
def test_action_compatible(data):
    X = data.draw(spaces())
    g, h = data.draw(elements(X)), data.draw(elements(X))
    A = data.draw(clopens(X))
    assert act(compose(g, h), A) == act(g, act(h, A))
    assert measure(act(g, A)) == measure(A)


@given(st.data())
def test_index_homomorphism(data):
    X = data.draw(spaces())
    g, h = data.draw(elements(X)), data.draw(elements(X))
    assert index(compose(g, h)) == index(g) + index(h)
    assert index(inverse(g)) == -index(g)


@given(st.data())
def test_disjoint_returns_commute(data):
    X = data.draw(spaces())
    A = data.draw(clopens(X, nonempty=True))
    B = difference(data.draw(clopens(X, nonempty=True)), A)
    TA, TB = return_element(A), return_element(B)
    assert compose(TA, TB) == compose(TB, TA)


@given(st.data())
def test_normal_form_roundtrip(data):
    X = data.draw(spaces())
    g = data.draw(elements(X))
    k = data.draw(st.integers(g.canonical_level, X.depth))
    m, sigma = normal_form(g, k)
    assert from_normal_form(X, k, m, sigma) == g


# koopman


@given(st.data())
def test_representation(data):
    X = data.draw(spaces())
    g, h = data.draw(elements(X)), data.draw(elements(X))
    k = data.draw(st.integers(max(g.canonical_level, h.canonical_level), X.depth))
    Pg, Ph = koopman_matrix(g, k), koopman_matrix(h, k)
    assert koopman_matrix(compose(g, h), k) == Pg * Ph
    assert koopman_matrix(inverse(g), k) == Pg.adjoint()
    assert Pg * Pg.adjoint() == LaurentMatrix.identity(X, k)


@given(st.data())
def test_tau_and_bk(data):
    X = data.draw(spaces())
    g, h = data.draw(elements(X)), data.draw(elements(X))
    k = data.draw(st.integers(max(g.canonical_level, h.canonical_level), X.depth))
    Pg, Ph = koopman_matrix(g, k), koopman_matrix(h, k)
    assert tau(Pg) == 1 and tau(Pg * Ph) == tau(Pg) * tau(Ph)
    D = Pg - Ph.scale(2)
    assert (tau(D.adjoint() * D)).re >= 0
    assert in_Bk(Pg * Ph) and in_Bk(Pg.adjoint()) and in_Bk(Pg + Ph)


@given(st.data())
def test_refine_matrix_homomorphism(data):
    X = data.draw(spaces())
    g, h = data.draw(elements(X, X.depth - 1)), data.draw(elements(X, X.depth - 1))
    k = data.draw(st.integers(max(g.canonical_level, h.canonical_level), X.depth - 1))
    Pg, Ph = koopman_matrix(g, k), koopman_matrix(h, k)
    assert refine_matrix(Pg) == koopman_matrix(g, k + 1)
    assert refine_matrix(Pg * Ph) == refine_matrix(Pg) * refine_matrix(Ph)
    assert refine_matrix(Pg + Ph) == refine_matrix(Pg) + refine_matrix(Ph)
    assert refine_matrix(Pg.adjoint()) == refine_matrix(Pg).adjoint()
    assert tau(refine_matrix(Pg - Ph.scale(Fraction(1, 3)))) == tau(Pg - Ph.scale(Fraction(1, 3)))


# algebra closure


@given(st.permutations(symmetric_group(3)), st.integers(1, 6))
def test_saturation_order_independent_and_idempotent(perms, count):
    gens = [perm_plus_trivial(p) for p in perms[:count]]
    a = span_saturate(gens)
    b = span_saturate(list(reversed(gens)))
    assert a.dimension == b.dimension and a.contains_all(b) and b.contains_all(a)
    again = span_saturate(a.basis)
    assert again.dimension == a.dimension and again.contains_all(a)


# dihedral


@given(st.data())
def test_dihedral_group_laws(data):
    X = data.draw(spaces())
    g, h, f = (data.draw(dihedral_elements(X)) for _ in range(3))
    assert dh.compose(dh.compose(g, h), f) == dh.compose(g, dh.compose(h, f))
    assert dh.compose(g, dh.inverse(g)) == dh.identity(X)


@given(st.data())
def test_dihedral_embed_homomorphism(data):
    X = data.draw(spaces())
    g, h = data.draw(elements(X)), data.draw(elements(X))
    assert dh.embed(compose(g, h)) == dh.compose(dh.embed(g), dh.embed(h))
    assert dh.restrict_flip_free(dh.embed(g)) == g


@given(st.data())
def test_dihedral_decompose(data):
    X = data.draw(spaces())
    g = data.draw(dihedral_elements(X))
    k = data.draw(st.integers(g.canonical_level, X.depth))
    assert dh.recompose(X, dh.decompose(g, k)) == g


@given(st.data())
def test_flip_parity_under_refinement(data):
    X = data.draw(spaces())
    g = data.draw(dihedral_elements(X, X.depth - 1))
    k = data.draw(st.integers(g.canonical_level, X.depth - 1))
    q = X.size(k + 1) // X.size(k)
    assert len(g.flipped_labels(k + 1)) == q * len(g.flipped_labels(k))
