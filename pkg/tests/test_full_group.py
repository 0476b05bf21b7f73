import pytest

from tfg.errors import DomainError, NotAHomeomorphism
from tfg.full_group import (
    FullGroupElement,
    act,
    all_sigma_elements,
    compose,
    from_cocycle,
    from_normal_form,
    identity,
    in_derived_at_level,
    in_derived_up_to,
    index,
    normal_form,
    permutation_sign,
    power_of_T,
    return_element,
    sigma_element,
)
from tfg.odometer import ClopenSet, OdometerType, cylinder, translate
from tfg.oracles import ball, box_elements, derived_reach


def test_from_cocycle(X24):
    assert from_cocycle(X24, 1, [1, 1]) == power_of_T(X24, 1)
    assert from_cocycle(X24, 1, [1, -1]) == sigma_element(cylinder(X24, 1, 0), (1, 0))
    with pytest.raises(NotAHomeomorphism):
        from_cocycle(X24, 1, [1, 0])


def test_canonical_level(X24):
    g = from_cocycle(X24, 2, [1, 1, 1, 1])
    assert g.canonical_level == 1
    assert g == power_of_T(X24, 1)
    assert g.cocycle_at(2) == (1, 1, 1, 1)


def test_power_of_T(X24):
    assert power_of_T(X24, 0).is_identity()
    assert power_of_T(X24, 1).cocycle_at(1) == (1, 1)
    g = power_of_T(X24, -3)
    assert g.cocycle_at(2) == (-3, -3, -3, -3)
    assert sorted(g.label_map(1)) == [0, 1]


def test_sigma_element(X24):
    s = sigma_element(cylinder(X24, 1, 0), (1, 0))
    assert s.cocycle_at(1) == (1, -1)
    assert sigma_element(cylinder(X24, 2, 0), (0, 1, 2, 3)).is_identity()
    assert sigma_element(cylinder(X24, 2, 0), (1, 2, 3, 0)).cocycle_at(2) == (1, 1, 1, -3)
    with pytest.raises(DomainError):
        sigma_element(cylinder(X24, 1, 0), (1, 2, 0))


def test_return_element(X24):
    assert return_element(cylinder(X24, 1, 0)).cocycle_at(1) == (2, 0)
    assert return_element(ClopenSet.empty(X24)).is_identity()
    assert return_element(ClopenSet(X24, 2, frozenset({1, 3}))).cocycle_at(2) == (0, 2, 0, 2)


def test_compose_examples(X24):
    T, Tinv = power_of_T(X24, 1), power_of_T(X24, -1)
    assert compose(T, Tinv).is_identity()
    s = sigma_element(cylinder(X24, 1, 0), (1, 0))
    assert compose(s, s).is_identity()
    assert compose(return_element(cylinder(X24, 1, 0)), s) == T
    with pytest.raises(DomainError):
        compose(T, power_of_T(OdometerType((2, 6)), 1))


def test_act(X24):
    T = power_of_T(X24, 1)
    assert act(T, cylinder(X24, 2, 1)) == cylinder(X24, 2, 2)
    A = cylinder(X24, 2, 0)
    sigma = (2, 0, 3, 1)
    s = sigma_element(A, sigma)
    for i in range(4):
        assert act(s, translate(A, i)) == translate(A, sigma[i])
    assert act(identity(X24), A) == A


def test_index(X24):
    for m in (-3, 0, 2):
        assert index(power_of_T(X24, m)) == m
    assert index(sigma_element(cylinder(X24, 2, 0), (3, 1, 0, 2))) == 0
    for labels in ({0}, {1, 3}, {0, 1, 2}):
        assert index(return_element(ClopenSet(X24, 2, frozenset(labels)))) == 1


def test_normal_form(X24):
    assert normal_form(power_of_T(X24, 1), 1) == ((1, 0), (1, 0))
    assert normal_form(identity(X24), 1) == ((0, 0), (0, 1))
    assert normal_form(return_element(cylinder(X24, 1, 0)), 1) == ((1, 0), (0, 1))
    with pytest.raises(DomainError):
        normal_form(return_element(cylinder(X24, 2, 0)), 1)


def test_normal_form_roundtrip(X248, rng):
    from tfg.sampling import random_element

    for _ in range(50):
        k = rng.randint(1, 3)
        g = random_element(X248, rng, k, spread=3)
        m, sigma = normal_form(g, k)
        assert from_normal_form(X248, k, m, sigma) == g


def test_in_derived_examples(X24):
    s = sigma_element(cylinder(X24, 1, 0), (1, 0))
    assert not in_derived_at_level(s, 1)
    assert in_derived_at_level(s, 2)
    assert in_derived_up_to(s)
    T = power_of_T(X24, 1)
    assert not in_derived_at_level(T, 1) and not in_derived_at_level(T, 2)
    with pytest.raises(DomainError):
        in_derived_at_level(return_element(cylinder(X24, 2, 0)), 1)


def test_permutation_sign():
    assert permutation_sign((0, 1, 2)) == 1
    assert permutation_sign((1, 0, 2)) == -1
    assert permutation_sign((1, 2, 0)) == 1


@pytest.mark.parametrize("n,bound", [(2, 4), (3, 6)])
def test_derived_criterion_matches_word_oracle_on_box(n, bound):
    X = OdometerType((n,))
    reach = derived_reach(X, 1, bound)
    for g in box_elements(X, 1, bound):
        assert in_derived_at_level(g, 1) == (g in reach), g


def test_derived_criterion_matches_word_oracle_on_ball_n4():
    X = OdometerType((4,))
    reach = derived_reach(X, 1, 8)
    for g in ball(X, 1, 3, 8):
        assert in_derived_at_level(g, 1) == (g in reach), g


@pytest.mark.parametrize("levels", [(2, 4), (4, 8), (3, 6), (2, 6)])
def test_sign_under_refinement(levels):
    X = OdometerType(levels)
    q = X.size(2) // X.size(1)
    for s in all_sigma_elements(X, 1):
        lifted = permutation_sign(s.label_map(2))
        if q % 2 == 0:
            assert lifted == 1
        else:
            assert lifted == permutation_sign(s.label_map(1))


def test_json_roundtrip(X24):
    g = from_cocycle(X24, 2, [2, -1, 5, -2])
    data = g.to_json()
    assert data == {"level": 2, "cocycle": [2, -1, 5, -2]}
    assert FullGroupElement.from_json(X24, data) == g
