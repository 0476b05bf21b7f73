from fractions import Fraction

import pytest

from tfg.laurent import LaurentPoly
from tfg.scalars import GaussRational, as_gauss


def test_field_arithmetic():
    a, b = GaussRational(1, 2), GaussRational("1/3", -1)
    assert a * b == GaussRational(Fraction(1, 3) + 2, 2 * Fraction(1, 3) - 1)
    assert (a / b) * b == a
    assert a - a == 0
    assert GaussRational(0, 1) ** 2 == -1
    assert GaussRational(3) == 3 and GaussRational(3) == Fraction(3)
    assert hash(GaussRational(Fraction(1, 2))) == hash(Fraction(1, 2))
    with pytest.raises(ZeroDivisionError):
        GaussRational(0).reciprocal()


def test_floats_rejected():
    with pytest.raises(TypeError):
        as_gauss(0.5)


def test_json():
    x = GaussRational("-2/7", "5/3")
    assert x.to_json() == {"re": "-2/7", "im": "5/3"}
    assert GaussRational.from_json(x.to_json()) == x


def test_laurent_poly():
    z = LaurentPoly.monomial(1)
    zi = LaurentPoly.monomial(-1)
    assert z * zi == LaurentPoly.monomial(0)
    assert (z + zi).star() == z + zi
    p = z * 3 + LaurentPoly.monomial(-2, GaussRational(0, 1))
    assert p.at_one() == GaussRational(3, 1)
    assert p.evaluate(GaussRational(0, 1)) == GaussRational(0, 3) + GaussRational(0, -1)
    assert not (p - p)
    assert LaurentPoly.from_json(p.to_json()) == p
