"""Extended complex plane: arithmetic on the sphere and the chordal metric."""

import math

import pytest
from hypothesis import given, settings, strategies as st

from lh3.extcomplex import INF, ExtComplex, chordal

finite = st.complex_numbers(
    max_magnitude=50.0, allow_nan=False, allow_infinity=False
)
nonzero = finite.filter(lambda z: abs(z) > 1e-6)
points = st.one_of(finite.map(ExtComplex), st.just(INF))

common = settings(database=None, deadline=None)


def test_zero_default():
    assert ExtComplex().value == 0j
    assert not ExtComplex().is_inf


def test_infinity_forms():
    assert ExtComplex.infinity().is_inf
    assert ExtComplex(None).is_inf
    assert ExtComplex(complex("inf")).is_inf
    assert INF.is_inf
    with pytest.raises(ValueError):
        _ = INF.value
    with pytest.raises(ValueError):
        ExtComplex(complex("nan"))


def test_wrapping_is_idempotent():
    x = ExtComplex(2 - 1j)
    assert ExtComplex(x) == x
    assert ExtComplex(INF).is_inf


@common
@given(finite)
def test_value_roundtrip(z):
    assert ExtComplex(z).value == z


def test_reciprocal_special_values():
    assert ExtComplex(0j).reciprocal().is_inf
    assert INF.reciprocal() == ExtComplex(0j)
    assert ExtComplex(2j).reciprocal() == ExtComplex(-0.5j)


@common
@given(nonzero)
def test_reciprocal_involution(z):
    x = ExtComplex(z)
    assert x.reciprocal().reciprocal().isclose(x, 1e-12 * (1 + abs(z)))


def test_antipode_special_values():
    assert ExtComplex(0j).antipode().is_inf
    assert INF.antipode() == ExtComplex(0j)
    # tau(x) = -1/conj(x)
    assert ExtComplex(2j).antipode() == ExtComplex(-1.0 / (-2j))


@common
@given(points)
def test_antipode_involution_and_max_distance(x):
    y = x.antipode()
    assert y.antipode().isclose(x, 1e-9)
    # antipodal pairs realize the chordal diameter of the sphere
    assert chordal(x, y) == pytest.approx(2.0, abs=1e-12)


@common
@given(points, points)
def test_chordal_symmetric_bounded(x, y):
    d = chordal(x, y)
    assert 0.0 <= d <= 2.0 + 1e-12
    assert d == pytest.approx(chordal(y, x), abs=1e-15)


@common
@given(points, points, points)
def test_chordal_triangle_inequality(x, y, z):
    assert chordal(x, z) <= chordal(x, y) + chordal(y, z) + 1e-9


def test_chordal_values():
    assert chordal(ExtComplex(0j), INF) == pytest.approx(2.0)
    # 2|x-y|/sqrt((1+|x|^2)(1+|y|^2)) on finite pairs
    assert chordal(ExtComplex(1 + 0j), ExtComplex(-1 + 0j)) == pytest.approx(2.0)
    assert chordal(ExtComplex(0j), ExtComplex(1 + 0j)) == pytest.approx(
        2.0 / math.sqrt(2.0)
    )


def test_equality_tolerance_and_hash():
    assert ExtComplex(1 + 0j) == ExtComplex(1 + 1e-14j)
    assert ExtComplex(1 + 0j) != ExtComplex(1 + 1e-6j)
    assert ExtComplex(1 + 0j) != INF
    assert INF == ExtComplex.infinity()
    assert hash(INF) == hash(ExtComplex.infinity())


def test_json_roundtrip():
    for x in (ExtComplex(0.5 - 2j), ExtComplex(0j), INF):
        assert ExtComplex.from_json(x.to_json()) == x
    assert ExtComplex.from_json([1.0, -2.0]) == ExtComplex(1 - 2j)
    assert ExtComplex.from_json("inf").is_inf
    with pytest.raises(ValueError):
        ExtComplex.from_json({"re": 1})


def test_mobius_totality():
    # z -> (z + 1)/(z - 1): pole at 1, fixes the sphere
    assert ExtComplex(1 + 0j).mobius(1, 1, 1, -1).is_inf
    assert INF.mobius(1, 1, 1, -1) == ExtComplex(1 + 0j)
    assert ExtComplex(0j).mobius(1, 1, 1, -1) == ExtComplex(-1 + 0j)
    # translation keeps infinity fixed
    assert INF.mobius(1, 5, 0, 1).is_inf


@common
@given(finite)
def test_mobius_identity(z):
    assert ExtComplex(z).mobius(1, 0, 0, 1).isclose(ExtComplex(z), 1e-12)
