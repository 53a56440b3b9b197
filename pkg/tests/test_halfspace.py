"""Upper half-space model: points, ball map, distances, geodesic flow.

Reference values used below:
  * (z, t) = (0, 3) maps to the ball point (0, 0, 1/2): the divisor is
    (3+1)^2 = 16 and the height coordinate is (9-1)/16 = 1/2.
  * Points (0, 1) and (0, e^s) on the vertical axis are at distance |s|.
  * The point (1, 1) is at distance arccosh(sqrt(2)) = log(1 + sqrt(2))
    from the vertical axis: moving the axis to itself, cosh d =
    sqrt(1 + |z|^2/t^2) = sqrt(2).
"""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lh3.errors import ModelDomainError
from lh3.extcomplex import INF, ExtComplex
from lh3.halfspace import (
    BallPoint,
    GeodesicArc,
    HalfSpacePoint,
    TangentH3,
    apply_mobius,
    ball_from_halfspace,
    distance_point_to_geodesic,
    first_integrals,
    geodesic_from_initial,
    halfspace_from_ball,
    hyp_distance,
    hyp_inner,
    integrate_geodesic_ode,
    integrate_geodesic_ode_state,
)

common = settings(database=None, deadline=None)

coords = st.floats(-4.0, 4.0)
heights = st.floats(0.05, 20.0)
zs = st.builds(complex, coords, coords)
points = st.builds(HalfSpacePoint, zs, heights)

# Tangent data kept away from the vertical axis (|beta| >= 0.3) so that the
# resulting geodesics are half-circles with a moderate apex offset; the ratio
# a/|beta| <= 2/0.3 keeps arctanh well conditioned in parameter_of.
slopes = st.floats(-2.0, 2.0)
betas = st.builds(complex, st.floats(-2.0, 2.0), st.floats(-2.0, 2.0)).filter(
    lambda b: abs(b) >= 0.3
)

entries = st.builds(complex, st.floats(-2.0, 2.0), st.floats(-2.0, 2.0))
matrices = st.tuples(entries, entries, entries, entries).map(
    lambda e: ((e[0], e[1]), (e[2], e[3]))
).filter(lambda m: abs(m[0][0] * m[1][1] - m[0][1] * m[1][0]) > 0.1)


def _tangent(p, a, beta):
    return TangentH3(p, a, beta).normalized()


def test_point_validation():
    with pytest.raises(ModelDomainError):
        HalfSpacePoint(0j, 0.0)
    with pytest.raises(ModelDomainError):
        HalfSpacePoint(0j, -1.0)
    with pytest.raises(ModelDomainError):
        HalfSpacePoint(complex("nan"), 1.0)


def test_ball_point_validation():
    with pytest.raises(ModelDomainError):
        BallPoint([1.0, 0.0, 0.0])
    with pytest.raises(ModelDomainError):
        BallPoint([0.3, 0.4])
    q = BallPoint([0.1, -0.2, 0.3])
    with pytest.raises(ValueError):
        q.y[0] = 5.0  # coordinates are read-only


def test_ball_map_reference_points():
    centre = ball_from_halfspace(HalfSpacePoint(0j, 1.0))
    assert np.allclose(centre.y, [0.0, 0.0, 0.0], atol=1e-15)
    q = ball_from_halfspace(HalfSpacePoint(0j, 3.0))
    assert np.allclose(q.y, [0.0, 0.0, 0.5], atol=1e-15)


@common
@given(points)
def test_ball_roundtrip(p):
    q = ball_from_halfspace(p)
    assert np.dot(q.y, q.y) < 1.0
    back = halfspace_from_ball(q)
    scale = 1.0 + abs(p.z) + p.t
    assert abs(back.z - p.z) <= 1e-12 * scale
    assert abs(back.t - p.t) <= 1e-12 * scale


def test_vertical_distance():
    base = HalfSpacePoint(0j, 1.0)
    for s in (0.3, 1.0, 2.5, -1.7):
        q = HalfSpacePoint(0j, math.exp(s))
        assert hyp_distance(base, q) == pytest.approx(abs(s), abs=1e-12)


@common
@given(points, points)
def test_distance_symmetric_nonnegative(p, q):
    d = hyp_distance(p, q)
    assert d >= 0.0
    assert hyp_distance(q, p) == pytest.approx(d, abs=1e-12)
    assert hyp_distance(p, p) == 0.0


@common
@given(matrices, points, points)
def test_mobius_maps_are_isometries(m, p, q):
    d = hyp_distance(p, q)
    d2 = hyp_distance(apply_mobius(m, p), apply_mobius(m, q))
    assert d2 == pytest.approx(d, abs=1e-6, rel=1e-6)


def test_mobius_identity_and_validation():
    p = HalfSpacePoint(0.7 - 0.2j, 1.3)
    q = apply_mobius(((1 + 0j, 0j), (0j, 1 + 0j)), p)
    assert q.z == pytest.approx(p.z) and q.t == pytest.approx(p.t)
    with pytest.raises(ModelDomainError):
        apply_mobius(((1 + 0j, 2 + 0j), (2 + 0j, 4 + 0j)), p)


@common
@given(points, slopes, betas)
def test_tangent_normalization(p, a, beta):
    v = _tangent(p, a, beta)
    assert v.is_unit(1e-12)
    assert hyp_inner(v, v) == pytest.approx(v.norm() ** 2, rel=1e-12)


def test_tangent_edge_cases():
    p = HalfSpacePoint(0j, 2.0)
    with pytest.raises(ModelDomainError):
        TangentH3(p, 0.0, 0j).normalized()
    v = TangentH3(p, 1.0, 0j)
    w = TangentH3(HalfSpacePoint(1j, 2.0), 1.0, 0j)
    with pytest.raises(ModelDomainError):
        hyp_inner(v, w)


@common
@given(points, slopes, betas, st.floats(-2.0, 2.0))
def test_geodesic_from_initial(p, a, beta, r):
    v = _tangent(p, a, beta)
    g = geodesic_from_initial(p, v)
    start = g.point(0.0)
    assert abs(start.z - p.z) <= 1e-9 * (1 + abs(p.z))
    assert abs(start.t - p.t) <= 1e-9 * p.t
    v0 = g.velocity(0.0)
    assert abs(v0.a - v.a) <= 1e-9 * p.t
    assert abs(v0.beta - v.beta) <= 1e-9 * p.t
    vr = g.velocity(r)
    assert vr.is_unit(1e-9)
    assert g.parameter_of(g.point(r)) == pytest.approx(r, abs=1e-6)


def test_geodesic_vertical_case():
    p = HalfSpacePoint(2 - 1j, 0.5)
    up = TangentH3(p, p.t, 0j)
    g = geodesic_from_initial(p, up)
    assert g.kind == "vertical"
    q = g.point(1.0)
    assert q.z == p.z and q.t == pytest.approx(p.t * math.e, rel=1e-12)
    assert g.parameter_of(q) == pytest.approx(1.0, abs=1e-12)
    assert g.endpoints() == (ExtComplex(p.z), INF)


def test_arc_from_endpoints():
    arc = GeodesicArc.from_endpoints(-1 + 0j, 1 + 0j)
    b, e = arc.endpoints()
    assert b == ExtComplex(-1 + 0j) and e == ExtComplex(1 + 0j)
    apex = arc.point(0.0)
    assert apex.z == pytest.approx(0j) and apex.t == pytest.approx(1.0)
    down = GeodesicArc.from_endpoints(INF, 2j)
    assert down.endpoints() == (INF, ExtComplex(2j))
    assert down.point(1.0).t == pytest.approx(math.exp(-1.0))
    with pytest.raises(ModelDomainError):
        GeodesicArc.from_endpoints(1 + 0j, 1 + 0j)
    with pytest.raises(ModelDomainError):
        p = HalfSpacePoint(0j, 1.0)
        GeodesicArc.from_initial(p, TangentH3(p, 2.0, 0j))  # not unit


def test_ode_matches_closed_form():
    p = HalfSpacePoint(0.3 - 0.2j, 1.5)
    v = _tangent(p, 0.4, 1.0 - 0.5j)
    g = geodesic_from_initial(p, v)
    r = 1.7
    q = integrate_geodesic_ode(p, v, r, step=1e-3)
    assert hyp_distance(q, g.point(r)) < 1e-10


def test_first_integrals_conserved():
    p = HalfSpacePoint(-0.6 + 0.9j, 0.8)
    v = _tangent(p, -0.7, 0.5 + 1.2j)
    ref = first_integrals(
        np.array([p.t, p.z.real, p.z.imag, v.a, v.beta.real, v.beta.imag])
    )
    for r in (0.5, 1.5, -2.0):
        q, w = integrate_geodesic_ode_state(p, v, r, step=1e-3)
        state = np.array([q.t, q.z.real, q.z.imag, w.a, w.beta.real, w.beta.imag])
        assert np.allclose(first_integrals(state), ref, rtol=1e-9, atol=1e-12)


def test_distance_to_vertical_axis():
    axis = GeodesicArc.from_endpoints(0j, INF)
    d = distance_point_to_geodesic(HalfSpacePoint(1 + 0j, 1.0), axis)
    assert d == pytest.approx(math.log(1.0 + math.sqrt(2.0)), abs=1e-12)
    assert distance_point_to_geodesic(HalfSpacePoint(0j, 5.0), axis) == pytest.approx(
        0.0, abs=1e-12
    )


@common
@given(points, zs, zs)
def test_distance_foot_is_nearest(p, b, e):
    if abs(b - e) < 0.5:
        return
    g = GeodesicArc.from_endpoints(b, e)
    d, r_foot, foot = distance_point_to_geodesic(p, g, return_foot=True)
    assert hyp_distance(p, foot) == pytest.approx(d, abs=1e-7)
    assert hyp_distance(foot, g.point(r_foot)) == pytest.approx(0.0, abs=1e-6)
    for dr in (-0.4, 0.4):
        assert hyp_distance(p, g.point(r_foot + dr)) >= d - 1e-7
