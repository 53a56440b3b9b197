"""Optical scalars, densities and pointwise classification of congruences.

Reference congruence: the unit tube mu2 = conj(1/nu) (the normal lines of
the distance tubes around the geodesic with endpoints 0 and infinity).  Its
optical scalars are independent of nu; at e^(2r) = 3 they equal

    sigma = 3/4,   rho = -5/4   (zero twist),

the congruence is Lagrangian and Lorentzian, and the density Delta vanishes
at r = 0 (the caustic where neighbouring lines cross on the axis).

Holomorphic graphs mu2 = F(nu) have vanishing shear (S = 0) and generically
nonzero twist, so they classify as Riemannian.
"""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lh3.congruence import (
    Congruence,
    OpticalData,
    Partials,
    Rank2Graph,
    classify_metric,
    complex_point_defect,
    flatness_defect,
    frame_tangents,
    jacobians,
    lagrangian_defect,
    optical_scalars,
    pullback_metric,
    rank,
    reduced_densities,
    require_rank2,
)
from lh3.errors import CausticError, DegenerateError

common = settings(database=None, deadline=None)

# Sample points keeping the unit tube away from its chart singularities.
nus = st.builds(complex, st.floats(0.5, 2.0), st.floats(-1.0, 1.0)).filter(
    lambda z: abs(z) >= 0.5
)
rs = st.floats(0.2, 2.0)


def unit_tube():
    return Rank2Graph(
        lambda nu: (1.0 / nu).conjugate(),
        dF=lambda nu: (0j, -1.0 / nu.conjugate() ** 2),
    )


def holomorphic_graph():
    return Rank2Graph(lambda nu: nu**2 / 4.0, dF=lambda nu: (nu / 2.0, 0j))


@common
@given(nus)
def test_tube_benchmark_scalars(nu):
    od = optical_scalars(unit_tube(), nu, 0.5 * math.log(3.0))
    assert od.sigma == pytest.approx(0.75, abs=1e-12)
    assert od.rho == pytest.approx(-1.25, abs=1e-12)
    assert od.twist == pytest.approx(0.0, abs=1e-12)
    assert od.expansion == pytest.approx(-1.25, abs=1e-12)


def test_tube_caustic_at_axis():
    with pytest.raises(CausticError):
        optical_scalars(unit_tube(), 1.2 + 0.3j, 0.0)


@common
@given(nus, rs, rs)
def test_reduced_densities_are_fibre_independent(nu, r1, r2):
    tube = unit_tube()
    ell, s = reduced_densities(tube, nu)
    for r in (r1, r2):
        od = optical_scalars(tube, nu, r)
        assert od.delta * od.twist == pytest.approx(ell, abs=1e-10)
        assert od.delta * od.sigma == pytest.approx(s, abs=1e-10)


def test_tube_is_lagrangian_and_lorentzian():
    tube = unit_tube()
    for nu in (1.2 + 0.3j, 0.7 - 0.4j, 2.0 + 0j):
        assert lagrangian_defect(tube, nu) < 1e-14
        assert classify_metric(tube, nu) == "lorentzian"
        assert np.linalg.det(pullback_metric(tube, nu)) < 0.0
    ell, s = reduced_densities(tube, 2.0 + 0j)
    assert ell == pytest.approx(0.0, abs=1e-14)
    assert abs(s) == pytest.approx(0.5, abs=1e-12)


def test_holomorphic_graph_is_shear_free_and_riemannian():
    g = holomorphic_graph()
    nu = 1.0 + 1.0j
    assert complex_point_defect(g, nu) == 0.0
    assert classify_metric(g, nu) == "riemannian"
    m = pullback_metric(g, nu)
    assert np.linalg.det(m) > 0.0
    assert m[0, 1] == m[1, 0]
    # generically twisting, hence not Lagrangian
    assert lagrangian_defect(g, nu) > 1e-3


def test_finite_differences_match_analytic_partials():
    with_df = unit_tube()
    without_df = Rank2Graph(lambda nu: (1.0 / nu).conjugate())
    nu = 0.9 - 0.6j
    pa = with_df.derivatives(nu)
    pf = without_df.derivatives(nu)
    assert pf.dmu1 == pytest.approx(pa.dmu1, abs=1e-9)
    assert pf.dbmu1 == pytest.approx(pa.dbmu1, abs=1e-9)
    assert pf.dmu2 == pytest.approx(pa.dmu2, abs=1e-9)
    assert pf.dbmu2 == pytest.approx(pa.dbmu2, abs=1e-9)


def test_jacobian_brackets_are_antisymmetric():
    j = jacobians(unit_tube(), 1.1 + 0.2j)
    for k in ("1", "2", "1b", "2b"):
        assert j[(k, k)] == 0j
        for l in ("1", "2", "1b", "2b"):
            assert j[(k, l)] == -j[(l, k)]


def test_frame_tangents_span_the_pushforward():
    g = holomorphic_graph()
    nu = 0.8 + 0.5j
    ux, uy = frame_tangents(g, nu)
    # mu1 = nu: the frame pushes forward to (1, .) and (i, .)
    assert ux.dmu1 == pytest.approx(1.0 + 0j, abs=1e-12)
    assert uy.dmu1 == pytest.approx(1j, abs=1e-12)
    assert ux.dmu2 == pytest.approx(nu / 2.0, abs=1e-12)


def test_rank_detection():
    full = holomorphic_graph()
    assert rank(full, 0.4 + 0.2j) == 2
    require_rank2(full, 0.4 + 0.2j)

    folded = Congruence(
        lambda nu: (complex(nu.real), (1.0 / (nu + 2.0)).conjugate()),
        partials=lambda nu: Partials(0.5 + 0j, 0.5 + 0j, 0j,
                                     -1.0 / (nu + 2.0).conjugate() ** 2),
    )
    assert rank(folded, 0.3 + 0.1j) == 1
    with pytest.raises(DegenerateError):
        require_rank2(folded, 0.3 + 0.1j)

    frozen = Congruence(
        lambda nu: (0.5 + 0j, (1.0 / (nu + 2.0)).conjugate()),
        partials=lambda nu: Partials(0j, 0j, 0j,
                                     -1.0 / (nu + 2.0).conjugate() ** 2),
    )
    assert rank(frozen, 0.3 + 0.1j) == 0


def test_flatness_defect():
    antiholo = Congruence(
        lambda nu: (nu, 0.3 * nu.conjugate() + 0.1),
        partials=lambda nu: Partials(1.0 + 0j, 0j, 0j, 0.3 + 0j),
    )
    pts = [0.2 + 0.1j, 1.0 - 0.5j, -0.7 + 0.9j]
    assert flatness_defect(antiholo, pts) == 0.0
    assert flatness_defect(holomorphic_graph(), pts) == pytest.approx(
        max(abs(p) / 2 for p in pts), abs=1e-12
    )


def test_optical_data_record():
    od = OpticalData(sigma=0.75 + 0j, rho=-1.25 + 0.5j, delta=-2.0, r=0.3)
    assert od.twist == 0.5
    assert od.expansion == -1.25
