"""Oriented geodesics of hyperbolic 3-space as pairs of sphere coordinates.

An oriented geodesic is labelled by (mu1, mu2) on the sphere, off the
reflected diagonal mu1 * conj(mu2) = -1 (which would collapse the two
boundary endpoints).  The boundary endpoints are

    begin = -mu1,        end = 1 / conj(mu2),

and orientation reversal is (mu1, mu2) -> (tau(mu2), tau(mu1)) with the
antipodal map tau(x) = -1/conj(x).

Where mu1 is finite and mu2 is finite nonzero, the geodesic is traced at
unit speed by

    z(r) = (1 - mu1 conj(mu2)) / (2 conj(mu2))
           + ((1 + mu1 conj(mu2)) / (2 conj(mu2))) tanh r,
    t(r) = |1 + conj(mu1) mu2| / (2 |mu2| cosh r),

a half-circle with apex at r = 0.  An alternative chart (xi, eta), xi != 0,
records the inverse apex height and the apex plane position:

    xi = 2 mu2 / (1 + conj(mu1) mu2),   eta = (1 - mu1 conj(mu2)) / (2 conj(mu2)).
"""

from dataclasses import dataclass

import numpy as np

from .errors import ChartSingularError, InvalidGeodesicError
from .extcomplex import INF, ExtComplex
from .halfspace import GeodesicArc, HalfSpacePoint, TangentH3

__all__ = [
    "OrientedGeodesic",
    "XiEtaChart",
    "point_at",
    "velocity_at",
    "endpoints",
    "from_endpoints",
    "reverse_orientation",
    "geodesic_from_point_direction",
    "xi_eta_from_initial",
    "geodesic_from_xi_eta",
    "xi_eta_of",
    "arc_of",
    "shift_into_chart",
]


@dataclass(frozen=True)
class OrientedGeodesic:
    """Sphere-coordinate label (mu1, mu2) of an oriented geodesic."""

    mu1: ExtComplex
    mu2: ExtComplex

    def __post_init__(self):
        object.__setattr__(self, "mu1", ExtComplex(self.mu1))
        object.__setattr__(self, "mu2", ExtComplex(self.mu2))
        b, e = _endpoints(self.mu1, self.mu2)
        if b == e:
            raise InvalidGeodesicError(
                "coincident endpoints: (mu1, mu2) lies on the reflected diagonal"
            )

    def in_chart(self):
        """True when the unit-speed parameterization exists for this label."""
        return not (self.mu1.is_inf or self.mu2.is_inf or self.mu2.value == 0)

    def to_json(self):
        return {"mu1": self.mu1.to_json(), "mu2": self.mu2.to_json()}

    @classmethod
    def from_json(cls, obj):
        return cls(ExtComplex.from_json(obj["mu1"]), ExtComplex.from_json(obj["mu2"]))


def _endpoints(mu1, mu2):
    return -mu1, mu2.conj().reciprocal()


def endpoints(g):
    """Boundary endpoints (begin, end) of the oriented geodesic."""
    return _endpoints(g.mu1, g.mu2)


def from_endpoints(begin, end):
    """Oriented geodesic with the given distinct boundary endpoints."""
    begin = ExtComplex(begin)
    end = ExtComplex(end)
    return OrientedGeodesic(-begin, end.conj().reciprocal())


def reverse_orientation(g):
    """Swap the endpoints: (mu1, mu2) -> (tau(mu2), tau(mu1))."""
    return OrientedGeodesic(g.mu2.antipode(), g.mu1.antipode())


def _chart_values(g):
    if not g.in_chart():
        raise ChartSingularError(
            "geodesic outside the parameterization chart (mu1 infinite or mu2 in {0, inf})"
        )
    return g.mu1.value, g.mu2.value


def point_at(g, r):
    """Point of the geodesic at arclength r from the apex."""
    mu1, mu2 = _chart_values(g)
    m2b = mu2.conjugate()
    z = (1 - mu1 * m2b) / (2 * m2b) + ((1 + mu1 * m2b) / (2 * m2b)) * np.tanh(r)
    t = abs(1 + mu1.conjugate() * mu2) / (2 * abs(mu2) * np.cosh(r))
    if t == 0:
        raise ChartSingularError("degenerate label: apex height vanishes")
    return HalfSpacePoint(z, t)


def velocity_at(g, r):
    """Unit tangent of the geodesic at arclength r."""
    mu1, mu2 = _chart_values(g)
    m2b = mu2.conjugate()
    p = point_at(g, r)
    sech = 1.0 / np.cosh(r)
    a = -abs(1 + mu1.conjugate() * mu2) / (2 * abs(mu2)) * sech * np.tanh(r)
    beta = ((1 + mu1 * m2b) / (2 * m2b)) * sech**2
    return TangentH3(p, a, beta)


def arc_of(g):
    """GeodesicArc tracing the oriented geodesic (same orientation, apex at r=0)."""
    b, e = endpoints(g)
    return GeodesicArc.from_endpoints(b, e)


@dataclass(frozen=True)
class XiEtaChart:
    """Alternative label: xi = inverse apex height times phase, eta = apex position."""

    xi: complex
    eta: complex

    def __post_init__(self):
        object.__setattr__(self, "xi", complex(self.xi))
        object.__setattr__(self, "eta", complex(self.eta))
        if self.xi == 0:
            raise ChartSingularError("xi must be nonzero")


def geodesic_from_xi_eta(chart):
    """(xi, eta) -> (mu1, mu2) = (1/conj(xi) - eta, xi / (1 + xi conj(eta)))."""
    xi, eta = chart.xi, chart.eta
    mu1 = ExtComplex(1.0 / xi.conjugate() - eta)
    den = 1.0 + xi * eta.conjugate()
    mu2 = INF if den == 0 else ExtComplex(xi / den)
    return OrientedGeodesic(mu1, mu2)


def xi_eta_of(g):
    """Inverse chart change; requires the parameterization chart."""
    mu1, mu2 = _chart_values(g)
    den = 1.0 + mu1.conjugate() * mu2
    if den == 0:
        raise ChartSingularError("xi undefined: 1 + conj(mu1) mu2 = 0")
    xi = 2.0 * mu2 / den
    eta = (1.0 - mu1 * mu2.conjugate()) / (2.0 * mu2.conjugate())
    return XiEtaChart(xi, eta)


def xi_eta_from_initial(p, v, tol=1e-9):
    """(xi, eta) of the geodesic through p with unit direction v.

    xi = beta / t0^2, eta = z0 + t0 a / conj(beta); vertical directions
    (beta = 0) have no (xi, eta) label.
    """
    if not v.is_unit(tol):
        raise ChartSingularError(
            f"direction must be unit (norm {v.norm():.6g}); call .normalized()"
        )
    if abs(v.beta) <= tol * p.t:
        raise ChartSingularError("vertical direction: (xi, eta) chart undefined")
    xi = v.beta / p.t**2
    eta = p.z + p.t * v.a / v.beta.conjugate()
    return XiEtaChart(xi, eta)


def geodesic_from_point_direction(p, v, tol=1e-9):
    """Oriented geodesic through p with unit initial direction v."""
    if not v.is_unit(tol):
        raise ChartSingularError(
            f"direction must be unit (norm {v.norm():.6g}); call .normalized()"
        )
    if abs(v.beta) <= tol * p.t:
        if v.a > 0:
            return OrientedGeodesic(ExtComplex(-p.z), ExtComplex(0j))
        return OrientedGeodesic(INF, ExtComplex(p.z).conj().reciprocal())
    return geodesic_from_xi_eta(xi_eta_from_initial(p, v, tol))


# Boundary isometries tried, in order, when a label sits outside the chart.
_CHART_MOVES = (
    ((1 + 0j, 0j), (0j, 1 + 0j)),       # identity
    ((1 + 0j, 1 + 0j), (0j, 1 + 0j)),   # z + 1
    ((1 + 0j, 2 + 0j), (0j, 1 + 0j)),   # z + 2
    ((1 + 0j, -1 + 0j), (1 + 0j, 0j)),  # 1 - 1/z
    ((1 + 0j, 1 + 0j), (1 + 0j, -1 + 0j)),  # (z+1)/(z-1)
    ((1 + 0j, 2 + 0j), (1 + 0j, -2 + 0j)),  # (z+2)/(z-2)
)


def shift_into_chart(g):
    """Move a chart-singular label into the chart by a boundary isometry.

    Returns (g2, m) where m is a 2x2 boundary Moebius matrix applied to both
    endpoints, so the half-space extension of m carries the geodesic of g to
    the geodesic of g2.  A handful of fixed moves (translations, an inversion
    and two involutions) covers every singular configuration.
    """
    b0, e0 = endpoints(g)
    for m in _CHART_MOVES:
        b = b0.mobius(*m[0], *m[1])
        e = e0.mobius(*m[0], *m[1])
        if b.is_inf or e.is_inf or e.value == 0:
            continue
        return from_endpoints(b, e), m
    raise ChartSingularError("no chart move found")  # unreachable
