"""Models of hyperbolic 3-space and its geodesics.

Upper half-space model: points (z, t) with z = x1 + i x2 and t > 0, metric
ds^2 = (|dz|^2 + dt^2) / t^2.  Poincare ball model: y in R^3 with |y| < 1.

Unit-speed geodesics admit closed forms.  With initial point (z0, t0) and
initial velocity (a, beta) -- a vertical, beta horizontal complex, unit iff
a^2 + |beta|^2 = t0^2 -- and q = |beta| != 0:

    t(r) = (t0^2 / q) sech(r + r0),   z(r) = eta + (beta t0^2 / q^2) tanh(r + r0),
    cosh r0 = t0 / q,  sinh r0 = -a / q,  eta = z0 + t0 a / conj(beta),

a half-circle orthogonal to the boundary.  beta = 0 gives the vertical line
t(r) = t0 exp(sgn(a) r), z = z0.
"""

from dataclasses import dataclass

import numpy as np

from .errors import ModelDomainError
from .extcomplex import INF, ExtComplex

__all__ = [
    "HalfSpacePoint",
    "BallPoint",
    "TangentH3",
    "GeodesicArc",
    "ball_from_halfspace",
    "halfspace_from_ball",
    "hyp_distance",
    "hyp_inner",
    "geodesic_from_initial",
    "integrate_geodesic_ode",
    "integrate_geodesic_ode_state",
    "distance_point_to_geodesic",
    "apply_mobius",
]


@dataclass(frozen=True)
class HalfSpacePoint:
    """Point (z, t) of the upper half-space, t > 0."""

    z: complex
    t: float

    def __post_init__(self):
        object.__setattr__(self, "z", complex(self.z))
        object.__setattr__(self, "t", float(self.t))
        if not np.isfinite(self.t) or not np.isfinite(abs(self.z)):
            raise ModelDomainError("half-space point must be finite")
        if self.t <= 0:
            raise ModelDomainError(f"half-space height must be positive, got {self.t}")


class BallPoint:
    """Point of the Poincare ball, |y| < 1."""

    __slots__ = ("y",)

    def __init__(self, y):
        y = np.asarray(y, dtype=float)
        if y.shape != (3,):
            raise ModelDomainError("ball point needs three real coordinates")
        if not np.all(np.isfinite(y)):
            raise ModelDomainError("ball point must be finite")
        if np.dot(y, y) >= 1.0:
            raise ModelDomainError(f"ball point must satisfy |y| < 1, got |y| = {np.linalg.norm(y)}")
        y.setflags(write=False)
        self.y = y

    def __repr__(self):
        return f"BallPoint({self.y.tolist()})"


@dataclass(frozen=True)
class TangentH3:
    """Tangent vector (a, beta) at a half-space point: a vertical, beta horizontal."""

    base: HalfSpacePoint
    a: float
    beta: complex

    def __post_init__(self):
        object.__setattr__(self, "a", float(self.a))
        object.__setattr__(self, "beta", complex(self.beta))

    def norm(self):
        """Hyperbolic length sqrt(a^2 + |beta|^2) / t."""
        return (self.a**2 + abs(self.beta) ** 2) ** 0.5 / self.base.t

    def is_unit(self, tol=1e-9):
        return abs(self.norm() - 1.0) <= tol

    def normalized(self):
        n = (self.a**2 + abs(self.beta) ** 2) ** 0.5
        if n == 0:
            raise ModelDomainError("cannot normalize the zero vector")
        s = self.base.t / n
        return TangentH3(self.base, self.a * s, self.beta * s)


def hyp_inner(u, v):
    """Hyperbolic inner product of two tangent vectors at the same point."""
    if u.base != v.base:
        raise ModelDomainError("tangent vectors must share a base point")
    t = u.base.t
    return (u.a * v.a + (u.beta * v.beta.conjugate()).real) / t**2


def ball_from_halfspace(p):
    """Conformal map of the upper half-space onto the unit ball.

    (0, 1) goes to the centre; the boundary plane t=0 goes to the lower
    hemisphere boundary, the point at vertical infinity to the north pole.
    """
    x1, x2, t = p.z.real, p.z.imag, p.t
    d = (t + 1.0) ** 2 + x1**2 + x2**2
    return BallPoint(
        [2.0 * x1 / d, 2.0 * x2 / d, (t**2 + x1**2 + x2**2 - 1.0) / d]
    )


def halfspace_from_ball(q):
    """Inverse of ball_from_halfspace."""
    y1, y2, y3 = q.y
    e = (1.0 - y3) ** 2 + y1**2 + y2**2
    if e == 0:
        raise ModelDomainError("north pole corresponds to vertical infinity")
    t = (1.0 - y1**2 - y2**2 - y3**2) / e
    return HalfSpacePoint(complex(2.0 * y1 / e, 2.0 * y2 / e), t)


def hyp_distance(p, q):
    """Hyperbolic distance, cosh d = 1 + (|z_p - z_q|^2 + (t_p - t_q)^2) / (2 t_p t_q)."""
    w = abs(p.z - q.z) ** 2 + (p.t - q.t) ** 2
    return float(np.arccosh(1.0 + w / (2.0 * p.t * q.t)))


class GeodesicArc:
    """Unit-speed geodesic r -> (z(r), t(r)) in the half-space model."""

    def __init__(self, kind, **params):
        if kind not in ("circle", "vertical"):
            raise ValueError(f"unknown geodesic kind {kind!r}")
        self.kind = kind
        self.params = params

    @classmethod
    def from_initial(cls, p, v, tol=1e-9):
        if not v.is_unit(tol):
            raise ModelDomainError(
                f"initial velocity must be unit (norm {v.norm():.6g}); call .normalized()"
            )
        if v.base != p:
            raise ModelDomainError("velocity must be based at the initial point")
        z0, t0 = p.z, p.t
        a, beta = v.a, v.beta
        q = abs(beta)
        if q <= tol * t0:
            sign = 1.0 if a > 0 else -1.0
            return cls("vertical", z0=z0, t0=t0, sign=sign)
        r0 = float(np.arcsinh(-a / q))
        eta = z0 + t0 * a / beta.conjugate()
        return cls("circle", eta=eta, chi=beta * t0**2 / q**2, rad=t0**2 / q, r0=r0)

    @classmethod
    def from_endpoints(cls, begin, end):
        """Unit-speed arc from boundary point begin to boundary point end.

        The arclength origin sits at the apex (circle case) or at height 1
        (vertical case).
        """
        b = ExtComplex(begin)
        e = ExtComplex(end)
        if b == e:
            raise ModelDomainError("endpoints must be distinct")
        if b.is_inf:
            return cls("vertical", z0=e.value, t0=1.0, sign=-1.0)
        if e.is_inf:
            return cls("vertical", z0=b.value, t0=1.0, sign=1.0)
        bv, ev = b.value, e.value
        eta = (bv + ev) / 2.0
        chi = (ev - bv) / 2.0
        return cls("circle", eta=eta, chi=chi, rad=abs(chi), r0=0.0)

    def point(self, r):
        if self.kind == "vertical":
            z0, t0, sign = (self.params[k] for k in ("z0", "t0", "sign"))
            return HalfSpacePoint(z0, t0 * np.exp(sign * r))
        eta, chi, rad, r0 = (self.params[k] for k in ("eta", "chi", "rad", "r0"))
        u = r + r0
        return HalfSpacePoint(eta + chi * np.tanh(u), rad / np.cosh(u))

    def velocity(self, r):
        """Unit tangent at parameter r."""
        p = self.point(r)
        if self.kind == "vertical":
            sign = self.params["sign"]
            return TangentH3(p, sign * p.t, 0j)
        chi, rad, r0 = (self.params[k] for k in ("chi", "rad", "r0"))
        u = r + r0
        sech = 1.0 / np.cosh(u)
        return TangentH3(p, -rad * sech * np.tanh(u), chi * sech**2)

    def endpoints(self):
        """Boundary points (begin, end) = (r -> -inf, r -> +inf)."""
        if self.kind == "vertical":
            z0 = ExtComplex(self.params["z0"])
            if self.params["sign"] > 0:
                return z0, INF
            return INF, z0
        eta, chi = self.params["eta"], self.params["chi"]
        return ExtComplex(eta - chi), ExtComplex(eta + chi)

    def parameter_of(self, p, tol=1e-8):
        """Arclength parameter of a point lying on the arc."""
        if self.kind == "vertical":
            if abs(p.z - self.params["z0"]) > tol * (1 + abs(p.z)):
                raise ModelDomainError("point not on the geodesic")
            return float(self.params["sign"] * np.log(p.t / self.params["t0"]))
        eta, chi, rad, r0 = (self.params[k] for k in ("eta", "chi", "rad", "r0"))
        u = ((p.z - eta) * chi.conjugate()).real / abs(chi) ** 2
        u = min(1.0, max(-1.0, u))
        return float(np.arctanh(u) - r0)


def geodesic_from_initial(p, v, tol=1e-9):
    """Closed-form unit-speed geodesic from initial point and unit velocity."""
    return GeodesicArc.from_initial(p, v, tol=tol)


def _geodesic_rhs(state):
    """First-order form of the geodesic equations in coordinates (t, x1, x2).

    t'' = (t'^2 - x1'^2 - x2'^2)/t,  xi'' = 2 t' xi' / t.
    """
    t = state[..., 0]
    dt = state[..., 3]
    dx1 = state[..., 4]
    dx2 = state[..., 5]
    out = np.empty_like(state)
    out[..., 0] = dt
    out[..., 1] = dx1
    out[..., 2] = dx2
    out[..., 3] = (dt**2 - dx1**2 - dx2**2) / t
    out[..., 4] = 2.0 * dt * dx1 / t
    out[..., 5] = 2.0 * dt * dx2 / t
    return out


def integrate_geodesic_ode_state(p, v, r, step=1e-3):
    """Fixed-step RK4 integration of the geodesic equations.

    Returns (point, velocity) after arclength r (r may be negative).
    Supports batched initial data when p, v are arrays packed by the caller;
    here the scalar interface: state rows (t, x1, x2, t', x1', x2').
    """
    state = np.array(
        [p.t, p.z.real, p.z.imag, v.a, v.beta.real, v.beta.imag], dtype=float
    )
    final = _rk4(state, r, step)
    t, x1, x2, dt, dx1, dx2 = final
    if not np.isfinite(t) or t <= 0:
        raise ModelDomainError("geodesic integration left the model domain")
    q = HalfSpacePoint(complex(x1, x2), t)
    return q, TangentH3(q, dt, complex(dx1, dx2))


def _rk4(state, r, step):
    n = max(1, int(round(abs(r) / step)))
    h = r / n
    y = state
    for _ in range(n):
        k1 = _geodesic_rhs(y)
        k2 = _geodesic_rhs(y + 0.5 * h * k1)
        k3 = _geodesic_rhs(y + 0.5 * h * k2)
        k4 = _geodesic_rhs(y + h * k3)
        y = y + (h / 6.0) * (k1 + 2 * k2 + 2 * k3 + k4)
    return y


def integrate_geodesic_ode(p, v, r, step=1e-3):
    """RK4 endpoint of the geodesic flow; cross-validates the closed form."""
    return integrate_geodesic_ode_state(p, v, r, step)[0]


def first_integrals(state):
    """Conserved quantities of the flow: (speed/t)^2 and x_i'/t^2.

    state = (t, x1, x2, t', x1', x2'); returns (E, c1, c2).
    """
    t, _, _, dt, dx1, dx2 = state
    return (
        (dt**2 + dx1**2 + dx2**2) / t**2,
        dx1 / t**2,
        dx2 / t**2,
    )


def apply_mobius(m, p):
    """Poincare extension of a Moebius map to the upper half-space.

    m is a 2x2 complex matrix acting on the boundary as z -> (az+b)/(cz+d);
    the extension acts isometrically on (z, t).
    """
    (a, b), (c, d) = m
    det = a * d - b * c
    if det == 0:
        raise ModelDomainError("Moebius matrix must be invertible")
    s = det ** -0.5
    a, b, c, d = a * s, b * s, c * s, d * s
    z, t = p.z, p.t
    den = abs(c * z + d) ** 2 + abs(c) ** 2 * t**2
    z2 = ((a * z + b) * (c * z + d).conjugate() + a * c.conjugate() * t**2) / den
    t2 = t / den
    return HalfSpacePoint(z2, t2)


def _mobius_to_axis(begin, end):
    """Matrix sending the geodesic with the given endpoints to the vertical axis."""
    b = ExtComplex(begin)
    e = ExtComplex(end)
    if b.is_inf:
        return ((0j, 1 + 0j), (1 + 0j, -e.value))
    if e.is_inf:
        return ((1 + 0j, -b.value), (0j, 1 + 0j))
    return ((1 + 0j, -b.value), (1 + 0j, -e.value))


def distance_point_to_geodesic(p, g, return_foot=False):
    """Distance from a point to a complete geodesic, with optional foot data.

    Moves the geodesic to the vertical axis by a boundary Moebius map; there
    cosh d = sqrt(1 + |z|^2 / t^2) and the foot sits at height sqrt(|z|^2+t^2).
    """
    begin, end = g.endpoints()
    m = _mobius_to_axis(begin, end)
    q = apply_mobius(m, p)
    ratio2 = abs(q.z) ** 2 / q.t**2
    d = float(np.arccosh(np.sqrt(1.0 + ratio2)))
    if not return_foot:
        return d
    s = (abs(q.z) ** 2 + q.t**2) ** 0.5
    (a, b), (c, dd) = m
    inv = ((dd, -b), (-c, a))
    foot = apply_mobius(inv, HalfSpacePoint(0j, s))
    return d, g.parameter_of(foot), foot
