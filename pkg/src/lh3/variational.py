"""Variational machinery: area density, maximality residuals, rank-1 charts,
the Lagrangian angle, and the explicit maximal family.

Area density of a rank-2 graph mu2 = F(mu1, conj mu1), in terms of the
reduced densities L = Delta * twist and S = Delta * shear:

    density = (L^2 - |S|^2) / 64,

whose sign separates Lorentzian (negative twist dominance... |S| > |L|),
degenerate and Riemannian points.  det of the real 2x2 pullback metric in
graph parameters equals 4 * density.

Maximality (vanishing first variation of area) of a non-Lagrangian graph is
the vanishing of

    R = -i B^-2 d(L/D) + dbar( conj(mu2) S / (mu2 |B|^2 D) )
        + conj(mu1) |S|^2 / (4 B D),

with B = 1 + conj(mu1) mu2 and D = sqrt(L^2 - |S|^2) (timelike twist branch).
Each term is r-independent; evaluating the literal fibrewise fields at any r
changes nothing but an overall locally-constant sign.

A Lagrangian graph (L = 0) is maximal iff

    d ln(conj(sigma0)/sigma0) - 4 conj(mu2) / (1 + mu1 conj(mu2)) = 0,
    sigma0 = d conj(mu2) / (1 + mu1 conj(mu2))^2,

and sigma0 = |sigma0| e^{2 i phi} defines the angle phi, which is harmonic
and satisfies e^{-i phi} dd e^{-i phi} = |sigma0|.  Angle fields of the form
phi = 2 Re a, a = (i/2) log[(alpha0 mu1 + beta0)^2 - c0] - (i/2) log alpha0
(c0 <= 0) close the loop: they reproduce exactly the two-parameter family

    conj(mu2) = (lam1 mu1 + 1) / (mu1 + lam2),     lam1 lam2 != 1,

of maximal Lagrangian graphs, with lam1 = alpha0/beta0 and
lam2 = (beta0^2 - c0)/(alpha0 beta0).
"""

from dataclasses import dataclass

import numpy as np

from . import fd
from .congruence import Rank2Graph, optical_scalars, reduced_densities
from .errors import BranchError, DegenerateError
from .extcomplex import ExtComplex, INF
from .lines import OrientedGeodesic, reverse_orientation

__all__ = [
    "Rank1Chart",
    "Rank1Geometry",
    "rank1_geometry",
    "rank1_lagrangian_defect",
    "rank2_area_density",
    "maximality_residual",
    "lagrangian_maximality_residual",
    "sigma0",
    "sigma0_and_angle",
    "angle_grid",
    "AngleField",
    "angle_pde_residual",
    "harmonic_defect",
    "harmonic_defect_field",
    "mu2_from_angle",
    "MaximalFamily",
    "maximal_family_graph",
    "axis_geodesics",
    "Bump",
    "first_variation",
]


# ---------------------------------------------------------------------------
# rank-1 charts


@dataclass(frozen=True)
class Rank1Partials:
    """Derivatives of a rank-1 chart at (s, t)."""

    dmu1_s: complex
    dmu1_ss: complex
    dmu2_s: complex
    dmu2_t: complex
    dmu2_ss: complex
    dmu2_st: complex
    dmu2_tt: complex


class Rank1Chart:
    """Chart (s, t) -> (mu1(s), mu2(s, t)) whose mu1 moves along a curve.

    partials(s, t), when supplied, returns analytic derivatives; otherwise
    4th-order stencils on the two real parameters are used.
    """

    def __init__(self, mu1, mu2, partials=None, fd_step=fd.DEFAULT_STEP):
        self.mu1 = mu1
        self.mu2 = mu2
        self._partials = partials
        self.fd_step = fd_step

    def point(self, s, t):
        return complex(self.mu1(s)), complex(self.mu2(s, t))

    def derivatives(self, s, t):
        if self._partials is not None:
            return self._partials(s, t)
        h = self.fd_step
        return Rank1Partials(
            dmu1_s=fd.diff4(self.mu1, s, h),
            dmu1_ss=fd.diff4_second(self.mu1, s, h),
            dmu2_s=fd.diff4(lambda u: self.mu2(u, t), s, h),
            dmu2_t=fd.diff4(lambda v: self.mu2(s, v), t, h),
            dmu2_ss=fd.diff4_second(lambda u: self.mu2(u, t), s, h),
            dmu2_st=fd.diff4(
                lambda u: fd.diff4(lambda v: self.mu2(u, v), t, h), s, h
            ),
            dmu2_tt=fd.diff4_second(lambda v: self.mu2(s, v), t, h),
        )


@dataclass(frozen=True)
class Rank1Geometry:
    """Induced metric, Christoffel symbols, second fundamental form and mean
    curvature of a rank-1 chart at a point.  The label-space metric pulls
    back with g_tt = 0 identically, so the inverse has zero ss-entry and the
    mean curvature has no mu1 component."""

    g_ss: float
    g_st: float
    g_tt: float
    gamma_s_ss: float
    gamma_t_ss: float
    gamma_t_st: float
    gamma_t_tt: float
    h_mu1_ss: complex
    h_mu2_ss: complex
    h_mu2_st: complex
    h_mu2_tt: complex
    H_mu1: complex
    H_mu2: complex
    norm_H: float
    lagrangian_defect: float


def rank1_lagrangian_defect(chart, s, t):
    """|Re X| with X = mu1' d_t conj(mu2) / (1 + mu1 conj(mu2))^2."""
    mu1, mu2 = chart.point(s, t)
    p = chart.derivatives(s, t)
    b1 = 1.0 + mu1 * mu2.conjugate()
    x = p.dmu1_s * p.dmu2_t.conjugate() / b1**2
    return abs(x.real)


def _metric_components(chart, s, t):
    mu1, mu2 = chart.point(s, t)
    p = chart.derivatives(s, t)
    b1 = 1.0 + mu1 * mu2.conjugate()
    g_ss = 2.0 * (p.dmu1_s * p.dmu2_s.conjugate() / b1**2).imag
    g_st = (p.dmu1_s * p.dmu2_t.conjugate() / b1**2).imag
    return g_ss, g_st


def rank1_geometry(chart, s, t, require_lagrangian=True, lag_tol=1e-6):
    """Full pointwise geometry of a rank-1 chart.

    Mean curvature uses the trace H^mu = g^{jk} h^mu_jk with the degenerate
    inverse (g^{ss} = 0, g^{st} = 1/g_st, g^{tt} = -g_ss/g_st^2); it is only
    meaningful on Lagrangian charts, which is checked unless disabled.
    """
    mu1, mu2 = chart.point(s, t)
    p = chart.derivatives(s, t)
    b1 = 1.0 + mu1 * mu2.conjugate()
    b2 = 1.0 + mu1.conjugate() * mu2

    lag = abs((p.dmu1_s * p.dmu2_t.conjugate() / b1**2).real)
    if require_lagrangian:
        scale = abs(p.dmu1_s * p.dmu2_t.conjugate() / b1**2) + 1e-300
        if lag > lag_tol * max(1.0, scale):
            raise BranchError(
                f"chart is not Lagrangian at (s, t)=({s}, {t}): defect {lag:.3g}"
            )

    g_ss, g_st = _metric_components(chart, s, t)
    if g_st == 0.0:
        raise DegenerateError("induced metric is singular (g_st = 0)")
    g_tt = 0.0
    inv_ss = 0.0
    inv_st = 1.0 / g_st
    inv_tt = -g_ss / g_st**2

    if p.dmu1_s == 0 or p.dmu2_t == 0:
        raise DegenerateError("chart fails the rank-1 immersion condition")

    gamma_s_ss = (p.dmu1_ss / p.dmu1_s - 2.0 * mu2.conjugate() * p.dmu1_s / b1).real
    gamma_t_st = (p.dmu2_st / p.dmu2_t - 2.0 * mu1.conjugate() * p.dmu2_s / b2).real
    gamma_t_tt = (p.dmu2_tt / p.dmu2_t - 2.0 * mu1.conjugate() * p.dmu2_t / b2).real

    # gamma^t_ss needs metric derivatives; differentiate the closed forms.
    h = chart.fd_step
    d_s_gss = fd.diff4(lambda u: _metric_components(chart, u, t)[0], s, h)
    d_t_gss = fd.diff4(lambda v: _metric_components(chart, s, v)[0], t, h)
    d_s_gst = fd.diff4(lambda u: _metric_components(chart, u, t)[1], s, h)
    gamma_t_ss = 0.5 * (
        inv_st * d_s_gss + inv_tt * (2.0 * d_s_gst - d_t_gss)
    )

    h_mu1_ss = p.dmu1_ss - 2.0 * mu2.conjugate() * p.dmu1_s**2 / b1 - p.dmu1_s * gamma_s_ss
    h_mu2_ss = (
        p.dmu2_ss
        - 2.0 * mu1.conjugate() * p.dmu2_s**2 / b2
        - p.dmu2_s * gamma_s_ss
        - p.dmu2_t * gamma_t_ss
    )
    h_mu2_st = (
        p.dmu2_st
        - 2.0 * mu1.conjugate() * p.dmu2_s * p.dmu2_t / b2
        - p.dmu2_t * gamma_t_st
    )
    h_mu2_tt = (
        p.dmu2_tt
        - 2.0 * mu1.conjugate() * p.dmu2_t**2 / b2
        - p.dmu2_t * gamma_t_tt
    )

    # d_t mu1 = 0 and the inverse metric kills the ss slot, so H^mu1 = 0.
    H_mu1 = inv_ss * h_mu1_ss
    H_mu2 = 2.0 * inv_st * h_mu2_st + inv_tt * h_mu2_tt

    return Rank1Geometry(
        g_ss=g_ss,
        g_st=g_st,
        g_tt=g_tt,
        gamma_s_ss=gamma_s_ss,
        gamma_t_ss=gamma_t_ss,
        gamma_t_st=gamma_t_st,
        gamma_t_tt=gamma_t_tt,
        h_mu1_ss=h_mu1_ss,
        h_mu2_ss=h_mu2_ss,
        h_mu2_st=h_mu2_st,
        h_mu2_tt=h_mu2_tt,
        H_mu1=H_mu1,
        H_mu2=H_mu2,
        norm_H=abs(H_mu2),
        lagrangian_defect=lag,
    )


# ---------------------------------------------------------------------------
# rank-2 area density and maximality residuals


def rank2_area_density(g, nu):
    """(L^2 - |S|^2)/64; equals det(pullback metric)/4 in graph parameters."""
    ell, s = reduced_densities(g, nu)
    return (ell**2 - abs(s) ** 2) / 64.0


def _timelike_d(ell, s):
    disc = ell**2 - abs(s) ** 2
    if disc <= 0:
        raise BranchError(
            "twist does not dominate shear: non-Lagrangian maximality "
            f"residual undefined (L^2 - |S|^2 = {disc:.3g})"
        )
    return np.sqrt(disc)


def maximality_residual(g, nu, r=None, h=None):
    """Residual of the vanishing-first-variation equation at a graph point.

    With r=None the r-independent reduced densities are differentiated;
    passing an r evaluates the literal fibrewise fields instead (identical
    result up to the sign of the density, which is locally constant).
    """
    h = h or fd.DEFAULT_STEP
    mu1c, mu2c = g.point(nu)
    b = 1.0 + mu1c.conjugate() * mu2c

    if r is None:

        def f1(w):
            ell, s = reduced_densities(g, w)
            return ell / _timelike_d(ell, s)

        def f2(w):
            ell, s = reduced_densities(g, w)
            m2 = g.point(w)[1]
            bb = 1.0 + g.point(w)[0].conjugate() * m2
            return m2.conjugate() * s / (m2 * abs(bb) ** 2 * _timelike_d(ell, s))

        ell0, s0 = reduced_densities(g, nu)
        d0 = _timelike_d(ell0, s0)
        term3 = mu1c.conjugate() * abs(s0) ** 2 / (4.0 * b * d0)
    else:

        def f1(w):
            o = optical_scalars(g, w, r)
            lam, sig = o.rho.imag, o.sigma
            return lam / np.sqrt(lam**2 - abs(sig) ** 2)

        def f2(w):
            o = optical_scalars(g, w, r)
            lam, sig = o.rho.imag, o.sigma
            m2 = g.point(w)[1]
            bb = 1.0 + g.point(w)[0].conjugate() * m2
            return (
                m2.conjugate()
                * sig
                / (m2 * abs(bb) ** 2 * np.sqrt(lam**2 - abs(sig) ** 2))
            )

        o0 = optical_scalars(g, nu, r)
        lam0, sig0 = o0.rho.imag, o0.sigma
        if lam0**2 - abs(sig0) ** 2 <= 0:
            raise BranchError("twist does not dominate shear at this point")
        term3 = (
            mu1c.conjugate()
            * o0.delta
            * abs(sig0) ** 2
            / (4.0 * b * np.sqrt(lam0**2 - abs(sig0) ** 2))
        )

    d_f1 = fd.wirtinger(f1, nu, h)[0]
    db_f2 = fd.wirtinger(f2, nu, h)[1]
    return -1j * d_f1 / b**2 + db_f2 + term3


def sigma0(g, nu):
    """sigma0 = d conj(mu2) / (1 + mu1 conj(mu2))^2 at a graph point."""
    mu1c, mu2c = g.point(nu)
    p = g.derivatives(nu)
    return p.dbmu2.conjugate() / (1.0 + mu1c * mu2c.conjugate()) ** 2


def lagrangian_maximality_residual(g, nu, h=None, lag_tol=1e-8):
    """Residual of the Lagrangian maximality equation at a graph point.

    Branch-free form: conj(dbar sigma0)/conj(sigma0) - d sigma0 / sigma0
    - 4 conj(mu2)/(1 + mu1 conj(mu2)).  Raises unless the graph point is
    Lagrangian (twist density below tolerance).
    """
    h = h or fd.DEFAULT_STEP
    ell, s = reduced_densities(g, nu)
    if abs(ell) > lag_tol * max(1.0, abs(s)):
        raise BranchError(
            f"graph point is not Lagrangian (twist density {ell:.3g})"
        )
    s0 = sigma0(g, nu)
    if s0 == 0:
        raise DegenerateError("sigma0 vanishes (totally null point)")
    d_s0, db_s0 = fd.richardson(
        lambda hh: np.asarray(fd.wirtinger(lambda w: sigma0(g, w), nu, hh)), h
    )
    mu1c, mu2c = g.point(nu)
    b1 = 1.0 + mu1c * mu2c.conjugate()
    return (
        db_s0.conjugate() / s0.conjugate()
        - d_s0 / s0
        - 4.0 * mu2c.conjugate() / b1
    )


# ---------------------------------------------------------------------------
# the Lagrangian angle


def sigma0_and_angle(g, nu):
    """(sigma0, phi) with sigma0 = |sigma0| e^{2 i phi}, phi in (-pi/2, pi/2]."""
    s0 = sigma0(g, nu)
    return s0, 0.5 * float(np.angle(s0))


def angle_grid(g, nus):
    """Angle phi over a 2d grid with branch continuity along rows.

    The first column is unwrapped, then each row relative to its first entry.
    """
    nus = np.asarray(nus, dtype=complex)
    theta = np.vectorize(lambda w: np.angle(sigma0(g, w)))(nus)
    theta[:, 0] = np.unwrap(theta[:, 0])
    theta = np.unwrap(theta, axis=1)
    return 0.5 * theta


@dataclass(frozen=True)
class AngleField:
    """Closed-form harmonic angle phi = 2 Re a with holomorphic generator

    a(mu1) = (i/2) log[(alpha0 mu1 + beta0)^2 - c0] - (i/2) log alpha0.

    Requires c0 real and <= 0 so that e^{-i phi} dd e^{-i phi} = |sigma0| with
    sigma0 = -c0 alpha0^2 / W^2, W = (alpha0 mu1 + beta0)^2 - c0.
    """

    alpha0: complex
    beta0: complex
    c0: float

    def __post_init__(self):
        object.__setattr__(self, "alpha0", complex(self.alpha0))
        object.__setattr__(self, "beta0", complex(self.beta0))
        object.__setattr__(self, "c0", float(self.c0))
        if self.alpha0 == 0:
            raise DegenerateError("alpha0 must be nonzero")
        if self.c0 > 0:
            raise BranchError("c0 must be <= 0 for a real angle equation")

    def w(self, mu1):
        return (self.alpha0 * mu1 + self.beta0) ** 2 - self.c0

    def generator(self, mu1):
        return 0.5j * (np.log(self.w(mu1)) - np.log(self.alpha0))

    def phi(self, mu1):
        return 2.0 * self.generator(mu1).real

    def exp_minus_i_phi(self, mu1):
        """Branch-free e^{-i phi} = (W/|W|) (conj(alpha0)/|alpha0|)."""
        w = self.w(mu1)
        return (w / abs(w)) * (self.alpha0.conjugate() / abs(self.alpha0))

    def dbar_phi(self, mu1):
        """dbar phi = -i conj(alpha0) (conj(alpha0 mu1 + beta0)) / conj(W)."""
        p = (self.alpha0 * mu1 + self.beta0).conjugate()
        return -1j * self.alpha0.conjugate() * p / self.w(mu1).conjugate()

    def mu2(self, mu1):
        """Graph recovered from the angle: mu2 = i dbar phi/(1 - i conj(mu1) dbar phi)."""
        a0b = self.alpha0.conjugate()
        p = a0b * complex(mu1).conjugate() + self.beta0.conjugate()
        den = self.beta0.conjugate() * p - self.c0
        if den == 0:
            return INF
        return ExtComplex(a0b * p / den)

    def graph(self):
        """Anti-holomorphic graph congruence generated by the angle."""
        a0b = self.alpha0.conjugate()
        b0b = self.beta0.conjugate()
        c0 = self.c0

        def F(nu):
            p = a0b * nu.conjugate() + b0b
            return a0b * p / (b0b * p - c0)

        def dF(nu):
            p = a0b * nu.conjugate() + b0b
            return 0j, -c0 * a0b**2 / (b0b * p - c0) ** 2

        return Rank2Graph(F, dF, name="angle-generated graph")

    def family_parameters(self):
        """(lam1, lam2) of the maximal family this angle generates."""
        if self.beta0 == 0:
            raise DegenerateError("beta0 = 0 has no (lam1, lam2) chart")
        lam1 = self.alpha0 / self.beta0
        lam2 = (self.beta0**2 - self.c0) / (self.alpha0 * self.beta0)
        return lam1, lam2


def mu2_from_angle(a, mu1):
    """Second label coordinate of the graph generated by an angle field."""
    return a.mu2(mu1)


def angle_pde_residual(a, g, mu1, h=None):
    """e^{-i phi} dd e^{-i phi} - |sigma0|, complex; ~0 for matched pairs."""
    h = h or fd.DEFAULT_STEP
    f = a.exp_minus_i_phi
    dd = fd.wirtinger2(f, mu1, h)[0]
    return f(mu1) * dd - abs(sigma0(g, mu1))


def harmonic_defect(a, mu1, h=None):
    """|d dbar phi| for a generated angle, via d of the closed-form dbar phi."""
    h = h or fd.DEFAULT_STEP
    return abs(fd.wirtinger(a.dbar_phi, mu1, h)[0])


def harmonic_defect_field(phi, mu1, h=None):
    """|d dbar phi| of an arbitrary real field by second-order stencils."""
    h = h or fd.DEFAULT_STEP
    return abs(fd.wirtinger2(phi, mu1, h)[2])


# ---------------------------------------------------------------------------
# the explicit maximal family


class MaximalFamily:
    """Family of maximal Lagrangian graphs conj(mu2) = (a mu1 + b)/(b mu1 + c).

    The symmetric coefficient triple (a, b, c) needs ac - b^2 != 0; for b != 0
    the normalized chart (lam1, lam2) = (a/b, c/b), lam1 lam2 != 1, matches the
    closed-form scalars.  r0 fixes the integration constant of the fibre
    field r = log|lam1 mu1 + 1| + r0 (b != 0) or r = log|mu1| + r0 (b = 0).
    """

    def __init__(self, lam1=None, lam2=None, r0=0.0, triple=None):
        if triple is not None:
            a, b, c = (complex(x) for x in triple)
            if a * c - b * b == 0:
                raise DegenerateError("symmetric triple must have ac - b^2 != 0")
            self.triple = (a, b, c)
            self.lam1 = a / b if b != 0 else None
            self.lam2 = c / b if b != 0 else None
        else:
            if lam1 is None or lam2 is None:
                raise DegenerateError("need (lam1, lam2) or a symmetric triple")
            lam1, lam2 = complex(lam1), complex(lam2)
            if lam1 * lam2 == 1:
                raise DegenerateError("lam1 lam2 = 1 is a degenerate (rank-0) family")
            self.triple = (lam1, 1.0 + 0j, lam2)
            self.lam1, self.lam2 = lam1, lam2
        self.r0 = float(r0)

    @property
    def has_lambda_chart(self):
        return self.lam1 is not None

    def quadratic(self, mu1):
        """a mu1^2 + 2 b mu1 + c (the lam-chart form when b = 1)."""
        a, b, c = self.triple
        return a * mu1**2 + 2.0 * b * mu1 + c

    def singular_points(self):
        """Label points excluded from graph domains: quadratic roots and poles."""
        a, b, c = self.triple
        pts = [r for r in _quadratic_roots(a, 2 * b, c) if not r.is_inf]
        if b != 0:
            pts.append(ExtComplex(-c / b))  # pole of conj(mu2)
        if a != 0:
            pts.append(ExtComplex(-b / a))  # fibre field log singularity
        return [p.value for p in pts]

    def to_json(self):
        if not self.has_lambda_chart:
            a, b, c = self.triple
            return {
                "triple": [[a.real, a.imag], [b.real, b.imag], [c.real, c.imag]],
                "r0": self.r0,
            }
        return {
            "lam1": [self.lam1.real, self.lam1.imag],
            "lam2": [self.lam2.real, self.lam2.imag],
            "r0": self.r0,
        }

    @classmethod
    def from_json(cls, obj):
        if "triple" in obj:
            triple = [complex(x[0], x[1]) for x in obj["triple"]]
            return cls(r0=obj.get("r0", 0.0), triple=triple)
        lam1 = ExtComplex.from_json(obj["lam1"]).value
        lam2 = ExtComplex.from_json(obj["lam2"]).value
        return cls(lam1, lam2, obj.get("r0", 0.0))


def maximal_family_graph(f):
    """Rank-2 graph congruence of the family, with analytic derivatives."""
    a, b, c = f.triple
    det = a * c - b * b

    def graph_fn(nu):
        den = b * nu + c
        if den == 0:
            raise DegenerateError(f"family graph pole at mu1 = {nu}")
        return ((a * nu + b) / den).conjugate()

    def d_graph(nu):
        den = b * nu + c
        return 0j, (det / den**2).conjugate()

    return Rank2Graph(graph_fn, d_graph, name="maximal family graph")


def _quadratic_roots(a, b, c):
    """Roots of a x^2 + b x + c on the sphere, numerically stable."""
    a, b, c = complex(a), complex(b), complex(c)
    if a == 0:
        if b == 0:
            raise DegenerateError("degenerate quadratic")
        return ExtComplex(-c / b), INF
    d = np.sqrt(b * b - 4.0 * a * c)
    if abs(-b + d) < abs(-b - d):
        d = -d
    big = (-b + d) / (2.0 * a)
    small = ExtComplex(c / (a * big)) if big != 0 else ExtComplex(-b / a - big)
    return ExtComplex(big), small


def axis_geodesics(f):
    """The two oriented geodesics fixed by the family (tube axis candidates).

    Roots mu' of the family quadratic give the first labels; the second
    labels follow from the antipodal pairing, making the pair exact mutual
    orientation reverses.
    """
    a, b, c = f.triple
    root_plus, root_minus = _quadratic_roots(a, 2.0 * b, c)
    gamma = OrientedGeodesic(root_plus, root_minus.antipode())
    return gamma, reverse_orientation(gamma)


# ---------------------------------------------------------------------------
# first variation of area


class Bump:
    """Smooth compactly supported field on a coordinate rectangle.

    b(nu) = amp * m((x-cx)/rx) * m((y-cy)/ry) with the standard mollifier
    m(u) = exp(1 - 1/(1-u^2)) on (-1, 1); sup |b| = |amp| at the centre.
    Analytic first derivatives are provided for noise-free perturbation.
    """

    def __init__(self, center, rx, ry, amp=1.0 + 0j):
        self.center = complex(center)
        self.rx = float(rx)
        self.ry = float(ry)
        self.amp = complex(amp)

    @staticmethod
    def _m(u):
        if abs(u) >= 1.0:
            return 0.0
        return np.exp(1.0 - 1.0 / (1.0 - u * u))

    @staticmethod
    def _dm(u):
        if abs(u) >= 1.0:
            return 0.0
        return Bump._m(u) * (-2.0 * u / (1.0 - u * u) ** 2)

    def __call__(self, nu):
        u = (nu.real - self.center.real) / self.rx
        v = (nu.imag - self.center.imag) / self.ry
        return self.amp * self._m(u) * self._m(v)

    def partials(self, nu):
        u = (nu.real - self.center.real) / self.rx
        v = (nu.imag - self.center.imag) / self.ry
        bx = self.amp * self._dm(u) * self._m(v) / self.rx
        by = self.amp * self._m(u) * self._dm(v) / self.ry
        return 0.5 * (bx - 1j * by), 0.5 * (bx + 1j * by)

    @property
    def sup_norm(self):
        return abs(self.amp)

    def support_rectangle(self):
        c = self.center
        return (c.real - self.rx, c.real + self.rx, c.imag - self.ry, c.imag + self.ry)


def _perturbed_graph(g, bump, eps):
    if g.dF is None:
        return Rank2Graph(lambda nu: g.F(nu) + eps * bump(nu), fd_step=g.fd_step)

    def F(nu):
        return g.F(nu) + eps * bump(nu)

    def dF(nu):
        d, db = g.dF(nu)
        bd, bdb = bump.partials(nu)
        return d + eps * bd, db + eps * bdb

    return Rank2Graph(F, dF)


def _area(g, rect, n_quad):
    x0, x1, y0, y1 = rect
    xs, wxs = np.polynomial.legendre.leggauss(n_quad)
    xq = 0.5 * (x1 - x0) * xs + 0.5 * (x1 + x0)
    yq = 0.5 * (y1 - y0) * xs + 0.5 * (y1 + y0)
    total = 0.0
    for x, wx in zip(xq, wxs):
        for y, wy in zip(yq, wxs):
            ell, s = reduced_densities(g, complex(x, y))
            det = (ell**2 - abs(s) ** 2) / 16.0  # det of the real pullback
            total += wx * wy * np.sqrt(abs(det))
    return total * 0.25 * (x1 - x0) * (y1 - y0)


def first_variation(g, bump, eps=1e-4, n_quad=32):
    """Central difference in eps of the area over the bump support.

    One Richardson step removes the leading quadratic error; the returned
    value estimates dA/d eps at eps = 0 for the perturbation F + eps * bump.
    """
    rect = bump.support_rectangle()

    def delta(e):
        ap = _area(_perturbed_graph(g, bump, e), rect, n_quad)
        am = _area(_perturbed_graph(g, bump, -e), rect, n_quad)
        return (ap - am) / (2.0 * e)

    d1 = delta(eps)
    d2 = delta(eps / 2.0)
    return float((4.0 * d2 - d1) / 3.0)
