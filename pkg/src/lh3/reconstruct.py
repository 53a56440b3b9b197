"""Surface reconstruction: fibre fields r, orthogonal (equidistant) surfaces,
tube congruences, numeric shape operators, and mesh export.

A congruence nu -> (mu1, mu2) together with a real fibre field r(nu) selects
one point on each geodesic through the correspondence

    z = (1 - mu1 conj(mu2)) / (2 conj(mu2))
        + ((1 + mu1 conj(mu2)) / (2 conj(mu2))) tanh r,
    t = |1 + conj(mu1) mu2| / (2 |mu2| cosh r).

The surface so traced is orthogonal to the congruence iff r solves

    2 dr = mu2/(conj(mu1) mu2 + 1) (d conj(mu1) + d mu2 / mu2^2)
         + conj(mu2)/(mu1 conj(mu2) + 1) (d mu1 + d conj(mu2) / conj(mu2)^2),

an equation solvable exactly when the congruence is Lagrangian; the plaquette
circulation of its right-hand side measures the obstruction.  For the maximal
family conj(mu2) = (lam1 mu1 + 1)/(mu1 + lam2) the field is closed-form,
r = log|lam1 mu1 + 1| + r0, and the resulting surfaces are the equidistant
tubes about the family's axis geodesic.
"""

from dataclasses import dataclass

import numpy as np
import scipy.linalg
import scipy.optimize

from .congruence import Congruence
from .errors import (
    BranchError,
    ChartSingularError,
    DegenerateError,
    InputError,
    IntegrabilityError,
    LH3Error,
)
from .extcomplex import ExtComplex
from .halfspace import (
    HalfSpacePoint,
    TangentH3,
    ball_from_halfspace,
    distance_point_to_geodesic,
    hyp_inner,
)
from .lines import OrientedGeodesic, arc_of, from_endpoints
from .variational import axis_geodesics, maximal_family_graph

__all__ = [
    "r_closed_form_family",
    "dr_field",
    "RField",
    "solve_r_pde",
    "surface_point",
    "surface_frame",
    "SampledSurface",
    "surface_from_rfield",
    "family_surface",
    "family_surface_mapping",
    "orthogonality_defect",
    "principal_curvatures_from_scalars",
    "FamilyScalars",
    "family_scalars",
    "tube_congruence",
    "tube_family",
    "tube_inverse",
    "ShapeOperator",
    "shape_operator_numeric",
    "distance_samples",
    "equidistance_spread",
    "fit_symmetric_triple",
    "best_fit_axis",
    "export_obj",
    "export_csv",
    "read_obj_vertices",
]


# ---------------------------------------------------------------------------
# fibre fields


def r_closed_form_family(f, mu1, r0=None):
    """Fibre field of a maximal family: log|lam1 mu1 + 1| + r0.

    Families given by a symmetric triple with b = 0 use the same field in its
    scale-free form log|mu1| + r0.
    """
    r0 = f.r0 if r0 is None else r0
    a, b, c = f.triple
    if b != 0:
        lam1 = a / b
        w = abs(lam1 * mu1 + 1.0)
    else:
        w = abs(mu1)
    if w == 0:
        raise ChartSingularError("fibre field diverges at a family singular point")
    return float(np.log(w)) + r0


def dr_field(c, nu):
    """2 dr of the orthogonality equation at nu (complex-valued)."""
    mu1, mu2 = c.point(nu)
    p = c.derivatives(nu)
    if mu2 == 0:
        raise ChartSingularError("dr field undefined where mu2 = 0")
    b2 = mu1.conjugate() * mu2 + 1.0
    b1 = mu1 * mu2.conjugate() + 1.0
    if b1 == 0 or b2 == 0:
        raise ChartSingularError("dr field undefined on the reflected diagonal")
    d_bmu1 = p.dbmu1.conjugate()
    d_bmu2 = p.dbmu2.conjugate()
    return mu2 / b2 * (d_bmu1 + p.dmu2 / mu2**2) + mu2.conjugate() / b1 * (
        p.dmu1 + d_bmu2 / mu2.conjugate() ** 2
    )


_GL5_NODES, _GL5_WEIGHTS = np.polynomial.legendre.leggauss(5)
# mapped from [-1, 1] to [0, 1]
_GL5_S = 0.5 * (_GL5_NODES + 1.0)
_GL5_W = 0.5 * _GL5_WEIGHTS


def _edge_integral(c, nu0, nu1):
    dnu = nu1 - nu0
    total = 0.0
    for s, w in zip(_GL5_S, _GL5_W):
        total += w * (dr_field(c, nu0 + s * dnu) * dnu).real
    return total


@dataclass
class RField:
    """Fibre field integrated over a rectangular grid of chart points."""

    nus: np.ndarray
    r: np.ndarray
    defect: float
    anchor_index: tuple
    anchor_value: float


def solve_r_pde(c, nus, anchor_value=0.0, anchor_index=(0, 0), tol=1e-7):
    """Integrate the orthogonality equation for r over a grid.

    Edge integrals use 5-point Gauss-Legendre quadrature; the maximum
    plaquette circulation is the integrability defect, and exceeding `tol`
    raises IntegrabilityError (the congruence is not Lagrangian).
    """
    nus = np.asarray(nus, dtype=complex)
    if nus.ndim != 2 or nus.shape[0] < 2 or nus.shape[1] < 2:
        raise InputError("solve_r_pde needs a 2d grid of chart points")
    ny, nx = nus.shape

    eh = np.zeros((ny, nx - 1))
    ev = np.zeros((ny - 1, nx))
    for j in range(ny):
        for k in range(nx - 1):
            eh[j, k] = _edge_integral(c, nus[j, k], nus[j, k + 1])
    for j in range(ny - 1):
        for k in range(nx):
            ev[j, k] = _edge_integral(c, nus[j, k], nus[j + 1, k])

    circ = eh[:-1, :] + ev[:, 1:] - eh[1:, :] - ev[:, :-1]
    defect = float(np.max(np.abs(circ))) if circ.size else 0.0
    if defect > tol:
        raise IntegrabilityError(
            "orthogonal surface does not exist: integrability defect "
            f"{defect:.3g} exceeds {tol:.3g} (congruence is not Lagrangian)",
            defect=defect,
        )

    j0, k0 = anchor_index
    r = np.zeros((ny, nx))
    r[j0, k0] = anchor_value
    for j in range(j0 - 1, -1, -1):
        r[j, k0] = r[j + 1, k0] - ev[j, k0]
    for j in range(j0 + 1, ny):
        r[j, k0] = r[j - 1, k0] + ev[j - 1, k0]
    for j in range(ny):
        for k in range(k0 - 1, -1, -1):
            r[j, k] = r[j, k + 1] - eh[j, k]
        for k in range(k0 + 1, nx):
            r[j, k] = r[j, k - 1] + eh[j, k - 1]

    return RField(
        nus=nus, r=r, defect=defect, anchor_index=(j0, k0), anchor_value=anchor_value
    )


# ---------------------------------------------------------------------------
# the correspondence and sampled surfaces


def surface_point(mu1, mu2, r):
    """Point of hyperbolic space at parameter r along the labelled geodesic."""
    mu1, mu2 = complex(mu1), complex(mu2)
    if mu2 == 0:
        raise ChartSingularError("correspondence undefined at mu2 = 0")
    bm2 = mu2.conjugate()
    b1 = 1.0 + mu1 * bm2
    if b1 == 0:
        raise ChartSingularError("correspondence undefined on the reflected diagonal")
    th = np.tanh(r)
    z = (1.0 - mu1 * bm2) / (2.0 * bm2) + (1.0 + mu1 * bm2) / (2.0 * bm2) * th
    t = abs(b1) / (2.0 * abs(mu2) * np.cosh(r))
    return z, float(t)


def _phi_partials(mu1, mu2, r):
    """Partials of (z, t) in (mu1, mu2, conj mu1, conj mu2, r)."""
    bm2 = mu2.conjugate()
    bm1 = mu1.conjugate()
    b1 = 1.0 + mu1 * bm2
    b2 = 1.0 + bm1 * mu2
    th = np.tanh(r)
    z, t = surface_point(mu1, mu2, r)
    dz = {
        "mu1": (th - 1.0) / 2.0,
        "bmu2": -(1.0 + th) / (2.0 * bm2**2),
        "r": b1 / (2.0 * bm2) * (1.0 - th * th),
        "mu2": 0j,
        "bmu1": 0j,
    }
    dt = {
        "mu1": t * bm2 / (2.0 * b1),
        "bmu1": t * mu2 / (2.0 * b2),
        "mu2": t * (bm1 / (2.0 * b2) - 1.0 / (2.0 * mu2)),
        "bmu2": t * (mu1 / (2.0 * b1) - 1.0 / (2.0 * bm2)),
        "r": -t * th,
    }
    return z, t, dz, dt


def surface_frame(c, nu, r, dr=None):
    """Chart-direction tangents and geodesic direction of a surface point.

    Returns (point, tangent_x, tangent_y, geodesic_dir) as a HalfSpacePoint
    and TangentH3 triples; dr is the complex value of the orthogonality
    right-hand side 2*dr (computed from the congruence when omitted).
    """
    mu1, mu2 = c.point(nu)
    p = c.derivatives(nu)
    w = dr_field(c, nu) if dr is None else dr
    z, t, dz, dt = _phi_partials(mu1, mu2, r)

    # real-direction derivatives of the labels
    dx = {
        "mu1": p.dmu1 + p.dbmu1,
        "mu2": p.dmu2 + p.dbmu2,
    }
    dy = {
        "mu1": 1j * (p.dmu1 - p.dbmu1),
        "mu2": 1j * (p.dmu2 - p.dbmu2),
    }
    # r is real: d_x r = Re[2 dr], d_y r = -Im[2 dr] with w = 2 dr
    rx, ry = w.real, -w.imag

    def push(dlab, drq):
        dzv = (
            dz["mu1"] * dlab["mu1"]
            + dz["bmu2"] * dlab["mu2"].conjugate()
            + dz["r"] * drq
        )
        dtv = (
            dt["mu1"] * dlab["mu1"]
            + dt["bmu1"] * dlab["mu1"].conjugate()
            + dt["mu2"] * dlab["mu2"]
            + dt["bmu2"] * dlab["mu2"].conjugate()
            + dt["r"] * drq
        )
        return dzv, dtv.real

    base = HalfSpacePoint(z, t)
    zx, tx = push(dx, rx)
    zy, ty = push(dy, ry)
    zr, tr = dz["r"], dt["r"].real
    return (
        base,
        TangentH3(base, tx, zx),
        TangentH3(base, ty, zy),
        TangentH3(base, tr, zr),
    )


def orthogonality_defect(c, nu, r, dr=None):
    """Largest |cos angle| between surface tangents and the geodesic direction."""
    base, ux, uy, ur = surface_frame(c, nu, r, dr=dr)
    out = 0.0
    nr = ur.norm()
    for u in (ux, uy):
        nu_ = u.norm()
        if nu_ == 0:
            continue
        out = max(out, abs(hyp_inner(u, ur)) / (nu_ * nr))
    return out


@dataclass
class SampledSurface:
    """Grid of surface points in the upper-half-space model."""

    nus: np.ndarray
    r: np.ndarray
    z: np.ndarray
    t: np.ndarray

    @property
    def shape(self):
        return self.z.shape

    def points(self):
        for j in range(self.z.shape[0]):
            for k in range(self.z.shape[1]):
                yield HalfSpacePoint(self.z[j, k], self.t[j, k])

    def ball_vertices(self):
        """Row-major (N, 3) array of ball-model coordinates."""
        out = np.empty((self.z.size, 3))
        i = 0
        for p in self.points():
            out[i] = ball_from_halfspace(p).y
            i += 1
        return out


def surface_from_rfield(c, rfield):
    nus, r = rfield.nus, rfield.r
    z = np.empty_like(nus)
    t = np.empty(nus.shape)
    for j in range(nus.shape[0]):
        for k in range(nus.shape[1]):
            mu1, mu2 = c.point(nus[j, k])
            z[j, k], t[j, k] = surface_point(mu1, mu2, r[j, k])
    return SampledSurface(nus=nus, r=r, z=z, t=t)


def family_surface(f, nus):
    """Equidistant tube of a maximal family over a grid, closed-form r."""
    nus = np.asarray(nus, dtype=complex)
    g = maximal_family_graph(f)
    r = np.empty(nus.shape)
    z = np.empty_like(nus)
    t = np.empty(nus.shape)
    for j in range(nus.shape[0]):
        for k in range(nus.shape[1]):
            nu = nus[j, k]
            r[j, k] = r_closed_form_family(f, nu)
            mu1, mu2 = g.point(nu)
            z[j, k], t[j, k] = surface_point(mu1, mu2, r[j, k])
    return SampledSurface(nus=nus, r=r, z=z, t=t)


def family_surface_mapping(f):
    """(mapping, normal_hint) closures for numeric curvature of a family tube.

    mapping(x, y) -> (z, t); normal_hint(x, y) -> euclidean 3-vector along the
    congruence direction (the outward geodesic).
    """
    g = maximal_family_graph(f)

    def mapping(x, y):
        nu = complex(x, y)
        mu1, mu2 = g.point(nu)
        return surface_point(mu1, mu2, r_closed_form_family(f, nu))

    def normal_hint(x, y):
        nu = complex(x, y)
        mu1, mu2 = g.point(nu)
        _, _, dz, dt = _phi_partials(mu1, mu2, r_closed_form_family(f, nu))
        return np.array([dz["r"].real, dz["r"].imag, dt["r"].real])

    return mapping, normal_hint


# ---------------------------------------------------------------------------
# closed-form scalar data of the maximal family


@dataclass(frozen=True)
class FamilyScalars:
    """Optical and curvature data of a family tube at its surface."""

    sigma: complex
    rho: complex
    delta: float
    m1: float
    m2: float
    h: float


def family_scalars(f, mu1):
    """Closed-form scalars of a maximal family at the equidistant surface.

    Requires the (lam1, lam2) chart (triple with b != 0).  The principal
    curvatures and mean curvature come from m = -Re rho +/- |sigma| with
    u = |lam1 lam2 - 1| e^{2 r0}.
    """
    if not f.has_lambda_chart:
        raise DegenerateError("closed-form scalars need the (lam1, lam2) chart")
    lam1, lam2 = f.lam1, f.lam2
    k = abs(lam1 * lam2 - 1.0)
    u = k * np.exp(2.0 * f.r0)
    e = np.exp(-2.0 * f.r0) - k * k * np.exp(2.0 * f.r0)
    if abs(u - 1.0) < 1e-14:
        raise DegenerateError("family surface is focal (u = 1): scalars diverge")
    q = f.quadratic(mu1)
    if q == 0:
        raise ChartSingularError("family scalars diverge at a quadratic root")
    delta = 4.0 * e / abs(q) ** 2
    sigma = (
        2.0
        * (lam1 * lam2 - 1.0)
        / e
        * (1.0 + (lam1 * mu1).conjugate())
        / (1.0 + lam1 * mu1)
    )
    rho = -1.0 + 2.0 / (1.0 - u * u)
    m1 = (u + 1.0) / (u - 1.0)
    m2 = (u - 1.0) / (u + 1.0)
    h = (u * u + 1.0) / (u * u - 1.0)
    return FamilyScalars(
        sigma=complex(sigma),
        rho=complex(rho),
        delta=float(delta),
        m1=float(m1),
        m2=float(m2),
        h=float(h),
    )


def principal_curvatures_from_scalars(rho, sigma, twist_tol=1e-9):
    """(m1, m2) = (-Re rho + |sigma|, -Re rho - |sigma|); needs zero twist."""
    rho = complex(rho)
    if abs(rho.imag) > twist_tol * (1.0 + abs(rho)):
        raise BranchError(
            f"nonzero twist (Im rho = {rho.imag:.3g}): no real shape operator"
        )
    return -rho.real + abs(sigma), -rho.real - abs(sigma)


# ---------------------------------------------------------------------------
# tube congruences around an axis in the (xi, eta) chart


def _tube_labels(axis, nu):
    xi, eta = axis.xi, axis.eta
    sh, ch = np.sinh(nu), np.cosh(nu)
    if sh == 0:
        raise ChartSingularError("tube chart is singular on the axis (sinh nu = 0)")
    bxi, beta = xi.conjugate(), eta.conjugate()
    mu1 = (1.0 - ch.conjugate() - eta * bxi * sh.conjugate()) / (bxi * sh.conjugate())
    den = 1.0 + ch + beta * xi * sh
    mu2 = ExtComplex.infinity() if den == 0 else ExtComplex(xi * sh / den)
    return mu1, mu2, sh, ch, den


def tube_congruence(axis, nu):
    """Oriented geodesic of the tube congruence around an axis at parameter nu."""
    mu1, mu2, _, _, _ = _tube_labels(axis, complex(nu))
    return OrientedGeodesic(mu1, mu2)


def tube_family(axis):
    """Tube congruence as a chart with analytic derivatives.

    mu1 is anti-holomorphic and mu2 holomorphic in the tube parameter nu.
    """
    xi, eta = axis.xi, axis.eta
    bxi, beta = xi.conjugate(), eta.conjugate()

    def chart(nu):
        mu1, mu2, _, _, _ = _tube_labels(axis, nu)
        if mu2.is_inf:
            raise ChartSingularError("tube label leaves the chart (mu2 infinite)")
        return mu1, mu2.value

    def partials(nu):
        from .congruence import Partials

        sh, ch = np.sinh(nu), np.cosh(nu)
        if sh == 0:
            raise ChartSingularError("tube chart is singular on the axis")
        den = 1.0 + ch + beta * xi * sh
        dmu1 = 0j
        # dbar mu1 = u'(conj nu) with u(w) = (1 - cosh w)/(bxi sinh w) - eta
        dbmu1 = (1.0 - ch).conjugate() / (bxi * sh.conjugate() ** 2)
        dmu2 = xi * (1.0 + ch) / den**2
        dbmu2 = 0j
        return Partials(dmu1=dmu1, dbmu1=dbmu1, dmu2=dmu2, dbmu2=dbmu2)

    return Congruence(chart, partials=partials, name="tube congruence")


def tube_inverse(axis, mu1, mu2):
    """(sinh nu, cosh nu) recovered from tube labels; checks the chart."""
    xi, eta = axis.xi, axis.eta
    b2 = 1.0 + mu1.conjugate() * mu2
    if b2 == 0:
        raise ChartSingularError("tube inverse undefined on the reflected diagonal")
    sh = 2.0 * mu2 / (xi * b2)
    ch = (1.0 - mu1.conjugate() * mu2 - 2.0 * eta.conjugate() * mu2) / b2
    return sh, ch


# ---------------------------------------------------------------------------
# numeric shape operator


@dataclass(frozen=True)
class ShapeOperator:
    """First/second fundamental forms and curvatures of a parametrized surface."""

    first: np.ndarray
    second: np.ndarray
    m1: float
    m2: float
    mean: float
    gauss_intrinsic: float


def _vec_d1(fn, u, h):
    return (-fn(u + 2 * h) + 8 * fn(u + h) - 8 * fn(u - h) + fn(u - 2 * h)) / (12 * h)


def _vec_d2(fn, u, h):
    return (
        -fn(u + 2 * h) + 16 * fn(u + h) - 30 * fn(u) + 16 * fn(u - h) - fn(u - 2 * h)
    ) / (12 * h * h)


def shape_operator_numeric(mapping, x, y, h=1e-4, normal_hint=None):
    """Shape operator of (x, y) -> (z, t) by 4th-order stencils.

    Second fundamental form convention: II_ij = -<D_{X_i} X_j, N> with N the
    hyperbolic unit normal aligned with `normal_hint` (euclidean 3-vector);
    an equidistant tube then reports (coth, tanh) of the distance against the
    outward hint.  The intrinsic curvature comes from the ambient relation
    K = m1 m2 - 1.
    """

    def emb(u, v):
        z, t = mapping(u, v)
        return np.array([z.real, z.imag, t])

    p = emb(x, y)
    t = p[2]
    xx = _vec_d1(lambda u: emb(u, y), x, h)
    xy = _vec_d1(lambda v: emb(x, v), y, h)
    dxx = _vec_d2(lambda u: emb(u, y), x, h)
    dyy = _vec_d2(lambda v: emb(x, v), y, h)
    dxy = _vec_d1(lambda u: _vec_d1(lambda v: emb(u, v), y, h), x, h)

    ne = np.cross(xx, xy)
    nn = np.linalg.norm(ne)
    if nn == 0:
        raise DegenerateError("degenerate parametrization: zero normal")
    ne = ne / nn
    if normal_hint is not None and np.dot(ne, np.asarray(normal_hint)) < 0:
        ne = -ne

    first = (
        np.array([[xx @ xx, xx @ xy], [xy @ xx, xy @ xy]]) / t**2
    )

    def gamma(u, v):
        out = -(u[2] * v + v[2] * u) / t
        out[2] += (u @ v) / t
        return out

    cov = {
        (0, 0): dxx + gamma(xx, xx),
        (0, 1): dxy + gamma(xx, xy),
        (1, 1): dyy + gamma(xy, xy),
    }
    second = np.empty((2, 2))
    second[0, 0] = -(cov[(0, 0)] @ ne) / t
    second[0, 1] = second[1, 0] = -(cov[(0, 1)] @ ne) / t
    second[1, 1] = -(cov[(1, 1)] @ ne) / t

    evals = scipy.linalg.eigh(second, first, eigvals_only=True)
    m2, m1 = float(evals[0]), float(evals[1])
    return ShapeOperator(
        first=first,
        second=second,
        m1=m1,
        m2=m2,
        mean=0.5 * (m1 + m2),
        gauss_intrinsic=m1 * m2 - 1.0,
    )


# ---------------------------------------------------------------------------
# equidistance diagnostics and axis search


def distance_samples(surface, geodesic):
    """Hyperbolic distances from the surface samples to an oriented geodesic."""
    arc = arc_of(geodesic)
    return np.array(
        [distance_point_to_geodesic(p, arc) for p in surface.points()]
    )


def equidistance_spread(surface, geodesic):
    """(median distance, max |deviation from median|) over the surface."""
    d = distance_samples(surface, geodesic)
    med = float(np.median(d))
    return med, float(np.max(np.abs(d - med)))


def fit_symmetric_triple(mu1s, mu2s):
    """Least-squares symmetric triple (a, b, c) through labelled graph points.

    Solves conj(mu2)(b mu1 + c) = a mu1 + b in the total-least-squares sense;
    exact on maximal-family graphs, a best-effort axis seed otherwise.
    """
    mu1s = np.asarray(mu1s, dtype=complex)
    mu2s = np.asarray(mu2s, dtype=complex)
    if mu1s.size < 3:
        raise InputError("fitting a symmetric triple needs at least 3 labels")
    bm2 = np.conj(mu2s)
    rows = np.stack([-mu1s, bm2 * mu1s - 1.0, bm2], axis=1)
    _, _, vt = np.linalg.svd(rows, full_matrices=True)
    a, b, c = np.conj(vt[-1])
    return complex(a), complex(b), complex(c)


def best_fit_axis(surface, initial_endpoints=None, n_starts=6, seed=0, maxiter=300):
    """Search for the geodesic minimizing the equidistance spread.

    Nelder-Mead over boundary endpoints (4 real parameters), multistart from
    the supplied seeds plus random perturbations.  Returns (spread, (begin,
    end)) for the best axis found; a spread that stays large certifies that
    no equidistant axis exists.
    """
    pts = list(surface.points())

    def spread_of(params):
        b = complex(params[0], params[1])
        e = complex(params[2], params[3])
        if not (abs(b - e) > 1e-9):
            return np.inf
        try:
            arc = arc_of(from_endpoints(ExtComplex(b), ExtComplex(e)))
        except (LH3Error, ValueError):
            return np.inf
        d = [distance_point_to_geodesic(p, arc) for p in pts]
        med = np.median(d)
        return float(np.max(np.abs(np.asarray(d) - med)))

    rng = np.random.default_rng(seed)
    starts = []
    if initial_endpoints:
        for b, e in initial_endpoints:
            starts.append([b.real, b.imag, e.real, e.imag])
    while len(starts) < n_starts:
        base = starts[0] if starts else [0.0, 0.0, 1.0, 0.0]
        starts.append(list(np.asarray(base) + rng.normal(scale=0.5, size=4)))

    best = (np.inf, None)
    for s in starts:
        res = scipy.optimize.minimize(
            spread_of,
            np.asarray(s, dtype=float),
            method="Nelder-Mead",
            options={"maxiter": maxiter, "xatol": 1e-10, "fatol": 1e-12},
        )
        if res.fun < best[0]:
            b = complex(res.x[0], res.x[1])
            e = complex(res.x[2], res.x[3])
            best = (float(res.fun), (b, e))
    return best


# ---------------------------------------------------------------------------
# mesh export


def export_obj(path, surface):
    """Write the surface as an OBJ mesh of ball-model vertices and quads."""
    verts = surface.ball_vertices()
    ny, nx = surface.shape
    lines = ["# equidistant surface, ball model"]
    for v in verts:
        lines.append(f"v {v[0]:.12g} {v[1]:.12g} {v[2]:.12g}")
    for j in range(ny - 1):
        for k in range(nx - 1):
            a = j * nx + k + 1
            b = j * nx + k + 2
            c = (j + 1) * nx + k + 2
            d = (j + 1) * nx + k + 1
            lines.append(f"f {a} {b} {c} {d}")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")
    return len(verts), (ny - 1) * (nx - 1)


def export_csv(path, surface):
    """Write the surface samples as delimited text (half-space and ball)."""
    verts = surface.ball_vertices()
    ny, nx = surface.shape
    rows = ["nu_re,nu_im,r,z_re,z_im,t,y1,y2,y3"]
    i = 0
    for j in range(ny):
        for k in range(nx):
            nu = surface.nus[j, k]
            rows.append(
                f"{nu.real:.12g},{nu.imag:.12g},{surface.r[j, k]:.12g},"
                f"{surface.z[j, k].real:.12g},{surface.z[j, k].imag:.12g},"
                f"{surface.t[j, k]:.12g},"
                f"{verts[i][0]:.12g},{verts[i][1]:.12g},{verts[i][2]:.12g}"
            )
            i += 1
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(rows) + "\n")
    return len(rows) - 1


def read_obj_vertices(path):
    """(N, 3) vertex array of an OBJ file."""
    out = []
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            if line.startswith("v "):
                parts = line.split()
                out.append([float(parts[1]), float(parts[2]), float(parts[3])])
    return np.asarray(out)


def family_axis(f):
    """Convenience: the first of the family's two axis geodesics."""
    return axis_geodesics(f)[0]
