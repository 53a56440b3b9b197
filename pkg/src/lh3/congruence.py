"""Two-parameter families of oriented geodesics and their optical data.

A congruence is a map nu -> (mu1(nu, conj nu), mu2(nu, conj nu)) from a plane
domain into geodesic labels.  All pointwise quantities are built from the
first derivatives through the antisymmetric brackets

    J_kl = d mu_k dbar mu_l - dbar mu_k d mu_l,

with k, l ranging over {1, 2, 1b, 2b} (b marking a conjugated slot).  With
B = 1 + conj(mu1) mu2 and r the fibre parameter along each geodesic:

    sigma = 8 mu2 J_2b1b / (conj(mu2) Delta |B|^2)          (shear)
    rho   = -1 - (8 e^-r / Delta) [ J_21b e^r / B^2
              - |mu2|^2 J_11b e^-r / |B|^2 ]                 (expansion + i twist)
    Delta / 4 = J_22b e^2r / (|mu2|^2 |B|^2) + J_2b1 / conj(B)^2
              + J_1b2 / B^2 + |mu2|^2 J_11b e^-2r / |B|^2    (density)

The twist lambda = Im(rho) and the shear modulus are r-independent after
scaling by Delta; the reduced densities

    L = Delta lambda,   S = Delta sigma

drive the classification sign(|sigma|^2 - lambda^2) = sign(|S|^2 - L^2):
Lorentzian > 0, degenerate = 0, Riemannian < 0.
"""

from dataclasses import dataclass

import numpy as np

from . import fd
from .errors import CausticError, DegenerateError
from .extcomplex import ExtComplex
from .kahler import TangentL, metric, symplectic_form
from .lines import OrientedGeodesic

__all__ = [
    "Partials",
    "Congruence",
    "Rank2Graph",
    "OpticalData",
    "RankResult",
    "jacobians",
    "optical_scalars",
    "reduced_densities",
    "lagrangian_defect",
    "rank",
    "pullback_metric",
    "classify_metric",
    "complex_point_defect",
    "flatness_defect",
    "frame_tangents",
]


@dataclass(frozen=True)
class Partials:
    """First derivatives of (mu1, mu2) at a point: d and dbar of each."""

    dmu1: complex
    dbmu1: complex
    dmu2: complex
    dbmu2: complex


class Congruence:
    """Two-parameter family nu -> (mu1, mu2).

    chart(nu) returns the pair of complex labels; partials, when supplied,
    returns a Partials record of analytic first derivatives (preferred over
    finite differences whenever the congruence has closed-form derivatives).
    """

    def __init__(self, chart, partials=None, fd_step=fd.DEFAULT_STEP, name=""):
        self._chart = chart
        self._partials = partials
        self.fd_step = fd_step
        self.name = name

    def point(self, nu):
        mu1, mu2 = self._chart(nu)
        return complex(mu1), complex(mu2)

    def label(self, nu):
        mu1, mu2 = self.point(nu)
        return OrientedGeodesic(ExtComplex(mu1), ExtComplex(mu2))

    def derivatives(self, nu):
        if self._partials is not None:
            return self._partials(nu)
        d1, db1 = fd.wirtinger(lambda w: self.point(w)[0], nu, self.fd_step)
        d2, db2 = fd.wirtinger(lambda w: self.point(w)[1], nu, self.fd_step)
        return Partials(d1, db1, d2, db2)


class Rank2Graph(Congruence):
    """Graph congruence mu1 = nu, mu2 = F(nu, conj nu).

    dF, when given, maps nu to the analytic pair (d F, dbar F).
    """

    def __init__(self, F, dF=None, fd_step=fd.DEFAULT_STEP, name=""):
        self.F = F
        self.dF = dF

        def chart(nu):
            return nu, F(nu)

        partials = None
        if dF is not None:

            def partials(nu):
                d2, db2 = dF(nu)
                return Partials(1.0 + 0j, 0j, complex(d2), complex(db2))

        super().__init__(chart, partials, fd_step, name)

    def derivatives(self, nu):
        if self._partials is not None:
            return self._partials(nu)
        d2, db2 = fd.wirtinger(self.F, nu, self.fd_step)
        return Partials(1.0 + 0j, 0j, d2, db2)


_SLOTS = ("1", "2", "1b", "2b")


def jacobians(c, nu):
    """All brackets J_kl, k, l in {1, 2, 1b, 2b}, as a dict."""
    p = c.derivatives(nu)
    d = {
        "1": p.dmu1,
        "2": p.dmu2,
        "1b": p.dbmu1.conjugate(),
        "2b": p.dbmu2.conjugate(),
    }
    db = {
        "1": p.dbmu1,
        "2": p.dbmu2,
        "1b": p.dmu1.conjugate(),
        "2b": p.dmu2.conjugate(),
    }
    return {
        (k, l): d[k] * db[l] - db[k] * d[l] for k in _SLOTS for l in _SLOTS
    }


@dataclass(frozen=True)
class OpticalData:
    """Pointwise optical scalars of a congruence at fibre parameter r."""

    sigma: complex
    rho: complex
    delta: float
    r: float

    @property
    def twist(self):
        return self.rho.imag

    @property
    def expansion(self):
        return self.rho.real


def _bracket_data(c, nu):
    mu1, mu2 = c.point(nu)
    j = jacobians(c, nu)
    return mu1, mu2, j


def optical_scalars(c, nu, r, caustic_tol=1e-12):
    """Shear, expansion + i twist, and density at fibre parameter r."""
    mu1, mu2, j = _bracket_data(c, nu)
    b = 1.0 + mu1.conjugate() * mu2
    babs2 = abs(b) ** 2
    m2 = abs(mu2) ** 2
    if mu2 == 0 or b == 0:
        raise CausticError("optical scalars undefined at a chart-singular label")
    er, emr = np.exp(r), np.exp(-r)
    delta_c = 4.0 * (
        j[("2", "2b")] * er**2 / (m2 * babs2)
        + j[("2b", "1")] / b.conjugate() ** 2
        + j[("1b", "2")] / b**2
        + m2 * j[("1", "1b")] * emr**2 / babs2
    )
    delta = float(delta_c.real)
    scale = 4.0 * (
        abs(j[("2", "2b")]) * er**2 / (m2 * babs2)
        + abs(j[("2b", "1")]) / babs2
        + abs(j[("1b", "2")]) / babs2
        + m2 * abs(j[("1", "1b")]) * emr**2 / babs2
    )
    if abs(delta) <= caustic_tol * max(scale, 1.0):
        raise CausticError(f"density vanishes at nu={nu}, r={r} (caustic)")
    sigma = 8.0 * mu2 * j[("2b", "1b")] / (mu2.conjugate() * delta * babs2)
    rho = -1.0 - (8.0 * emr / delta) * (
        j[("2", "1b")] * er / b**2 - m2 * j[("1", "1b")] * emr / babs2
    )
    return OpticalData(sigma=sigma, rho=rho, delta=delta, r=float(r))


def reduced_densities(c, nu):
    """(L, S) = (Delta * twist, Delta * shear); both r-independent."""
    mu1, mu2, j = _bracket_data(c, nu)
    b = 1.0 + mu1.conjugate() * mu2
    if mu2 == 0 or b == 0:
        raise CausticError("reduced densities undefined at a chart-singular label")
    babs2 = abs(b) ** 2
    ell = -8.0 * (j[("2", "1b")] / b**2).imag
    s = 8.0 * mu2 * j[("2b", "1b")] / (mu2.conjugate() * babs2)
    return float(ell), s


def frame_tangents(c, nu):
    """Pushforwards of the coordinate frame (d/dx, d/dy) as label tangents."""
    p = c.derivatives(nu)
    base = c.label(nu)
    ux = TangentL(base, p.dmu1 + p.dbmu1, p.dmu2 + p.dbmu2)
    uy = TangentL(base, 1j * (p.dmu1 - p.dbmu1), 1j * (p.dmu2 - p.dbmu2))
    return ux, uy


def lagrangian_defect(c, nu):
    """|Omega(f_* d/dx, f_* d/dy)|; zero exactly on Lagrangian congruences."""
    ux, uy = frame_tangents(c, nu)
    return abs(symplectic_form(ux, uy))


def pullback_metric(c, nu):
    """Induced 2x2 real metric in the parameters (x, y), nu = x + iy."""
    ux, uy = frame_tangents(c, nu)
    gxx = metric(ux, ux)
    gxy = metric(ux, uy)
    gyy = metric(uy, uy)
    return np.array([[gxx, gxy], [gxy, gyy]])


@dataclass(frozen=True)
class RankResult:
    """Pointwise rank of nu -> mu1 with an indeterminacy flag."""

    value: int
    indeterminate: bool
    singular_values: tuple

    def __int__(self):
        return self.value

    def __eq__(self, other):
        if isinstance(other, int):
            return self.value == other and not self.indeterminate
        return NotImplemented


def rank(c, nu, tol=1e-8):
    """Rank of the real Jacobian of nu -> mu1, with a tolerance band.

    Singular values within a factor 10 of the threshold flag the result
    indeterminate.
    """
    p = c.derivatives(nu)
    dx = p.dmu1 + p.dbmu1
    dy = 1j * (p.dmu1 - p.dbmu1)
    m = np.array([[dx.real, dy.real], [dx.imag, dy.imag]])
    s = np.linalg.svd(m, compute_uv=False)
    cut = tol * max(1.0, s[0])
    value = int(np.sum(s > cut))
    indeterminate = bool(np.any((s > cut / 10.0) & (s < cut * 10.0)))
    return RankResult(value, indeterminate, tuple(float(x) for x in s))


def classify_metric(c, nu, band=1e-9):
    """'lorentzian', 'degenerate' or 'riemannian' by the sign of |S|^2 - L^2."""
    ell, s = reduced_densities(c, nu)
    disc = abs(s) ** 2 - ell**2
    scale = max(abs(s) ** 2 + ell**2, 1e-300)
    if abs(disc) <= band * scale:
        return "degenerate"
    return "lorentzian" if disc > 0 else "riemannian"


def complex_point_defect(c, nu):
    """|Delta * sigma| = |S|; vanishes exactly where the shear vanishes."""
    _, s = reduced_densities(c, nu)
    return abs(s)


def flatness_defect(c, points):
    """sup |d mu2| over the sample points; zero for anti-holomorphic graphs."""
    worst = 0.0
    for nu in np.asarray(points).ravel():
        p = c.derivatives(complex(nu))
        worst = max(worst, abs(p.dmu2))
    return worst


def require_rank2(c, nu, tol=1e-8):
    """Raise DegenerateError unless the congruence has full rank at nu."""
    r = rank(c, nu, tol)
    if r.value < 2 or r.indeterminate:
        raise DegenerateError(f"congruence is not rank 2 at nu={nu}")
    return r
