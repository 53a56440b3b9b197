"""The neutral Kaehler structure on the space of oriented geodesics.

Tangent vectors at a label (mu1, mu2) are pairs (dmu1, dmu2).  With
A = (1 + mu1 conj(mu2))^(-2):

    J (u1, u2)   = (i u1, i u2)
    Omega(u, v)  = -Re[ A (u1 conj(v2) - v1 conj(u2)) ]
    G(u, v)      =  Im[ A (u1 conj(v2) + v1 conj(u2)) ]

G is symmetric of signature (+, +, -, -), Omega antisymmetric and closed, and
G(u, v) = Omega(Ju, v) holds exactly.  In the real coordinate basis
(Re mu1, Im mu1, Re mu2, Im mu2) the Gram matrix has the block form
[[0, B], [B^T, 0]] with B a scaled rotation, so the eigenvalues are
+|A|, +|A|, -|A|, -|A|.
"""

from dataclasses import dataclass

import numpy as np

from .errors import ChartSingularError, ModelDomainError
from .lines import OrientedGeodesic

__all__ = [
    "TangentL",
    "coefficient",
    "complex_structure",
    "symplectic_form",
    "metric",
    "gram_matrix",
    "signature",
    "closedness_defect",
]

# Real coordinate tangent frame (Re mu1, Im mu1, Re mu2, Im mu2).
_FRAME = ((1, 0), (1j, 0), (0, 1), (0, 1j))


@dataclass(frozen=True)
class TangentL:
    """Tangent vector (dmu1, dmu2) at an oriented-geodesic label."""

    base: OrientedGeodesic
    dmu1: complex
    dmu2: complex

    def __post_init__(self):
        object.__setattr__(self, "dmu1", complex(self.dmu1))
        object.__setattr__(self, "dmu2", complex(self.dmu2))
        if self.base.mu1.is_inf or self.base.mu2.is_inf:
            raise ChartSingularError("tangent components need a finite label")
        if not (np.isfinite(abs(self.dmu1)) and np.isfinite(abs(self.dmu2))):
            raise ModelDomainError("tangent components must be finite")


def _same_base(u, v):
    if u.base is v.base:
        return
    if u.base.mu1 == v.base.mu1 and u.base.mu2 == v.base.mu2:
        return
    raise ModelDomainError("tangent vectors must share a base label")


def coefficient(base):
    """A = (1 + mu1 conj(mu2))^(-2) at the label."""
    if base.mu1.is_inf or base.mu2.is_inf:
        raise ChartSingularError("coefficient needs a finite label")
    den = 1.0 + base.mu1.value * base.mu2.value.conjugate()
    # den != 0 off the reflected diagonal, which the label type guarantees.
    return den**-2


def complex_structure(u):
    """J u = (i dmu1, i dmu2); J^2 = -Id exactly."""
    return TangentL(u.base, 1j * u.dmu1, 1j * u.dmu2)


def symplectic_form(u, v):
    """Omega(u, v); antisymmetric, closed, compatible with J and the metric."""
    _same_base(u, v)
    a = coefficient(u.base)
    return float(
        -(a * (u.dmu1 * v.dmu2.conjugate() - v.dmu1 * u.dmu2.conjugate())).real
    )


def metric(u, v):
    """Neutral metric G(u, v) = Omega(Ju, v)."""
    _same_base(u, v)
    a = coefficient(u.base)
    return float(
        (a * (u.dmu1 * v.dmu2.conjugate() + v.dmu1 * u.dmu2.conjugate())).imag
    )


def gram_matrix(base):
    """4x4 real Gram matrix of G in the frame (Re mu1, Im mu1, Re mu2, Im mu2)."""
    vecs = [TangentL(base, *f) for f in _FRAME]
    return np.array([[metric(a, b) for b in vecs] for a in vecs])


def signature(base):
    """Eigenvalue signs of the Gram matrix as (n_plus, n_minus)."""
    w = np.linalg.eigvalsh(gram_matrix(base))
    scale = max(np.max(np.abs(w)), 1e-300)
    plus = int(np.sum(w > 1e-12 * scale))
    minus = int(np.sum(w < -1e-12 * scale))
    return plus, minus


def closedness_defect(base, h=1e-3):
    """Max |dOmega| component by plain central differences at step h.

    Components of the 2-form are differentiated in the four real chart
    coordinates; the alternating sum d_j O_kl - d_k O_jl + d_l O_jk is
    evaluated for the four index triples.  Second-order stencils on purpose:
    halving h should shrink the defect by roughly 4.
    """
    if base.mu1.is_inf or base.mu2.is_inf:
        raise ChartSingularError("closedness defect needs a finite label")
    m1, m2 = base.mu1.value, base.mu2.value

    def omega(coords, j, k):
        mu1 = complex(coords[0], coords[1])
        mu2 = complex(coords[2], coords[3])
        a = (1.0 + mu1 * mu2.conjugate()) ** -2
        uj = _FRAME[j]
        vk = _FRAME[k]
        return -(
            a * (uj[0] * complex(vk[1]).conjugate() - vk[0] * complex(uj[1]).conjugate())
        ).real

    base_coords = np.array([m1.real, m1.imag, m2.real, m2.imag])

    def d(j, k, l):
        # partial_j Omega_kl by central difference
        cp = base_coords.copy()
        cp[j] += h
        up = omega(cp, k, l)
        cp[j] -= 2 * h
        dn = omega(cp, k, l)
        return (up - dn) / (2 * h)

    worst = 0.0
    for j in range(4):
        for k in range(j + 1, 4):
            for l in range(k + 1, 4):
                val = d(j, k, l) - d(k, j, l) + d(l, j, k)
                worst = max(worst, abs(val))
    return worst
