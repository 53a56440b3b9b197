"""Extended complex numbers: points of the Riemann sphere C + {inf}.

Boundary points of hyperbolic 3-space and the two coordinates of an oriented
geodesic live here.  Equality at infinity is exact; finite equality is
tolerance based (chordal metric).  Moebius maps are evaluated totally:
denominator zero gives infinity, infinity maps to a/c.
"""

import cmath
import math

__all__ = ["ExtComplex", "INF", "chordal"]

_EQ_TOL = 1e-12


class ExtComplex:
    """A finite complex number or the point at infinity."""

    __slots__ = ("_v",)

    def __init__(self, value=0j):
        if isinstance(value, ExtComplex):
            self._v = value._v
            return
        if value is None:
            self._v = None
            return
        value = complex(value)
        if cmath.isinf(value) or cmath.isnan(value):
            if cmath.isnan(value):
                raise ValueError("NaN is not a point of the sphere")
            self._v = None
        else:
            self._v = value

    @classmethod
    def infinity(cls):
        return cls(None)

    @property
    def is_inf(self):
        return self._v is None

    @property
    def value(self):
        """Finite complex value; raises at infinity."""
        if self._v is None:
            raise ValueError("point at infinity has no finite value")
        return self._v

    def conj(self):
        return ExtComplex(None if self._v is None else self._v.conjugate())

    def __neg__(self):
        return ExtComplex(None if self._v is None else -self._v)

    def reciprocal(self):
        """1/x with 1/0 = inf and 1/inf = 0."""
        if self._v is None:
            return ExtComplex(0j)
        if self._v == 0:
            return ExtComplex(None)
        return ExtComplex(1.0 / self._v)

    def antipode(self):
        """The antipodal point tau(x) = -1/conj(x)."""
        return (-self.conj()).reciprocal()

    def isclose(self, other, tol=1e-9):
        """Chordal closeness; exact at infinity when both are infinite."""
        other = ExtComplex(other)
        return chordal(self, other) <= tol

    def __eq__(self, other):
        try:
            other = ExtComplex(other)
        except (TypeError, ValueError):
            return NotImplemented
        if self._v is None or other._v is None:
            return self._v is None and other._v is None
        return abs(self._v - other._v) <= _EQ_TOL * max(
            1.0, abs(self._v), abs(other._v)
        )

    def __hash__(self):
        # Hash only distinguishes inf from finite; fine for small sets.
        return hash(self._v is None)

    def __repr__(self):
        if self._v is None:
            return "ExtComplex(inf)"
        return f"ExtComplex({self._v!r})"

    def to_json(self):
        """JSON form: [re, im] for finite values, the string "inf" otherwise."""
        if self._v is None:
            return "inf"
        return [self._v.real, self._v.imag]

    @classmethod
    def from_json(cls, obj):
        if obj == "inf":
            return cls(None)
        if isinstance(obj, (int, float, complex)):
            return cls(complex(obj))
        if isinstance(obj, (list, tuple)) and len(obj) == 2:
            return cls(complex(float(obj[0]), float(obj[1])))
        raise ValueError(f"cannot parse extended complex value from {obj!r}")

    def mobius(self, a, b, c, d):
        """Evaluate (a x + b) / (c x + d) totally on the sphere."""
        if self._v is None:
            if c == 0:
                return ExtComplex(None)
            return ExtComplex(a / c)
        num = a * self._v + b
        den = c * self._v + d
        if den == 0:
            if num == 0:
                raise ValueError("degenerate Moebius map (zero determinant)")
            return ExtComplex(None)
        return ExtComplex(num / den)


INF = ExtComplex(None)


def chordal(x, y):
    """Chordal distance on the sphere, 2|x-y|/sqrt((1+|x|^2)(1+|y|^2))."""
    x = ExtComplex(x)
    y = ExtComplex(y)
    if x.is_inf and y.is_inf:
        return 0.0
    if x.is_inf:
        return 2.0 / math.hypot(1.0, abs(y.value))
    if y.is_inf:
        return 2.0 / math.hypot(1.0, abs(x.value))
    xv, yv = x.value, y.value
    # hypot avoids overflow of |x|^2 for magnitudes beyond 1e154.
    return 2.0 * abs(xv - yv) / (math.hypot(1.0, abs(xv)) * math.hypot(1.0, abs(yv)))
