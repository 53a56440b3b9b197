"""Finite-difference derivatives for fields on the complex plane.

Fields f(nu) may depend on both nu and conj(nu); the complex-conjugate pair
of first derivatives is recovered from real-direction stencils:

    d f = (d_x f - i d_y f) / 2,      dbar f = (d_x f + i d_y f) / 2.

Default stencils are 5-point 4th order; one plain 2nd-order central variant
is kept for convergence-ratio experiments.  A Richardson extrapolation helper
sharpens any fixed-order rule.
"""

import numpy as np

__all__ = [
    "diff4",
    "diff2",
    "diff4_second",
    "wirtinger",
    "wirtinger2",
    "richardson",
    "partial_real",
]

DEFAULT_STEP = 1e-3


def diff4(f, x, h=DEFAULT_STEP):
    """4th-order first derivative of f along a real parameter."""
    return (
        -f(x + 2 * h) + 8 * f(x + h) - 8 * f(x - h) + f(x - 2 * h)
    ) / (12 * h)


def diff2(f, x, h=DEFAULT_STEP):
    """Plain central difference (2nd order)."""
    return (f(x + h) - f(x - h)) / (2 * h)


def diff4_second(f, x, h=DEFAULT_STEP):
    """4th-order second derivative of f along a real parameter."""
    return (
        -f(x + 2 * h)
        + 16 * f(x + h)
        - 30 * f(x)
        + 16 * f(x - h)
        - f(x - 2 * h)
    ) / (12 * h**2)


def partial_real(f, nu, direction, h=DEFAULT_STEP, order=4):
    """Directional derivative of f at nu along a real multiple of direction."""
    rule = diff4 if order == 4 else diff2
    return rule(lambda s: f(nu + s * direction), 0.0, h)


def wirtinger(f, nu, h=DEFAULT_STEP, order=4):
    """First derivatives (df, dbar f) of a field on the plane."""
    fx = partial_real(f, nu, 1.0, h, order)
    fy = partial_real(f, nu, 1j, h, order)
    return 0.5 * (fx - 1j * fy), 0.5 * (fx + 1j * fy)


def wirtinger2(f, nu, h=DEFAULT_STEP):
    """Second derivatives (dd f, dbar dbar f, d dbar f), 4th order.

    The mixed real derivative is computed as a composition of two 4th-order
    first-derivative stencils.
    """
    fxx = diff4_second(lambda s: f(nu + s), 0.0, h)
    fyy = diff4_second(lambda s: f(nu + 1j * s), 0.0, h)
    fxy = diff4(
        lambda s: diff4(lambda u: f(nu + s + 1j * u), 0.0, h), 0.0, h
    )
    dd = 0.25 * (fxx - fyy - 2j * fxy)
    dbdb = 0.25 * (fxx - fyy + 2j * fxy)
    ddb = 0.25 * (fxx + fyy)
    return dd, dbdb, ddb


def richardson(rule, h, factor=2.0, order=4):
    """One Richardson step for a stencil of known order: rule(h) -> value."""
    a = rule(h)
    b = rule(h / factor)
    k = factor**order
    return (k * b - a) / (k - 1.0)
