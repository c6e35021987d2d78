"""Attribute interpolation over a triangle.

Three schemes are provided:

* ``interpolate_linear`` with *screen* barycentrics is plain screen-space
  interpolation; it ignores the perspective divide and is only kept so its
  error can be shown.
* ``interpolate_linear`` with *corrected* barycentrics is perspective
  correct.
* ``interpolate_rational`` is hyperbolic interpolation written directly in
  terms of screen barycentrics and the vertex w values.

The last two agree up to rounding.
"""

from __future__ import annotations

from typing import NamedTuple

from .errors import ZeroDenominator

RATIONAL_EPS = 1e-300


class AttributeVector(NamedTuple):
    u: float
    v: float
    r: float
    g: float
    b: float


def interpolate_linear(bary, attrs):
    b0, b1, b2 = bary
    a0, a1, a2 = attrs
    return AttributeVector(*(b0 * p + b1 * q + b2 * s for p, q, s in zip(a0, a1, a2)))


def interpolate_rational(bary_screen, w, attrs):
    """Hyperbolic interpolation in product form (no per-vertex divisions).

    Each screen weight ``b_i`` is scaled by the product of the *other* two
    w values, which is the reciprocal form multiplied through by
    ``w0*w1*w2``.
    """
    b0, b1, b2 = bary_screen
    w0, w1, w2 = w
    k0 = b0 * (w1 * w2)
    k1 = b1 * (w2 * w0)
    k2 = b2 * (w0 * w1)
    den = k0 + k1 + k2
    if not abs(den) >= RATIONAL_EPS:
        raise ZeroDenominator(f"rational interpolation denominator {den!r}")
    a0, a1, a2 = attrs
    return AttributeVector(*((k0 * p + k1 * q + k2 * s) / den for p, q, s in zip(a0, a1, a2)))


def rational_reference(bary_screen, w, attrs):
    """Reciprocal form: interpolate ``attr/w`` and ``1/w``, then divide.

    Slower than ``interpolate_rational`` but computed along an independent
    path, so the CLI report and the tests use it as a reference value.
    """
    b0, b1, b2 = bary_screen
    w0, w1, w2 = w
    den = b0 / w0 + b1 / w1 + b2 / w2
    if not abs(den) >= RATIONAL_EPS:
        raise ZeroDenominator(f"rational interpolation denominator {den!r}")
    a0, a1, a2 = attrs
    return AttributeVector(*((b0 * p / w0 + b1 * q / w1 + b2 * s / w2) / den for p, q, s in zip(a0, a1, a2)))


def interpolate_depth(bary_corrected, w):
    """Eye-space w at the pixel, for the depth buffer."""
    b0, b1, b2 = bary_corrected
    return b0 * w[0] + b1 * w[1] + b2 * w[2]
