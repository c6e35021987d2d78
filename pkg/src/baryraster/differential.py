"""Analytic screen-space derivatives of perspective-correct attributes.

With ``T_i`` the premultiplied areas and ``D = T_0 + T_1 + T_2`` the
interpolant is ``f = sum(T_i * f_i) / D``.  Differentiating the quotient
and using ``dD/dx = sum(dT_i/dx)`` gives

    df/dx = sum(dT_i/dx * (f_i - f)) / D

where ``dT_i/dx`` is exactly the premultiplied alpha term of edge ``i``
(beta for y).  No second evaluation of the interpolant is needed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from .barycentric import area_sum, premultiplied_areas_at
from .errors import ZeroDenominator


@dataclass(frozen=True)
class Differentials:
    du_dx: float
    du_dy: float
    dv_dx: float
    dv_dy: float
    du: float | None = None
    dv: float | None = None


def _check(d):
    if d == 0 or not math.isfinite(d):
        raise ZeroDenominator(f"derivative denominator {d!r}")


def weighted_partials(dx, dy, denom, values, value):
    """``(d/dx, d/dy)`` of one interpolated channel.

    ``dx``/``dy`` are the per-edge derivatives of the premultiplied areas and
    ``denom`` their sum at the point; ``values`` are the vertex values and
    ``value`` the interpolated one.  Any channel works, not only u and v.
    """
    _check(denom)
    d0 = values[0] - value
    d1 = values[1] - value
    d2 = values[2] - value
    return (
        (dx[0] * d0 + dx[1] * d1 + dx[2] * d2) / denom,
        (dy[0] * d0 + dy[1] * d1 + dy[2] * d2) / denom,
    )


def partials_at(setup, x, y, interpolated, areas=None):
    """Partials of u and v at ``(x, y)``.

    ``interpolated`` must be the perspective-correct attribute vector at
    that point.  Pass ``areas`` (premultiplied) to share the denominator
    with a barycentric evaluation already done by the caller.
    """
    if areas is None:
        areas = premultiplied_areas_at(setup, x, y)
    denom = area_sum(areas)
    us = [a.u for a in setup.attributes]
    vs = [a.v for a in setup.attributes]
    du_dx, du_dy = weighted_partials(setup.x_step, setup.y_step, denom, us, interpolated.u)
    dv_dx, dv_dy = weighted_partials(setup.x_step, setup.y_step, denom, vs, interpolated.v)
    return Differentials(du_dx, du_dy, dv_dx, dv_dy)


def screen_partials(setup, interpolated):
    """Partials of the screen-space (non-corrected) interpolant.

    That interpolant is affine in (x, y), so the result is constant over
    the triangle; it is what the comparison mode uses to pick MIP levels.
    """
    dx = tuple(e.alpha for e in setup.edges)
    dy = tuple(e.beta for e in setup.edges)
    denom = setup.total_area
    us = [a.u for a in setup.attributes]
    vs = [a.v for a in setup.attributes]
    du_dx, du_dy = weighted_partials(dx, dy, denom, us, interpolated.u)
    dv_dx, dv_dy = weighted_partials(dx, dy, denom, vs, interpolated.v)
    return Differentials(du_dx, du_dy, dv_dx, dv_dy)


def total_differentials(partials, spacing=1.0):
    """Attach ``du``/``dv``: the partial sums scaled by pixel spacing S."""
    if not spacing > 0:
        raise ValueError(f"pixel spacing must be positive, got {spacing!r}")
    return replace(
        partials,
        du=spacing * (partials.du_dx + partials.du_dy),
        dv=spacing * (partials.dv_dx + partials.dv_dy),
    )


def total_differentials_at(setup, x, y, interpolated, spacing=1.0, areas=None):
    """Single-fraction form of the totals, with (alpha + beta) per edge."""
    if not spacing > 0:
        raise ValueError(f"pixel spacing must be positive, got {spacing!r}")
    if areas is None:
        areas = premultiplied_areas_at(setup, x, y)
    denom = area_sum(areas)
    _check(denom)
    t = setup.terms
    ab = (t[0] + t[1], t[3] + t[4], t[6] + t[7])
    out = []
    for ch in ("u", "v"):
        vals = [getattr(a, ch) for a in setup.attributes]
        f = getattr(interpolated, ch)
        out.append(spacing * (ab[0] * (vals[0] - f) + ab[1] * (vals[1] - f) + ab[2] * (vals[2] - f)) / denom)
    return out[0], out[1]


def max_mip_level(tex_width, tex_height):
    return max(tex_width, tex_height).bit_length() - 1


def mip_level(diff, tex_width, tex_height):
    """Level of detail from the texel footprint of one pixel.

    Signed totals are made absolute here; the larger axis wins.
    """
    if tex_width < 1 or tex_height < 1:
        raise ValueError("texture dimensions must be >= 1")
    top = max_mip_level(tex_width, tex_height)
    footprint = max(abs(diff.du) * tex_width, abs(diff.dv) * tex_height)
    if not footprint > 1.0:
        return 0.0
    if not math.isfinite(footprint):
        return float(top)
    return min(math.log2(footprint), float(top))
