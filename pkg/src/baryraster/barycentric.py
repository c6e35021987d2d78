"""Per-point sub-triangle areas, barycentric coordinates and coverage."""

from __future__ import annotations

import enum
from typing import NamedTuple

from .core import DEGENERACY_EPS
from .errors import ZeroDenominator


class Areas(NamedTuple):
    """Doubled signed areas of PP1P2, PP2P0 and PP0P1.

    Depending on the producer these are plain or premultiplied by the
    w products of the owning triangle.
    """

    a0: float
    a1: float
    a2: float


class Barycentrics(NamedTuple):
    b0: float
    b1: float
    b2: float


class Coverage(enum.Enum):
    INSIDE = "inside"
    OUTSIDE = "outside"
    ON_EDGE = "on_edge"


def pixel_center(i, j):
    return i + 0.5, j + 0.5


def areas_at(setup, x, y):
    e0, e1, e2 = setup.edges
    return Areas(
        e0.alpha * x + e0.beta * y + e0.gamma,
        e1.alpha * x + e1.beta * y + e1.gamma,
        e2.alpha * x + e2.beta * y + e2.gamma,
    )


def premultiplied_areas_at(setup, x, y):
    """Areas scaled by the w products, evaluated from the nine setup terms."""
    t = setup.terms
    return Areas(
        t[0] * x + t[1] * y + t[2],
        t[3] * x + t[4] * y + t[5],
        t[6] * x + t[7] * y + t[8],
    )


def area_sum(areas):
    """Shared denominator of the barycentric ratios and of the derivatives."""
    return areas[0] + areas[1] + areas[2]


def _normalize(areas, eps):
    s = area_sum(areas)
    if not abs(s) >= eps:
        raise ZeroDenominator(f"area sum {s!r} is below {eps!r}")
    return Barycentrics(areas[0] / s, areas[1] / s, areas[2] / s)


def screen_barycentrics(areas, eps=DEGENERACY_EPS):
    return _normalize(areas, eps)


def corrected_barycentrics(areas, eps=DEGENERACY_EPS):
    """Eye-space barycentrics from *premultiplied* areas.

    The w products weight each area by the depth of the two vertices it
    does not touch, so the normalized result is linear in eye space.
    """
    return _normalize(areas, eps)


def coverage(setup, areas):
    """Classify a point by the orientation-adjusted signs of its areas.

    Works for plain and premultiplied areas alike, since w > 0 keeps the
    signs unchanged.
    """
    s = setup.orientation
    zero = False
    for a in areas:
        a = s * a
        if a < 0:
            return Coverage.OUTSIDE
        if a == 0:
            zero = True
    return Coverage.ON_EDGE if zero else Coverage.INSIDE


def accepts(setup, areas):
    """Coverage plus the top-left fill rule for centres exactly on an edge."""
    cov = coverage(setup, areas)
    if cov is Coverage.INSIDE:
        return True
    if cov is Coverage.OUTSIDE:
        return False
    return all(setup.owns_edge(i) for i, a in enumerate(areas) if a == 0)
