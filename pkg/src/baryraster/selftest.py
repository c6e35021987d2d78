"""Quick randomized checks behind ``baryraster selftest``.

Each check returns ``(name, passed, detail)``.  The pytest suite runs
larger versions of the same properties.
"""

from __future__ import annotations

import random

from .barycentric import areas_at, corrected_barycentrics, premultiplied_areas_at, screen_barycentrics
from .core import Vertex, triangle_setup
from .differential import partials_at
from .errors import DegenerateTriangle
from .interp import interpolate_linear, interpolate_rational


def random_triangle(rng, size=128.0, w_ratio=16.0, min_shape=0.05, min_extent=0.0):
    """Random triangle with w spread at most ``w_ratio``, bounding box at
    least ``min_extent`` pixels and doubled area at least
    ``min_shape * extent**2``."""
    while True:
        verts = [
            Vertex(rng.uniform(0, size), rng.uniform(0, size), rng.uniform(1.0, w_ratio),
                   rng.random(), rng.random(), rng.random(), rng.random(), rng.random())
            for _ in range(3)
        ]
        try:
            setup = triangle_setup(*verts)
        except DegenerateTriangle:
            continue
        x0, y0, x1, y1 = setup.bounds()
        extent = max(x1 - x0, y1 - y0)
        if extent >= min_extent and abs(setup.total_area) >= min_shape * extent * extent:
            return setup


def random_interior_point(rng, setup):
    """A point with all barycentric weights at least 0.01."""
    while True:
        a, b = rng.random(), rng.random()
        c = 1.0 - a - b
        if min(a, b, c) >= 0.01:
            break
    p0, p1, p2 = setup.vertices
    return a * p0.x + b * p1.x + c * p2.x, a * p0.y + b * p1.y + c * p2.y


def check_identity(n, seed=0):
    rng = random.Random(seed)
    worst = 0.0
    for _ in range(n):
        s = random_triangle(rng)
        x, y = random_interior_point(rng, s)
        attrs = s.attributes
        lhs = interpolate_rational(screen_barycentrics(areas_at(s, x, y)), s.w, attrs)
        rhs = interpolate_linear(corrected_barycentrics(premultiplied_areas_at(s, x, y)), attrs)
        scale = max(abs(c) for a in attrs for c in a)
        worst = max(worst, max(abs(p - q) for p, q in zip(lhs, rhs)) / scale)
    return "identity", worst <= 1e-12, f"max relative error {worst:.3e} over {n} instances"


def check_partition(n, seed=1):
    rng = random.Random(seed)
    worst = 0.0
    for _ in range(n):
        s = random_triangle(rng)
        x, y = random_interior_point(rng, s)
        for b in (screen_barycentrics(areas_at(s, x, y)), corrected_barycentrics(premultiplied_areas_at(s, x, y))):
            worst = max(worst, abs(sum(b) - 1.0))
    return "partition of unity", worst <= 1e-12, f"max |sum - 1| {worst:.3e} over {n} instances"


def check_gradient(n, seed=2, h=1e-3):
    rng = random.Random(seed)
    worst = 0.0
    for _ in range(n):
        # keeps h small against the curvature of the interpolant
        s = random_triangle(rng, min_extent=16.0, min_shape=0.1)
        x, y = random_interior_point(rng, s)

        def uv(px, py):
            a = interpolate_linear(corrected_barycentrics(premultiplied_areas_at(s, px, py)), s.attributes)
            return a.u, a.v

        d = partials_at(s, x, y, interpolate_linear(corrected_barycentrics(premultiplied_areas_at(s, x, y)), s.attributes))
        xp, xm, yp, ym = uv(x + h, y), uv(x - h, y), uv(x, y + h), uv(x, y - h)
        fd = ((xp[0] - xm[0]) / (2 * h), (yp[0] - ym[0]) / (2 * h), (xp[1] - xm[1]) / (2 * h), (yp[1] - ym[1]) / (2 * h))
        for an, num in zip((d.du_dx, d.du_dy, d.dv_dx, d.dv_dy), fd):
            worst = max(worst, abs(an - num) / max(1e-5 * abs(an), 1e-8))
    return "gradient", worst <= 1.0, f"max error / tolerance {worst:.3f} over {n} instances"


def run(n=10_000):
    return [check_identity(n), check_partition(n), check_gradient(max(1, n // 10))]
