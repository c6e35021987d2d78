import random

import numpy as np
import pytest

from baryraster import Vertex, triangle_setup

# Eye-space floor rectangle seen by a pinhole camera; corners sit at
# w = 1 (near edge) and w = 4 (far edge).
FOCAL = 60.0
CENTER = (64.0, 64.0)
PLANE_ORIGIN = np.array([-1.0, 1.0, 1.0])
PLANE_U = np.array([2.0, 0.0, 0.0])
PLANE_V = np.array([0.0, -2.0, 3.0])


def project(u, v):
    x, y, z = PLANE_ORIGIN + u * PLANE_U + v * PLANE_V
    return Vertex(float(CENTER[0] + FOCAL * x / z), float(CENTER[1] + FOCAL * y / z), float(z), u, v)


def quad_triangles():
    q = [project(0.0, 0.0), project(1.0, 0.0), project(1.0, 1.0), project(0.0, 1.0)]
    return [(q[0], q[1], q[2]), (q[0], q[2], q[3])]


def plane_uv(x, y):
    """Analytic inverse of the projection: intersect the pixel ray with the
    plane and read off the plane parameters."""
    ray = np.array([(x - CENTER[0]) / FOCAL, (y - CENTER[1]) / FOCAL, 1.0])
    _, u, v = np.linalg.solve(np.column_stack([ray, -PLANE_U, -PLANE_V]), PLANE_ORIGIN)
    return u, v


def random_setup(rng, size=128.0, w_ratio=16.0, min_shape=0.05, offset=0.0, min_extent=0.0):
    while True:
        verts = [
            Vertex(offset + rng.uniform(0, size), offset + rng.uniform(0, size), rng.uniform(1.0, w_ratio),
                   rng.random(), rng.random(), rng.random(), rng.random(), rng.random())
            for _ in range(3)
        ]
        try:
            s = triangle_setup(*verts)
        except Exception:
            continue
        x0, y0, x1, y1 = s.bounds()
        ext = max(x1 - x0, y1 - y0)
        if ext >= min_extent and abs(s.total_area) >= min_shape * ext * ext:
            return s


def interior_point(rng, setup, margin=0.01):
    while True:
        a, b = rng.random(), rng.random()
        c = 1.0 - a - b
        if min(a, b, c) >= margin:
            break
    p0, p1, p2 = setup.vertices
    return a * p0.x + b * p1.x + c * p2.x, a * p0.y + b * p1.y + c * p2.y


@pytest.fixture
def rng():
    return random.Random(1234)


@pytest.fixture
def right_triangle():
    return triangle_setup(Vertex(0, 0, 1), Vertex(4, 0, 1), Vertex(0, 4, 1))


@pytest.fixture
def perspective_triangle():
    return triangle_setup(Vertex(0, 0, 1, u=0, v=0), Vertex(4, 0, 2, u=1, v=0), Vertex(0, 4, 4, u=0, v=1))
