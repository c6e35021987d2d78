"""Vertices, edge functions and the per-triangle setup computation.

Screen coordinates are perspective-space pixels with y pointing down.
Every edge function value is a *doubled signed* area; the factor of one
half cancels in every ratio that uses it, and the sign carries the
inside/outside information the rasterizer needs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .errors import DegenerateTriangle, NonPositiveW
from .interp import AttributeVector

DEGENERACY_EPS = 1e-12


@dataclass(frozen=True)
class Vertex:
    x: float
    y: float
    w: float
    u: float = 0.0
    v: float = 0.0
    r: float = 1.0
    g: float = 1.0
    b: float = 1.0

    @property
    def attributes(self):
        return AttributeVector(self.u, self.v, self.r, self.g, self.b)


class EdgeCoefficients(NamedTuple):
    """Affine edge function ``alpha*x + beta*y + gamma``."""

    alpha: float
    beta: float
    gamma: float

    def __call__(self, x, y):
        return self.alpha * x + self.beta * y + self.gamma


def edge_coefficients(v0, v1, v2):
    """Return the three edge functions of a triangle.

    Edge ``i`` is the one opposite vertex ``i``; its value at a point P is
    the doubled signed area of the sub-triangle formed by P and the other
    two vertices, so the three are cyclic permutations of one formula.
    """
    verts = (v0, v1, v2)
    edges = []
    for i in range(3):
        a = verts[(i + 1) % 3]
        b = verts[(i + 2) % 3]
        edges.append(EdgeCoefficients(a.y - b.y, b.x - a.x, a.x * b.y - b.x * a.y))
    return tuple(edges)


def w_products(w0, w1, w2):
    """Products of the two w values *not* belonging to each vertex."""
    return (w1 * w2, w2 * w0, w0 * w1)


def _gamma_sum(edges):
    # correctly rounded, so vertex order cannot change the result's magnitude
    return math.fsum(e.gamma for e in edges)


def degeneracy_threshold(vertices):
    xs = [p.x for p in vertices]
    ys = [p.y for p in vertices]
    extent = max(max(xs) - min(xs), max(ys) - min(ys))
    return DEGENERACY_EPS * max(1.0, extent * extent)


@dataclass(frozen=True)
class TriangleSetup:
    vertices: tuple
    edges: tuple
    wprod: tuple
    terms: tuple
    orientation: int

    @property
    def w(self):
        return tuple(p.w for p in self.vertices)

    @property
    def total_area(self):
        """Doubled signed area of the whole triangle."""
        return _gamma_sum(self.edges)

    @property
    def attributes(self):
        return tuple(p.attributes for p in self.vertices)

    def term(self, i, k):
        """Premultiplied coefficient ``wprod[i] * edges[i][k]``."""
        return self.terms[3 * i + k]

    @property
    def x_step(self):
        return (self.terms[0], self.terms[3], self.terms[6])

    @property
    def y_step(self):
        return (self.terms[1], self.terms[4], self.terms[7])

    def bounds(self):
        xs = [p.x for p in self.vertices]
        ys = [p.y for p in self.vertices]
        return min(xs), min(ys), max(xs), max(ys)

    def owns_edge(self, i):
        """Top-left fill rule for pixel centres lying exactly on edge ``i``.

        With y down, ``orientation * (alpha, beta)`` is the inward normal;
        a left edge has an inward normal pointing to +x, a top edge is
        horizontal with the interior below it.
        """
        a = self.orientation * self.edges[i].alpha
        b = self.orientation * self.edges[i].beta
        return a > 0 or (a == 0 and b > 0)


def triangle_setup(v0, v1, v2):
    verts = (v0, v1, v2)
    for p in verts:
        if not p.w > 0:
            raise NonPositiveW(f"vertex w must be positive, got {p.w!r}")
    edges = edge_coefficients(v0, v1, v2)
    total = _gamma_sum(edges)
    if abs(total) < degeneracy_threshold(verts):
        raise DegenerateTriangle(f"doubled area {total!r} is below the degeneracy threshold")
    wprod = w_products(v0.w, v1.w, v2.w)
    terms = tuple(wprod[i] * c for i in range(3) for c in edges[i])
    return TriangleSetup(
        vertices=verts,
        edges=edges,
        wprod=wprod,
        terms=terms,
        orientation=1 if total > 0 else -1,
    )
