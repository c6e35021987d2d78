"""Scan conversion with incremental premultiplied-area updates.

Each row of the clipped bounding box is anchored with one direct
evaluation of the premultiplied areas; every further pixel in the row
adds the three alpha terms.  Producing the corrected barycentrics from the
previous pixel's areas then costs three additions for the step, two for
the denominator, one reciprocal and three multiplications.  The
``instrument`` option counts those operations on the very code path that
renders, by running it on counting number wrappers.

Coverage is decided on the plain edge functions evaluated directly, which
negate exactly between two triangles sharing an edge, so the top-left
rule shades every shared-edge pixel once.
"""

from __future__ import annotations

import enum
import math
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .barycentric import Barycentrics, accepts, areas_at, premultiplied_areas_at, screen_barycentrics
from .core import triangle_setup
from .differential import Differentials, screen_partials, total_differentials, weighted_partials
from .errors import ZeroDenominator
from .fixedpoint import fixed_partials, fixed_premultiplied_areas, fixed_setup
from .interp import interpolate_depth, interpolate_linear


class Mode(str, enum.Enum):
    NAIVE = "naive"
    CORRECT = "correct"


class Arith(str, enum.Enum):
    FLOAT = "float"
    FIXED = "fixed"


class Framebuffer:
    def __init__(self, width, height, background=(0.0, 0.0, 0.0)):
        if width < 1 or height < 1:
            raise ValueError(f"framebuffer size must be positive, got {width}x{height}")
        self.width = width
        self.height = height
        self.color = np.empty((height, width, 3))
        self.color[:] = background
        self.depth = np.full((height, width), np.inf)

    def copy(self):
        fb = Framebuffer(self.width, self.height)
        fb.color[:] = self.color
        fb.depth[:] = self.depth
        return fb


@dataclass(frozen=True)
class OpCounter:
    additions: int = 0
    multiplications: int = 0
    reciprocals: int = 0


@dataclass(frozen=True)
class Fragment:
    x: int
    y: int
    attrs: object
    bary: Barycentrics
    depth: float
    differentials: Differentials


@dataclass
class RasterStats:
    covered: int = 0
    shaded: int = 0
    depth_rejected: int = 0
    row_starts: int = 0
    delta_ops: Counter = field(default_factory=Counter)

    def merge(self, other):
        self.covered += other.covered
        self.shaded += other.shaded
        self.depth_rejected += other.depth_rejected
        self.row_starts += other.row_starts
        self.delta_ops.update(other.delta_ops)
        return self


class _Tally:
    """Number wrapper that counts the arithmetic applied to it."""

    __slots__ = ("value", "ops")

    def __init__(self, value, ops):
        self.value = value
        self.ops = ops

    @staticmethod
    def _raw(other):
        return other.value if isinstance(other, _Tally) else other

    def __add__(self, other):
        self.ops[0] += 1
        return _Tally(self.value + self._raw(other), self.ops)

    __radd__ = __add__

    def __sub__(self, other):
        self.ops[0] += 1
        return _Tally(self.value - self._raw(other), self.ops)

    def __rsub__(self, other):
        self.ops[0] += 1
        return _Tally(self._raw(other) - self.value, self.ops)

    def __mul__(self, other):
        self.ops[1] += 1
        return _Tally(self.value * self._raw(other), self.ops)

    __rmul__ = __mul__

    def __rtruediv__(self, other):
        if other != 1:
            raise TypeError("only reciprocals are supported")
        self.ops[2] += 1
        return _Tally(1.0 / self.value, self.ops)


def _advance(acc, delta):
    return (acc[0] + delta[0], acc[1] + delta[1], acc[2] + delta[2])


def _retreat(acc, delta):
    return (acc[0] - delta[0], acc[1] - delta[1], acc[2] - delta[2])


def _weights(acc):
    inv = 1.0 / (acc[0] + acc[1] + acc[2])
    return (acc[0] * inv, acc[1] * inv, acc[2] * inv)


def _wrap(values, ops):
    return tuple(_Tally(v, ops) for v in values)


def _unwrap(values):
    return tuple(v.value for v in values)


def _row_start_areas(setup, fs, i, j):
    if fs is not None:
        return fixed_premultiplied_areas(fs, i, j)
    return tuple(premultiplied_areas_at(setup, i + 0.5, j + 0.5))


def _pixel_span(lo, hi, limit):
    """Pixel indices whose centres lie in ``[lo, hi]``, clipped to ``[0, limit)``."""
    return max(0, math.ceil(lo - 0.5)), min(limit - 1, math.floor(hi - 0.5))


def color_shader(frag):
    a = frag.attrs
    return a.r, a.g, a.b


def rasterize(setup, mode, arith, shader, fb, *, spacing=1.0, rows=None,
              instrument=False, block_terms=True, stats=None):
    """Scan convert one triangle into ``fb``.

    ``rows`` restricts work to a half-open band ``(start, stop)`` of
    framebuffer rows.  Returns the (possibly shared) ``RasterStats``.
    """
    mode = Mode(mode)
    arith = Arith(arith)
    if stats is None:
        stats = RasterStats()
    x0, y0, x1, y1 = setup.bounds()
    i0, i1 = _pixel_span(x0, x1, fb.width)
    j0, j1 = _pixel_span(y0, y1, fb.height)
    if rows is not None:
        j0, j1 = max(j0, rows[0]), min(j1, rows[1] - 1)
    if i0 > i1 or j0 > j1:
        return stats

    fs = fixed_setup(setup, block_terms=block_terms) if arith is Arith.FIXED else None
    delta = fs.x_step if fs is not None else setup.x_step
    dy = fs.y_step if fs is not None else setup.y_step
    attrs = setup.attributes
    w = setup.w
    us = [a.u for a in attrs]
    vs = [a.v for a in attrs]

    for j in range(j0, j1 + 1):
        y = j + 0.5
        acc = _row_start_areas(setup, fs, i0, j)
        stats.row_starts += 1
        if fs is not None:
            # affine in x: checking the far end bounds the whole row
            fixed_premultiplied_areas(fs, i1, j)
        for i in range(i0, i1 + 1):
            x = i + 0.5
            first = i == i0
            ops = None
            if not first:
                if instrument:
                    ops = [0, 0, 0]
                    acc = _advance(_wrap(acc, ops), _wrap(delta, ops))
                else:
                    acc = _advance(acc, delta)
            plain = areas_at(setup, x, y)
            if not accepts(setup, plain):
                if ops is not None:
                    acc = _unwrap(acc)
                continue
            stats.covered += 1
            try:
                bary = _weights(acc)
            except ZeroDivisionError:
                raise ZeroDenominator(f"premultiplied area sum is zero at pixel ({i}, {j})") from None
            if ops is not None:
                acc = _unwrap(acc)
                bary = _unwrap(bary)
                stats.delta_ops[OpCounter(*ops)] += 1
            bary = Barycentrics(*bary)

            depth = interpolate_depth(bary, w)
            if not depth < fb.depth[j, i]:
                stats.depth_rejected += 1
                continue

            if mode is Mode.CORRECT:
                interp = interpolate_linear(bary, attrs)
                if fs is not None:
                    partials = fixed_partials(fs, acc, attrs, interp)
                else:
                    den = acc[0] + acc[1] + acc[2]
                    du = weighted_partials(delta, dy, den, us, interp.u)
                    dv = weighted_partials(delta, dy, den, vs, interp.v)
                    partials = Differentials(du[0], du[1], dv[0], dv[1])
                used = bary
            else:
                used = screen_barycentrics(plain)
                interp = interpolate_linear(used, attrs)
                partials = screen_partials(setup, interp)

            frag = Fragment(i, j, interp, used, depth, total_differentials(partials, spacing))
            color = shader(frag)
            stats.shaded += 1
            fb.depth[j, i] = depth
            fb.color[j, i] = [min(max(c, 0.0), 1.0) for c in color]
    return stats


def render_triangles(triangles, width, height, mode=Mode.CORRECT, arith=Arith.FLOAT,
                     shader=color_shader, *, spacing=1.0, workers=1, instrument=False,
                     block_terms=True, background=(0.0, 0.0, 0.0)):
    """Render vertex triples in order.  Returns ``(framebuffer, stats)``.

    With ``workers > 1`` the framebuffer is split into horizontal bands
    rendered concurrently; each row is anchored independently, so the
    result is bit-identical to the sequential one.
    """
    setups = [t if not isinstance(t, (tuple, list)) else triangle_setup(*t) for t in triangles]
    fb = Framebuffer(width, height, background)

    def band(rows):
        stats = RasterStats()
        for s in setups:
            rasterize(s, mode, arith, shader, fb, spacing=spacing, rows=rows,
                      instrument=instrument, block_terms=block_terms, stats=stats)
        return stats

    if workers <= 1:
        return fb, band(None)
    step = -(-height // workers)
    bands = [(r, min(r + step, height)) for r in range(0, height, step)]
    total = RasterStats()
    with ThreadPoolExecutor(max_workers=workers) as pool:
        for stats in pool.map(band, bands):
            total.merge(stats)
    return fb, total


def incremental_equivalence_check(setup, region, arith=Arith.FLOAT, walk="x", block_terms=True):
    """Largest ``|stepped - direct|`` premultiplied area over ``region``.

    ``region`` is ``(i0, j0, i1, j1)`` in pixels, half-open.  ``walk="x"``
    anchors each row at its left end and adds the alpha terms per step;
    ``walk="y"`` anchors each column at its bottom row and subtracts the
    beta terms per step in -y.
    """
    arith = Arith(arith)
    fs = fixed_setup(setup, block_terms=block_terms) if arith is Arith.FIXED else None
    i0, j0, i1, j1 = region

    def direct(i, j):
        return _row_start_areas(setup, fs, i, j)

    if walk == "x":
        step = fs.x_step if fs is not None else setup.x_step
        lines = [[(i, j) for i in range(i0, i1)] for j in range(j0, j1)]
        move = _advance
    elif walk == "y":
        step = fs.y_step if fs is not None else setup.y_step
        lines = [[(i, j) for j in range(j1 - 1, j0 - 1, -1)] for i in range(i0, i1)]
        move = _retreat
    else:
        raise ValueError(f"walk must be 'x' or 'y', got {walk!r}")

    worst = 0
    for line in lines:
        acc = direct(*line[0])
        for pixel in line[1:]:
            acc = move(acc, step)
            ref = direct(*pixel)
            worst = max(worst, *(abs(a - b) for a, b in zip(acc, ref)))
    return worst


def count_inner_loop_ops(setup, pixel, arith=Arith.FLOAT, block_terms=True):
    """Operations spent producing the corrected barycentrics of ``pixel``
    from the areas of its left neighbour (the delta path)."""
    arith = Arith(arith)
    fs = fixed_setup(setup, block_terms=block_terms) if arith is Arith.FIXED else None
    i, j = pixel
    prev = _row_start_areas(setup, fs, i - 1, j)
    delta = fs.x_step if fs is not None else setup.x_step
    ops = [0, 0, 0]
    _weights(_advance(_wrap(prev, ops), _wrap(delta, ops)))
    return OpCounter(*ops)


def count_row_start_ops(setup, pixel):
    """Same count for a pixel whose areas are evaluated directly."""
    ops = [0, 0, 0]
    x = _Tally(pixel[0] + 0.5, ops)
    y = _Tally(pixel[1] + 0.5, ops)
    _weights(tuple(premultiplied_areas_at(setup, x, y)))
    return OpCounter(*ops)
