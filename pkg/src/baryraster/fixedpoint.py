"""Block-normalized integer evaluation of the corrected barycentrics.

Pipeline for one triangle:

1. The three w values are mapped to 15-bit integers (largest -> 32767).
2. Their pairwise products (30 bits) are block normalized back to 15 bits.
   The shared shift is dropped: it scales numerator and denominator alike.
3. Vertex positions are snapped to a ``2**-sub_bits`` grid relative to an
   integer pixel origin, giving exact integer edge functions.  ``sub_bits``
   is chosen per triangle so its local coordinate range spans about
   ``snap_bits`` bits: small triangles get a finer grid.
4. The nine premultiplied edge coefficients are block normalized together
   (optional).  Before that the alpha/beta columns are scaled by
   ``2**coord_shift``, roughly the coordinate range of the triangle, so
   that ``alpha*x`` and ``gamma`` carry comparable precision; the per-pixel
   sums then use ``gamma << coord_shift``.  The result is the premultiplied
   area times one positive constant common to all three edges.
5. Per pixel the areas are accumulated in checked 48-bit integers; only the
   final reciprocal is floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .barycentric import Barycentrics
from .differential import Differentials, weighted_partials
from .errors import AllZero, DegenerateTriangle, FixedPointOverflow, NonPositiveW, ZeroDenominator

W_BITS = 15
TERM_BITS = 15
ACCUMULATOR_BITS = 48
COORD_BITS = 14
SNAP_BITS = 16
SNAP_BITS_UNNORMALIZED = 14

_ACC_LIMIT = 1 << (ACCUMULATOR_BITS - 1)


@dataclass(frozen=True)
class FixedTerm:
    mantissa: int
    declared_bits: int

    def __post_init__(self):
        if abs(self.mantissa) >= 1 << self.declared_bits:
            raise FixedPointOverflow(f"mantissa {self.mantissa} does not fit in {self.declared_bits} bits")

    def __int__(self):
        return self.mantissa


def quantize_w(w, bits=W_BITS):
    """Map positive w values to integers, the largest to ``2**bits - 1``.

    Values that would round to zero are clamped to 1.
    """
    w = tuple(w)
    for x in w:
        if not x > 0:
            raise NonPositiveW(f"w must be positive, got {x!r}")
    top = max(w)
    full = (1 << bits) - 1
    return tuple(max(1, round(x / top * full)) for x in w)


def shift_round(value, shift):
    """``value * 2**-shift`` rounded to nearest, ties to even."""
    if shift <= 0:
        return value << -shift
    q, r = divmod(abs(value), 1 << shift)
    half = 1 << (shift - 1)
    if r > half or (r == half and q & 1):
        q += 1
    return q if value >= 0 else -q


def block_normalize(values, target_bits):
    """Shift every value by one common exponent so the largest magnitude
    lands in ``[2**(target_bits-1), 2**target_bits)``.

    Returns ``(terms, shift)``; a positive shift is a right shift.
    """
    values = [int(v) for v in values]
    peak = max(abs(v) for v in values)
    if peak == 0:
        raise AllZero("cannot block normalize all-zero values")
    shift = peak.bit_length() - target_bits
    out = [shift_round(v, shift) for v in values]
    if max(abs(v) for v in out) >= 1 << target_bits:
        # rounding carried into the next bit
        shift += 1
        out = [shift_round(v, shift) for v in values]
    return tuple(FixedTerm(v, target_bits) for v in out), shift


def _checked(value):
    if abs(value) >= _ACC_LIMIT:
        raise FixedPointOverflow(f"accumulator value {value} exceeds {ACCUMULATOR_BITS} bits")
    return value


@dataclass(frozen=True)
class FixedSetup:
    w_fixed: tuple
    wprod: tuple
    terms: tuple
    origin: tuple
    sub_bits: int
    coord_shift: int
    block_terms: bool

    def term(self, i, k):
        return self.terms[3 * i + k].mantissa

    @property
    def x_step(self):
        """Accumulator increments for one pixel in +x."""
        return tuple(self.term(i, 0) << self.sub_bits for i in range(3))

    @property
    def y_step(self):
        return tuple(self.term(i, 1) << self.sub_bits for i in range(3))


def _snap(value, origin, sub_bits):
    return round((value - origin) * (1 << sub_bits))


def subpixel_bits(extent, snap_bits):
    return min(max(snap_bits - (math.ceil(extent) + 1).bit_length(), 1), snap_bits)


def fixed_setup(setup, block_terms=True, snap_bits=None):
    """Integer setup of a triangle.

    ``block_terms`` enables the second block normalization over the nine
    premultiplied terms.  Without it the terms are exact products and the
    accumulators grow with triangle size, so a smaller ``snap_bits`` budget
    is the default there.
    """
    if snap_bits is None:
        snap_bits = SNAP_BITS if block_terms else SNAP_BITS_UNNORMALIZED
    q = quantize_w(setup.w)
    wprod, _ = block_normalize((q[1] * q[2], q[2] * q[0], q[0] * q[1]), W_BITS)

    x0, y0, x1, y1 = setup.bounds()
    # origin near the centre keeps |pixel offset| <= half the extent
    ox, oy = math.floor((x0 + x1) / 2), math.floor((y0 + y1) / 2)
    reach = max(ox - x0, x1 - ox, oy - y0, y1 - oy) + 1
    sub_bits = subpixel_bits(reach, snap_bits)
    pts = [(_snap(p.x, ox, sub_bits), _snap(p.y, oy, sub_bits)) for p in setup.vertices]
    edges = []
    for i in range(3):
        (ax, ay), (bx, by) = pts[(i + 1) % 3], pts[(i + 2) % 3]
        edges.append((ay - by, bx - ax, ax * by - bx * ay))
    if sum(e[2] for e in edges) == 0:
        raise DegenerateTriangle("triangle collapses on the subpixel grid")

    if block_terms:
        coord_shift = math.ceil(reach * (1 << sub_bits)).bit_length()
        raw = []
        for m, (a, b, c) in zip(wprod, edges):
            m = m.mantissa
            raw += [(a * m) << coord_shift, (b * m) << coord_shift, c * m]
        terms, _ = block_normalize(raw, TERM_BITS)
    else:
        coord_shift = 0
        raw = [m.mantissa * c for m, e in zip(wprod, edges) for c in e]
        bits = max(abs(v) for v in raw).bit_length()
        terms = tuple(FixedTerm(v, bits) for v in raw)

    return FixedSetup(
        w_fixed=q,
        wprod=wprod,
        terms=terms,
        origin=(ox, oy),
        sub_bits=sub_bits,
        coord_shift=coord_shift,
        block_terms=block_terms,
    )


def _pixel_coords(fs, i, j):
    px = i - fs.origin[0]
    py = j - fs.origin[1]
    if abs(px) >= 1 << COORD_BITS or abs(py) >= 1 << COORD_BITS:
        raise FixedPointOverflow(f"pixel ({i}, {j}) is outside the {COORD_BITS}-bit coordinate range")
    half = fs.sub_bits - 1
    return (2 * px + 1) << half, (2 * py + 1) << half


def fixed_premultiplied_areas(fs, i, j):
    """Integer premultiplied areas at the centre of pixel ``(i, j)``."""
    px, py = _pixel_coords(fs, i, j)
    out = []
    for e in range(3):
        a = _checked(fs.term(e, 0) * px)
        b = _checked(fs.term(e, 1) * py)
        c = _checked(fs.term(e, 2) << fs.coord_shift)
        out.append(_checked(_checked(a + b) + c))
    return tuple(out)


def fixed_corrected_barycentrics(fs, pixel, acc=None):
    if acc is None:
        acc = fixed_premultiplied_areas(fs, *pixel)
    s = _checked(acc[0] + acc[1] + acc[2])
    if s == 0:
        raise ZeroDenominator(f"premultiplied area sum is zero at pixel {pixel}")
    inv = 1.0 / s
    return Barycentrics(acc[0] * inv, acc[1] * inv, acc[2] * inv)


def fixed_partials(fs, acc, attrs, interpolated):
    """Analytic u/v partials from integer accumulators.

    The accumulators share one positive scale, so the ratio needs no
    conversion back to pixel units.
    """
    denom = acc[0] + acc[1] + acc[2]
    us = [a.u for a in attrs]
    vs = [a.v for a in attrs]
    du_dx, du_dy = weighted_partials(fs.x_step, fs.y_step, denom, us, interpolated.u)
    dv_dx, dv_dy = weighted_partials(fs.x_step, fs.y_step, denom, vs, interpolated.v)
    return Differentials(du_dx, du_dy, dv_dx, dv_dy)
