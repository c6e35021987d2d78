"""Box-filtered MIP pyramid and nearest-level bilinear sampling."""

from __future__ import annotations

import math

import numpy as np

from .differential import max_mip_level, mip_level
from .errors import EmptyImage


def _box_weights(src, dst):
    """Row-stochastic ``dst x src`` matrix of area-weighted box coverage.

    Output texel ``k`` covers the source interval ``[k*r, (k+1)*r)`` with
    ``r = src/dst``; each weight is the overlap length divided by ``r``.
    """
    r = src / dst
    m = np.zeros((dst, src))
    for k in range(dst):
        lo, hi = k * r, (k + 1) * r
        for i in range(math.floor(lo), min(math.ceil(hi), src)):
            overlap = min(hi, i + 1) - max(lo, i)
            if overlap > 0:
                m[k, i] = overlap / r
    return m


class MipPyramid:
    """Texture levels from full resolution down to 1x1.

    ``levels[k]`` is a float array of shape ``(height, width, 3)``.
    """

    def __init__(self, levels):
        self.levels = levels

    def __len__(self):
        return len(self.levels)

    @property
    def width(self):
        return self.levels[0].shape[1]

    @property
    def height(self):
        return self.levels[0].shape[0]

    @property
    def max_level(self):
        return len(self.levels) - 1


def build_pyramid(image):
    img = np.asarray(image, dtype=np.float64)
    if img.ndim == 2:
        img = img[:, :, None].repeat(3, axis=2)
    if img.ndim != 3 or img.shape[0] < 1 or img.shape[1] < 1:
        raise EmptyImage(f"cannot build a pyramid from an image of shape {img.shape}")
    levels = [img]
    for _ in range(max_mip_level(img.shape[1], img.shape[0])):
        h, w = levels[-1].shape[:2]
        nh, nw = max(1, h // 2), max(1, w // 2)
        rows = _box_weights(h, nh)
        cols = _box_weights(w, nw)
        levels.append(np.einsum("ai,ijc,bj->abc", rows, levels[-1], cols))
    return MipPyramid(levels)


def sample(pyramid, u, v, level=0.0):
    """Bilinear lookup on level ``floor(level)``, clamp-to-edge addressing."""
    k = min(max(int(math.floor(level)), 0), pyramid.max_level)
    img = pyramid.levels[k]
    h, w = img.shape[:2]
    tx = min(max(u, 0.0), 1.0) * w - 0.5
    ty = min(max(v, 0.0), 1.0) * h - 0.5
    x0 = math.floor(tx)
    y0 = math.floor(ty)
    fx = tx - x0
    fy = ty - y0
    xa, xb = min(max(x0, 0), w - 1), min(max(x0 + 1, 0), w - 1)
    ya, yb = min(max(y0, 0), h - 1), min(max(y0 + 1, 0), h - 1)
    top = img[ya, xa] * (1 - fx) + img[ya, xb] * fx
    bottom = img[yb, xa] * (1 - fx) + img[yb, xb] * fx
    c = top * (1 - fy) + bottom * fy
    return float(c[0]), float(c[1]), float(c[2])


class TextureShader:
    """Fragment shader: MIP-mapped texture modulated by the vertex colour."""

    def __init__(self, pyramid):
        self.pyramid = pyramid

    def __call__(self, frag):
        p = self.pyramid
        level = mip_level(frag.differentials, p.width, p.height)
        t = sample(p, frag.attrs.u, frag.attrs.v, level)
        a = frag.attrs
        return t[0] * a.r, t[1] * a.g, t[2] * a.b
