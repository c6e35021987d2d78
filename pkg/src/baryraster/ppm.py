"""PPM (P3/P6) reading and P6 writing."""

from __future__ import annotations

import numpy as np

from .errors import DimensionMismatch, MalformedHeader, TruncatedData

_WHITESPACE = b" \t\r\n\v\f"


def _header_tokens(data, count, pos):
    """Read ``count`` whitespace-separated tokens, skipping ``#`` comments.

    Returns the tokens and the offset just past the last one.
    """
    tokens = []
    n = len(data)
    while len(tokens) < count:
        while pos < n and data[pos] in _WHITESPACE:
            pos += 1
        if pos < n and data[pos] == ord("#"):
            while pos < n and data[pos] not in b"\r\n":
                pos += 1
            continue
        if pos >= n:
            raise MalformedHeader("unexpected end of header")
        start = pos
        while pos < n and data[pos] not in _WHITESPACE and data[pos] != ord("#"):
            pos += 1
        tokens.append(data[start:pos])
    return tokens, pos


def _int_token(tok, what):
    try:
        value = int(tok)
    except ValueError:
        raise MalformedHeader(f"bad {what}: {tok!r}") from None
    return value


def read_ppm_raw(data):
    """Parse a PPM file into ``(uint array (h, w, 3), maxval)``."""
    data = bytes(data)
    if len(data) < 2 or data[:2] not in (b"P3", b"P6"):
        raise MalformedHeader("not a P3/P6 PPM file")
    magic = data[:2]
    (w, h, maxval), pos = _header_tokens(data, 3, 2)
    w, h, maxval = _int_token(w, "width"), _int_token(h, "height"), _int_token(maxval, "maxval")
    if w < 1 or h < 1:
        raise MalformedHeader(f"bad dimensions {w}x{h}")
    if not 0 < maxval <= 65535:
        raise MalformedHeader(f"maxval {maxval} outside 1..65535")
    count = w * h * 3

    if magic == b"P6":
        if pos >= len(data) or data[pos] not in _WHITESPACE:
            raise MalformedHeader("missing whitespace after maxval")
        pos += 1
        dtype = np.dtype(">u2") if maxval > 255 else np.dtype("u1")
        need = count * dtype.itemsize
        payload = data[pos:pos + need]
        if len(payload) < need:
            raise TruncatedData(f"expected {need} bytes of pixel data, got {len(payload)}")
        values = np.frombuffer(payload, dtype=dtype).astype(np.int64)
    else:
        lines = [ln.split(b"#", 1)[0] for ln in data[pos:].splitlines()]
        parts = b" ".join(lines).split()
        if len(parts) < count:
            raise TruncatedData(f"expected {count} samples, got {len(parts)}")
        try:
            values = np.array([int(p) for p in parts[:count]], dtype=np.int64)
        except ValueError:
            raise MalformedHeader("non-integer sample in P3 data") from None
    if values.size and (values.min() < 0 or values.max() > maxval):
        raise MalformedHeader(f"sample outside 0..{maxval}")
    return values.reshape(h, w, 3), maxval


def read_ppm(data):
    """Texel grid of shape ``(h, w, 3)`` with channels scaled to [0, 1]."""
    values, maxval = read_ppm_raw(data)
    return values / float(maxval)


def quantize(color):
    """Float channels in [0, 1] to 8-bit, ``round(c * 255)`` with clamping."""
    c = np.asarray(color, dtype=np.float64)
    return np.clip(np.rint(c * 255.0), 0, 255).astype(np.uint8)


def write_ppm(image):
    """Encode a framebuffer or ``(h, w, 3)`` float array as binary P6."""
    color = getattr(image, "color", image)
    q = quantize(color)
    h, w = q.shape[:2]
    return b"P6\n%d %d\n255\n" % (w, h) + q.tobytes()


def compare(a, b):
    """Difference metrics of two 8-bit images (arrays of equal shape)."""
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    if a.shape != b.shape:
        raise DimensionMismatch(f"image shapes differ: {a.shape} vs {b.shape}")
    diff = np.abs(a - b)
    return {
        "max": int(diff.max()) if diff.size else 0,
        "mean": float(diff.mean()) if diff.size else 0.0,
        "count": int(np.any(diff != 0, axis=-1).sum()),
    }
