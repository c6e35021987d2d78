"""Line-oriented scene files.

::

    # comment
    framebuffer 128 128
    spacing 1
    texture checker.ppm
    tri
    v  x y w  u v  r g b
    v  ...
    v  ...

``framebuffer`` is required; ``spacing`` and ``texture`` are optional and
may appear once.  Each ``tri`` is followed by exactly three ``v`` lines.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .core import Vertex
from .errors import SceneSyntaxError, SemanticError


@dataclass(frozen=True)
class Scene:
    width: int
    height: int
    spacing: float = 1.0
    texture: str | None = None
    triangles: tuple = field(default_factory=tuple)


def _floats(parts, lineno):
    try:
        values = [float(p) for p in parts]
    except ValueError:
        raise SceneSyntaxError(f"expected numbers, got {' '.join(parts)!r}", lineno) from None
    if not all(math.isfinite(v) for v in values):
        raise SemanticError("non-finite value", lineno)
    return values


def parse_scene(text):
    size = None
    spacing = None
    texture = None
    triangles = []
    pending = None
    pending_line = None

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        word, *args = line.split()
        if pending is not None and word != "v":
            raise SceneSyntaxError(f"triangle started on line {pending_line} has {len(pending)} vertices", lineno)

        if word == "framebuffer":
            if size is not None:
                raise SceneSyntaxError("duplicate framebuffer directive", lineno)
            if len(args) != 2:
                raise SceneSyntaxError("framebuffer takes W H", lineno)
            try:
                w, h = int(args[0]), int(args[1])
            except ValueError:
                raise SceneSyntaxError("framebuffer dimensions must be integers", lineno) from None
            if w < 1 or h < 1:
                raise SemanticError(f"framebuffer dimensions must be >= 1, got {w}x{h}", lineno)
            size = (w, h)
        elif word == "spacing":
            if spacing is not None:
                raise SceneSyntaxError("duplicate spacing directive", lineno)
            if len(args) != 1:
                raise SceneSyntaxError("spacing takes one value", lineno)
            (spacing,) = _floats(args, lineno)
            if not spacing > 0:
                raise SemanticError(f"spacing must be positive, got {spacing}", lineno)
        elif word == "texture":
            if texture is not None:
                raise SceneSyntaxError("duplicate texture directive", lineno)
            if len(args) != 1:
                raise SceneSyntaxError("texture takes one path", lineno)
            texture = args[0]
        elif word == "tri":
            if args:
                raise SceneSyntaxError("tri takes no arguments", lineno)
            pending, pending_line = [], lineno
        elif word == "v":
            if pending is None:
                raise SceneSyntaxError("vertex outside a tri block", lineno)
            if len(args) != 8:
                raise SceneSyntaxError("v takes x y w u v r g b", lineno)
            x, y, w, u, v, r, g, b = _floats(args, lineno)
            if not w > 0:
                raise SemanticError(f"vertex w must be positive, got {w}", lineno)
            for name, val in zip("uvrgb", (u, v, r, g, b)):
                if not 0.0 <= val <= 1.0:
                    raise SemanticError(f"{name} must lie in [0, 1], got {val}", lineno)
            pending.append(Vertex(x, y, w, u, v, r, g, b))
            if len(pending) == 3:
                triangles.append(tuple(pending))
                pending = None
        else:
            raise SceneSyntaxError(f"unknown directive {word!r}", lineno)

    if pending is not None:
        raise SceneSyntaxError(f"triangle started on line {pending_line} has {len(pending)} vertices")
    if size is None:
        raise SceneSyntaxError("missing framebuffer directive")
    return Scene(size[0], size[1], 1.0 if spacing is None else spacing, texture, tuple(triangles))


def format_scene(scene):
    out = [f"framebuffer {scene.width} {scene.height}", f"spacing {scene.spacing!r}"]
    if scene.texture is not None:
        out.append(f"texture {scene.texture}")
    for tri in scene.triangles:
        out.append("tri")
        for p in tri:
            out.append("v " + " ".join(repr(float(c)) for c in (p.x, p.y, p.w, p.u, p.v, p.r, p.g, p.b)))
    return "\n".join(out) + "\n"
