"""Command line: ``render``, ``compare`` and ``selftest``.

Exit codes: 0 success, 1 runtime failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import os
import sys

import numpy as np

from . import selftest
from .barycentric import areas_at, screen_barycentrics
from .core import triangle_setup
from .errors import RasterError
from .interp import rational_reference
from .ppm import compare, read_ppm, read_ppm_raw, write_ppm
from .raster import Arith, Framebuffer, Mode, RasterStats, color_shader, rasterize
from .scene import parse_scene
from .texture import TextureShader, build_pyramid


def _parser():
    p = argparse.ArgumentParser(prog="baryraster", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    r = sub.add_parser("render", help="render a scene file to PPM")
    r.add_argument("--scene", required=True)
    r.add_argument("--mode", choices=[m.value for m in Mode], default="correct")
    r.add_argument("--arith", choices=[a.value for a in Arith], default="float")
    r.add_argument("--spacing", type=float, help="pixel spacing S (overrides the scene)")
    r.add_argument("--texture", help="PPM texture (overrides the scene)")
    r.add_argument("--out", default="out.ppm")
    r.add_argument("--report", action="store_true",
                   help="report the max deviation from the reciprocal-form interpolant")
    r.add_argument("--no-block-terms", action="store_true",
                   help="fixed arithmetic: skip block normalization of the nine setup terms")

    c = sub.add_parser("compare", help="difference metrics of two PPM images")
    c.add_argument("a")
    c.add_argument("b")

    s = sub.add_parser("selftest", help="run randomized identity and gradient checks")
    s.add_argument("-n", type=int, default=10_000, help="instances per check")
    return p


def _load_texture(path):
    with open(path, "rb") as f:
        return build_pyramid(read_ppm(f.read()))


class _DeviationProbe:
    """Wraps a shader and records the largest attribute deviation from the
    reciprocal-form rational interpolant."""

    def __init__(self, inner):
        self.inner = inner
        self.setup = None
        self.worst = 0.0

    def __call__(self, frag):
        s = self.setup
        ref = rational_reference(screen_barycentrics(areas_at(s, frag.x + 0.5, frag.y + 0.5)), s.w, s.attributes)
        self.worst = max(self.worst, *(abs(a - b) for a, b in zip(frag.attrs, ref)))
        return self.inner(frag)


def _render(args):
    with open(args.scene) as f:
        scene = parse_scene(f.read())
    texture = args.texture
    if texture is None and scene.texture is not None:
        texture = os.path.join(os.path.dirname(os.path.abspath(args.scene)), scene.texture)
    shader = TextureShader(_load_texture(texture)) if texture else color_shader
    spacing = args.spacing if args.spacing is not None else scene.spacing
    if not spacing > 0:
        raise RasterError(f"spacing must be positive, got {spacing}")

    probe = _DeviationProbe(shader) if args.report else None
    fb = Framebuffer(scene.width, scene.height)
    stats = RasterStats()
    for tri in scene.triangles:
        setup = triangle_setup(*tri)
        if probe is not None:
            probe.setup = setup
        rasterize(setup, args.mode, args.arith, probe or shader, fb, spacing=spacing,
                  instrument=True, block_terms=not args.no_block_terms, stats=stats)
    with open(args.out, "wb") as f:
        f.write(write_ppm(fb))

    print(f"wrote={args.out} width={fb.width} height={fb.height} mode={args.mode} arith={args.arith}")
    print(f"covered={stats.covered} shaded={stats.shaded} depth_rejected={stats.depth_rejected} "
          f"row_starts={stats.row_starts}")
    for ops, n in sorted(stats.delta_ops.items(), key=lambda kv: -kv[1]):
        print(f"delta_ops additions={ops.additions} multiplications={ops.multiplications} "
              f"reciprocals={ops.reciprocals} pixels={n}")
    if probe is not None:
        print(f"max_deviation={probe.worst:.6e}")
    return 0


def _as_8bit(path):
    with open(path, "rb") as f:
        values, maxval = read_ppm_raw(f.read())
    if maxval == 255:
        return values
    return np.rint(values * (255.0 / maxval)).astype(np.int64)


def _compare(args):
    m = compare(_as_8bit(args.a), _as_8bit(args.b))
    print(f"max={m['max']}")
    print(f"mean={m['mean']:.6f}")
    print(f"count={m['count']}")
    return 0


def _selftest(args):
    ok = True
    for name, passed, detail in selftest.run(args.n):
        ok &= passed
        print(f"{'PASS' if passed else 'FAIL'} {name}: {detail}")
    return 0 if ok else 1


def main(argv=None):
    args = _parser().parse_args(argv)
    handler = {"render": _render, "compare": _compare, "selftest": _selftest}[args.command]
    try:
        return handler(args)
    except (RasterError, OSError) as e:
        print(f"baryraster: error: {e}", file=sys.stderr)
        return 1
