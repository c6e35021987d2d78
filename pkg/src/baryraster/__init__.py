"""Software triangle rasterizer with perspective-correct barycentric
interpolation, analytic texture derivatives and a block-normalized
integer path."""

from .barycentric import (
    Areas,
    Barycentrics,
    Coverage,
    areas_at,
    corrected_barycentrics,
    coverage,
    premultiplied_areas_at,
    screen_barycentrics,
)
from .core import EdgeCoefficients, TriangleSetup, Vertex, edge_coefficients, triangle_setup
from .differential import Differentials, mip_level, partials_at, total_differentials
from .errors import (
    AllZero,
    DegenerateTriangle,
    DimensionMismatch,
    EmptyImage,
    FixedPointOverflow,
    MalformedHeader,
    NonPositiveW,
    RasterError,
    SceneSyntaxError,
    SemanticError,
    TruncatedData,
    ZeroDenominator,
)
from .interp import AttributeVector, interpolate_depth, interpolate_linear, interpolate_rational
from .raster import Arith, Framebuffer, Mode, OpCounter, rasterize, render_triangles

__version__ = "0.1.0"
