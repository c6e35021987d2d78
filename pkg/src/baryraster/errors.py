"""Exception hierarchy shared by all modules."""


class RasterError(Exception):
    """Base class for every error raised by this package."""


class DegenerateTriangle(RasterError):
    pass


class NonPositiveW(RasterError):
    pass


class ZeroDenominator(RasterError, ZeroDivisionError):
    pass


class FixedPointOverflow(RasterError, OverflowError):
    """An integer accumulator would exceed its declared capacity."""


class AllZero(RasterError, ValueError):
    pass


class EmptyImage(RasterError, ValueError):
    pass


class SceneError(RasterError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class SceneSyntaxError(SceneError):
    pass


class SemanticError(SceneError):
    pass


class PPMError(RasterError):
    pass


class MalformedHeader(PPMError):
    pass


class TruncatedData(PPMError):
    pass


class DimensionMismatch(RasterError, ValueError):
    pass
