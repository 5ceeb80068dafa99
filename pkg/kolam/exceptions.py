"""
Error hierarchy for the kolam app.

Library code raises these; ``kolam.cli`` turns them into exit codes.
"""


class KolamError(Exception):
    """Base class for every kolam failure."""


class SpecError(KolamError, ValueError):
    """An input value was rejected during validation."""


class NotCoprime(SpecError):
    def __init__(self, m, n, gcd):
        self.m = m
        self.n = n
        self.gcd = gcd
        super().__init__(
            f"gcd({m}, {n}) = {gcd}: dots and arms must be coprime for a single-stroke kolam"
        )


class ZeroOrNegative(SpecError):
    def __init__(self, name, value):
        self.name = name
        self.value = value
        super().__init__(f"{name} must be a positive integer, got {value!r}")


class ProductTooLarge(SpecError):
    def __init__(self, m, n, limit):
        self.m = m
        self.n = n
        self.limit = limit
        super().__init__(f"m*n = {m * n} exceeds the supported maximum {limit}")


class BulgeOutOfRange(SpecError):
    def __init__(self, bulge):
        self.bulge = bulge
        super().__init__(f"bulge must lie strictly between 0 and 1, got {bulge}")


class RenderConfigError(SpecError):
    """Invalid render configuration (flag, config file or settings)."""


class GeometryError(KolamError):
    pass


class DegenerateChord(GeometryError):
    def __init__(self, index, point):
        self.index = index
        self.point = point
        super().__init__(f"stroke {index} starts and ends at {point}; cannot build a chord")


class RenderError(KolamError):
    pass


class NonFiniteCoordinate(RenderError):
    pass


class EmptyStrokeList(RenderError):
    pass
