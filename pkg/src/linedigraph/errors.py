"""Exception hierarchy shared by every module of the package."""


class DigraphError(Exception):
    """Base class for all domain errors raised by ``linedigraph``."""


class InvalidDigraph(DigraphError, ValueError):
    pass


class VertexOutOfRange(DigraphError, IndexError):
    pass


class NonBinaryMatrix(DigraphError, ValueError):
    pass


class NotEulerian(DigraphError):
    pass


class EmptyArcSet(DigraphError):
    pass


class SizeLimitExceeded(DigraphError):
    pass


class LoopsPresent(DigraphError):
    pass


class TooLarge(DigraphError):
    pass


class NotLineDigraph(DigraphError):
    pass


class InvalidPartition(DigraphError, ValueError):
    pass


class NotRegular(DigraphError):
    pass


class NotSpanning(DigraphError):
    pass


class NotSubdigraph(DigraphError):
    pass


class NotSquare(DigraphError, ValueError):
    pass


class ExponentNegative(DigraphError):
    pass


class PenroseViolation(DigraphError):
    """One of the four pseudo-inverse identities failed (indicates a bug)."""


class BadDimension(DigraphError, ValueError):
    pass


class NotUnitary(DigraphError):
    pass


class DimensionMismatch(DigraphError, ValueError):
    pass


class CoinHasZeros(DigraphError):
    pass


class BadGenerators(DigraphError, ValueError):
    pass


class BadOrder(DigraphError, ValueError):
    pass


class ParseError(DigraphError, ValueError):
    pass
