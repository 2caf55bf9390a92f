"""Exception hierarchy shared by all qcohom modules."""


class QcohomError(Exception):
    """Base class for every error raised by this package."""


class DivisionByZero(QcohomError, ZeroDivisionError):
    pass


class ZeroPolynomial(QcohomError, ValueError):
    pass


class RingMismatch(QcohomError, ValueError):
    pass


class NotSquare(QcohomError, ValueError):
    pass


class EmptyGeneratorList(QcohomError, ValueError):
    pass


class ZeroDivisorPolynomial(QcohomError, ValueError):
    """Raised when an ideal quotient by the zero polynomial is requested."""


class NotZeroDimensional(QcohomError):
    pass


class PointNotOnVariety(QcohomError, ValueError):
    pass


class InconsistentInput(QcohomError, ValueError):
    pass


class UnsupportedN(QcohomError, ValueError):
    pass


class IndexOutOfRange(QcohomError, IndexError):
    pass


class BadCodim(QcohomError, ValueError):
    pass


class AmbientMismatch(QcohomError, ValueError):
    pass


class RedrawLimitExceeded(QcohomError, RuntimeError):
    """Too many degenerate random draws; points at a bug, not at the math."""


class ConfigError(QcohomError, ValueError):
    pass
