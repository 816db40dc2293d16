"""Exception types shared across the package."""


class NakayamaError(Exception):
    """Base class for all errors raised by this package."""


class InvalidSeries(NakayamaError):
    """A Kupisch series violates one of its defining constraints.

    Carries the index of the offending entry when one can be named.
    """

    def __init__(self, message, index=None):
        super().__init__(message if index is None else f"{message} (at index {index})")
        self.index = index


class Semisimple(NakayamaError):
    """All projectives are simple; such algebras are rejected everywhere."""


class NotInDomain(NakayamaError):
    """An operation was applied outside its mathematical domain."""


class NotApplicable(NakayamaError):
    """An operation does not apply to this quiver shape or input size."""


class SelfinjectiveInput(NakayamaError):
    """Super (co)dominant dimension is undefined for selfinjective algebras."""


class InvalidParams(NakayamaError):
    """Structured parameters (D1, Z, Morita) are out of range."""


class InvalidSpec(NakayamaError):
    """An enumeration or verification request is malformed."""


class InternalError(NakayamaError):
    """An internal consistency assertion failed; indicates a bug."""
