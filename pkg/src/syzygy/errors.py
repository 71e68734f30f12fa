"""Exception hierarchy shared by every layer of the engine."""


class SyzygyError(Exception):
    """Base class for all engine errors."""


class HomogeneityError(SyzygyError):
    pass


class DegenerateRingError(SyzygyError):
    pass


class RingMismatchError(SyzygyError):
    pass


class ShapeError(SyzygyError):
    pass


class NotAComplexError(SyzygyError):
    pass


class UnsupportedGradingError(SyzygyError):
    pass


class ZeroModuleError(SyzygyError):
    pass


class TrivialFactorError(SyzygyError):
    pass


class PreconditionError(SyzygyError):
    """Raised when a theorem-level check is called outside its hypotheses.

    ``witness`` carries whatever object demonstrates the failure (an element,
    a Betti vector, ...), so callers can report it.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class ParseError(SyzygyError):
    pass
