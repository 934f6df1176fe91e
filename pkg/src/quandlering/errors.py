"""Exception hierarchy shared by all modules."""


class QuandleError(Exception):
    """Base class for every error raised by this package."""


class InvalidParam(QuandleError, ValueError):
    pass


class AxiomViolation(QuandleError, ValueError):
    """A table fails one of the three quandle axioms.

    ``axiom`` is 1 (idempotency), 2 (columns are permutations) or
    3 (right self-distributivity); ``witness`` is the offending tuple.
    """

    def __init__(self, axiom: int, witness: tuple, message: str = ""):
        self.axiom = axiom
        self.witness = witness
        super().__init__(message or f"axiom {axiom} fails at {witness}")


class CocycleViolation(QuandleError, ValueError):
    pass


class NotAutomorphism(QuandleError, ValueError):
    pass


class NotBlockStructured(QuandleError, ValueError):
    pass


class SizeLimit(QuandleError, RuntimeError):
    pass


class DepthLimit(SizeLimit):
    pass


class DimensionMismatch(QuandleError, ValueError):
    pass


class DomainMismatch(QuandleError, TypeError):
    pass


class NotAugmentationZero(QuandleError, ValueError):
    pass


class IndexRange(QuandleError, IndexError):
    pass


class UnknownFamily(QuandleError, KeyError):
    pass


class ZeroElement(QuandleError, ValueError):
    pass


class NotDivisibleBy3(QuandleError, ValueError):
    pass
