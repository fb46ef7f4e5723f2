"""Exception types shared across the toolkit."""


class OrderTheoryError(Exception):
    """Base class for every error raised by this package."""


class DuplicateElement(OrderTheoryError):
    pass


class UnknownElement(OrderTheoryError):
    pass


class CycleDetected(OrderTheoryError):
    pass


class InvalidPoset(OrderTheoryError):
    """The relation is not a partial order (or an internal law check failed)."""


class NotDirected(OrderTheoryError):
    pass


class NotMonotone(OrderTheoryError):
    pass


class ShapeMismatch(OrderTheoryError):
    pass


class NotARetract(OrderTheoryError):
    pass


class NotABasis(OrderTheoryError):
    pass


class NoInterpolant(OrderTheoryError):
    pass


class NoJoins(OrderTheoryError):
    pass


class NotALattice(OrderTheoryError):
    pass


class NotApproximating(OrderTheoryError):
    pass


class CarrierTooLarge(OrderTheoryError):
    pass


class StageTooLarge(OrderTheoryError):
    pass


class IncompatibleTower(OrderTheoryError):
    pass


class TooLarge(OrderTheoryError):
    """A brute-force enumeration would exceed the desk-scale budget."""


class PreconditionViolated(OrderTheoryError):
    pass


class ClauseViolation(OrderTheoryError):
    """An induction clause failed; .clause names which one."""

    def __init__(self, clause, witness=None):
        self.clause = clause
        self.witness = witness
        msg = f"clause {clause!r} violated"
        if witness is not None:
            msg += f" at {witness!r}"
        super().__init__(msg)


class ParseError(OrderTheoryError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
