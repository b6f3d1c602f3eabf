"""Exception hierarchy.

Every error raised on purpose by the library derives from ``TutteForgeError``
so the CLI can map them to exit code 2 in one place.
"""


class TutteForgeError(Exception):
    pass


class InvalidGround(TutteForgeError):
    pass


class EmptyFamily(TutteForgeError):
    pass


class UnknownLabel(TutteForgeError):
    pass


class NotAlmostBasis(TutteForgeError):
    pass


class NotOverBasis(TutteForgeError):
    pass


class NotABasis(TutteForgeError):
    pass


class NotAMatroid(TutteForgeError):
    pass


class PreconditionViolated(TutteForgeError):
    def __init__(self, clause: str):
        super().__init__(clause)
        self.clause = clause


class MatroidAxiomViolation(TutteForgeError):
    """An internal consistency assertion failed; the input is not a matroid."""


class BudgetExceeded(TutteForgeError):
    pass


class NoEdges(TutteForgeError):
    pass


class BadParameters(TutteForgeError):
    pass


class EmptyMatrix(TutteForgeError):
    pass


class NotABijection(TutteForgeError):
    pass


class SameElement(TutteForgeError):
    pass


class GroundMismatch(TutteForgeError):
    pass


class CountOverflow(TutteForgeError, OverflowError):
    pass


class PartialMap(TutteForgeError):
    pass


class UnverifiedLinking(TutteForgeError):
    pass


class ClassificationFailure(TutteForgeError):
    pass


class NegativeCoefficient(TutteForgeError):
    pass


class Disconnected(TutteForgeError):
    pass
