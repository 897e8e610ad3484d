"""Exception hierarchy shared by all modules.

Every domain error carries the name of the check or diagram that failed so
the CLI can surface it verbatim.
"""


class CoendError(Exception):
    """Base class for all domain errors."""


class DivisionByZero(CoendError, ZeroDivisionError):
    pass


class FieldMismatch(CoendError):
    pass


class DimensionMismatch(CoendError):
    pass


class NotInvertible(CoendError):
    pass


class ParseError(CoendError):
    def __init__(self, msg, line=None, pos=None):
        self.line, self.pos = line, pos
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", pos {pos})" if pos is not None else ")")
        super().__init__(msg + where)


class ValidationFailure(CoendError):
    """A structure failed its axioms at construction time."""

    def __init__(self, msg, report=None):
        self.report = report
        super().__init__(msg)


class ConventionFailure(ValidationFailure):
    pass


class AmbientMismatch(CoendError):
    pass


class HopfMismatch(CoendError):
    pass


class SourceMismatch(CoendError):
    pass


class NoCoendAction(CoendError):
    pass


class NotNatural(CoendError):
    pass


class StructureDerivationFailure(CoendError):
    pass


class TranscriptionFailure(CoendError):
    pass


class DefiningPropertyFailure(CoendError):
    pass


class NotPivotal(CoendError):
    pass


class NotBalanced(CoendError):
    pass


class InternalInconsistency(CoendError):
    pass


class ConstructionFailure(CoendError):
    pass


class SearchSpaceTooLarge(CoendError):
    def __init__(self, dim, limit):
        self.dim, self.limit = dim, limit
        super().__init__(f"search space dimension {dim} exceeds guard {limit}")
