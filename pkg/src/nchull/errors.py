"""Exception hierarchy shared across the kernel."""


class NCHullError(Exception):
    """Base class for all kernel errors."""


class FieldMismatchError(NCHullError):
    """Arithmetic attempted between elements of different fields."""


class DimensionMismatchError(NCHullError):
    """Matrix or vector shapes are inconsistent."""


class InconsistentSystemError(NCHullError):
    """A relation system collapses to 1 = 0 (unit lies in the ideal)."""


class AlphabetMismatchError(NCHullError):
    """Polynomials over different alphabets were combined."""


class NonMinimalPresentationError(NCHullError):
    """Generating set has superfluous generators (linear relation parts)."""


class NonAssociativeError(NCHullError):
    """Structure constants fail associativity or unitality."""


class NonSimpleModuleError(NCHullError):
    """Module representation has a proper nonzero invariant subspace,
    or simplicity could not be certified exactly."""


class DefectUnsolvableError(NCHullError):
    """The linear system for a defect element has no solution.

    Carries the offending monomial so callers can report context.
    """

    def __init__(self, word, message=None):
        self.word = word
        super().__init__(message or f"no defect element exists for monomial {word}")


class EngineInvariantError(NCHullError):
    """An internal invariant of the iteration was violated."""


class CompletionDiagramError(NCHullError):
    """The endomorphism diagram of a completion failed to commute."""


class UnmaterializedDegreeError(NCHullError):
    """A formal vector was queried beyond its materialized degrees."""


class ParseError(NCHullError):
    """Input text is outside the grammar.

    ``position`` is a (line, column) pair, both 1-based.
    """

    def __init__(self, message, position):
        self.position = position
        line, col = position
        super().__init__(f"{message} (line {line}, column {col})")
