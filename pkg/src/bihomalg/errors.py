"""Exception hierarchy for the whole package."""


class BihomalgError(Exception):
    """Base class for every error raised by this package."""


class FieldMismatchError(BihomalgError):
    """Two scalars (or matrices) over different base fields were combined."""


class DivisionByZeroError(BihomalgError, ZeroDivisionError):
    """Exact division by the zero scalar."""


class DimensionMismatchError(BihomalgError):
    """Matrices or subspaces from different ambient spaces were combined."""


class NoSuchRootError(BihomalgError):
    """The field has no primitive root of unity of the requested order."""


class NotInAlgebraError(BihomalgError):
    """A matrix lies outside the carrier span of the graded algebra."""


class NotInSupportError(BihomalgError):
    """A degree is not in the support of the grading."""


class AsymmetricSupportError(BihomalgError):
    """The support is not closed under negation; connection search is refused."""


class MissingComponentError(BihomalgError):
    """A degree that must carry a component (by symmetry) has none."""


class RelationViolationError(BihomalgError):
    """A constructor's internal consistency guard failed."""


class TheoremViolationError(BihomalgError):
    """A verified structural guarantee failed; the message carries a witness."""


class HypothesisUnmetError(BihomalgError):
    """A check was invoked on inputs that do not satisfy its hypotheses."""


class TooLargeError(BihomalgError):
    """Exhaustive enumeration was refused because the search space is too big."""


class SchemaError(BihomalgError):
    """An input document violates the schema; carries the first error location."""

    def __init__(self, location: str, message: str):
        super().__init__(f"{location}: {message}")
        self.location = location
        self.message = message
