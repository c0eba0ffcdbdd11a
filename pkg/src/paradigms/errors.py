"""Exception types shared across the library.

Everything raised for a bad domain input derives from ParadigmError, so the
CLI can map domain failures to a single exit code.
"""


class ParadigmError(ValueError):
    """Base class for domain errors (bad inputs, undefined operations)."""


class UniverseMismatchError(ParadigmError):
    """Two values built over different universes were combined."""


class NotProductFormError(ParadigmError):
    """A Boolean-algebra operation was applied to a non-paradigm matrix."""


class UndefinedDensityError(ParadigmError):
    """A density would require dividing by a zero trace or probability."""


class SizeLimitError(ParadigmError):
    """A size guard was violated (universe or enumeration too large)."""


class IncompletePredicatesError(ParadigmError):
    """The given predicates cannot distinguish all universe elements."""


class ExclusionError(ParadigmError):
    """More exclusive particles than single-particle states."""
