"""Exception taxonomy shared by all modules.

Every error raised by the library derives from VolasymError so callers (and
the CLI) can distinguish domain failures from programming errors.
"""


class VolasymError(Exception):
    """Base class for all library errors."""


class IngestError(VolasymError):
    """CSV loading / series construction failure."""


class MissingInputError(IngestError):
    """Referenced input file does not exist."""


class RowParseError(IngestError):
    """A CSV row failed to parse; message cites the 1-based line number."""


class DuplicateDateError(IngestError):
    """Two rows share the same date."""


class NonPositiveCloseError(IngestError):
    """A close value is zero, negative, or non-finite."""


class EmptyIntersectionError(IngestError):
    """Date alignment of two series produced no common dates."""


class SeriesTooShortError(VolasymError):
    """Input series shorter than the operation requires."""


class AlignmentError(VolasymError):
    """Series passed together are not on the same date grid."""


class WindowRangeError(VolasymError):
    """Requested window exceeds the available observations."""


class InsufficientDataError(VolasymError):
    """Not enough observations for the requested estimate."""


class RankDeficiencyError(VolasymError):
    """Design matrix is not full column rank."""


class DegenerateInputError(VolasymError):
    """Input has no variation where variation is required (e.g. zero variance)."""


class HorizonMismatchError(VolasymError):
    """Grid horizon does not match the requested analysis."""


class TooFewEventsError(VolasymError):
    """Fewer usable events than the panel minimum."""


class InvalidSpecError(VolasymError):
    """A generator or analysis spec violates its invariants."""


class IncompleteResultError(VolasymError):
    """A result set required for emission is missing pieces."""


class ConfigError(VolasymError):
    """Run configuration is invalid or inconsistent."""
