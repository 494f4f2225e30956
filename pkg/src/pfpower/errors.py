"""Exception hierarchy shared by every module of the package."""


class PfpowerError(Exception):
    """Base class for all errors raised by ``pfpower``."""


class MalformedInputError(PfpowerError, ValueError):
    """A coalition, partition or embedded coalition does not fit the player set."""


class ConfigurationError(PfpowerError, ValueError):
    """The game description lacks data required by the requested operation."""


class ValidationError(PfpowerError, ValueError):
    """A game-spec document failed validation.

    ``path`` locates the offending field, e.g. ``players[2].weight``.
    """

    def __init__(self, message, path=""):
        self.path = path
        super().__init__(f"{path}: {message}" if path else message)


class CapacityError(PfpowerError):
    """The player count exceeds the configured enumeration capacity."""


class FormMismatchError(PfpowerError, TypeError):
    """A characteristic-form operation received a partition-form game or vice versa."""


class AntichainViolationError(PfpowerError, ValueError):
    """A candidate set of minimal winning coalitions has a comparable pair."""

    def __init__(self, message, pair=None):
        self.pair = pair
        super().__init__(message)


class DegenerateGameError(PfpowerError, ValueError):
    """An index is undefined (empty minimal winning set or zero denominator)."""


class NotMergeableError(PfpowerError, ValueError):
    """Merge formulas were requested for games that are not mergeable."""
