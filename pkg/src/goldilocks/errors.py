"""Exception types shared across the package."""


class GoldilocksError(Exception):
    """Base class for every error raised by this package."""


class ArityError(GoldilocksError, ValueError):
    pass


class PermError(GoldilocksError, ValueError):
    pass


class NotSelfDualError(GoldilocksError, ValueError):
    pass


class NotThresholdError(GoldilocksError, ValueError):
    pass


class NotAmpleError(GoldilocksError, ValueError):
    pass


class InvalidRealizationError(GoldilocksError, ValueError):
    pass


class ClassError(GoldilocksError, ValueError):
    """Input is outside the function class an operation requires."""


class AdmissibilityError(GoldilocksError, ValueError):
    pass


class InvalidRepresentativeError(GoldilocksError, ValueError):
    pass


class BudgetError(GoldilocksError):
    """Requested enumeration exceeds the configured arity cap."""


class EngineMismatchError(GoldilocksError):
    """Two counting engines disagreed."""


class ParseError(GoldilocksError, ValueError):
    pass
