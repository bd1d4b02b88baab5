"""Exception hierarchy shared by every module."""


class EvolutionAlgebraError(ValueError):
    """Base class for user-facing input errors."""


class DimensionMismatch(EvolutionAlgebraError):
    def __init__(self, expected=None, got=None):
        msg = "dimension mismatch"
        if expected is not None:
            msg += f" (expected {expected}, got {got})"
        super().__init__(msg)


class NotAnIdeal(EvolutionAlgebraError):
    def __init__(self, indices=()):
        super().__init__("not an ideal: " + repr(sorted(indices)))


class PreconditionError(EvolutionAlgebraError):
    pass


class OracleDimensionError(EvolutionAlgebraError):
    pass


class ParseError(EvolutionAlgebraError):
    """Malformed algebra document. ``where`` names the JSON position or field."""

    def __init__(self, message, where=None):
        self.where = where
        super().__init__(f"{where}: {message}" if where else message)


class InternalConsistencyError(RuntimeError):
    """Two independent computations disagreed. Always a bug, never bad input."""
