"""Exception hierarchy. Each class carries the CLI exit code it maps to."""


class SpecnormError(Exception):
    exit_code = 1


class ArgumentError(SpecnormError, ValueError):
    exit_code = 2


class DimensionError(ArgumentError):
    pass


class DomainError(ArgumentError):
    pass


class ParseError(SpecnormError, ValueError):
    exit_code = 3

    def __init__(self, message, offset=None):
        if offset is not None:
            message = f"{message} (offset {offset})"
        super().__init__(message)
        self.offset = offset


class ApplicabilityError(SpecnormError):
    exit_code = 4

    def __init__(self, bound_id, predicate):
        super().__init__(f"{bound_id} not applicable: {predicate}")
        self.bound_id = bound_id
        self.predicate = predicate


class ConstructionUnavailable(SpecnormError):
    exit_code = 5


class RecoveryFailed(SpecnormError):
    exit_code = 6


class PrecisionError(SpecnormError):
    exit_code = 6


class BudgetExceeded(SpecnormError):
    exit_code = 6

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial
