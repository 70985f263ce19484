"""
Error hierarchy shared by services, the CLI and the HTTP layer.

Each class carries the CLI exit code and the HTTP status it maps to.

@Time ： 2026-10-18
"""


class TorsionLabError(Exception):
    exit_code = 1
    status_code = 500

    def __init__(self, message, **context):
        super().__init__(message)
        self.message = message
        self.context = context

    def to_dict(self):
        return {"error": type(self).__name__, "message": self.message, **self.context}


# exit 2: the input is mathematically outside an operation's domain
class DomainError(TorsionLabError):
    exit_code = 2
    status_code = 422


class DegenerateTorsionError(DomainError):
    pass


class CoincidentPointsError(DomainError):
    pass


class EmptyPieceError(DomainError):
    pass


class EmptyRootSetError(DomainError):
    pass


class NotNormalizedError(DomainError):
    pass


class DegenerateDataError(DomainError):
    pass


class OutOfRangeError(DomainError):
    pass


# exit 3: a numerical precondition failed
class NumericalPreconditionError(TorsionLabError):
    exit_code = 3
    status_code = 422


class AliasingError(NumericalPreconditionError):
    pass


class GridTooCoarseError(NumericalPreconditionError):
    pass


class RootFindingError(NumericalPreconditionError):
    pass


# exit 64: bad command line, config file or expression text
class UsageError(TorsionLabError):
    exit_code = 64
    status_code = 400


class PolynomialParseError(UsageError):
    def __init__(self, message, position=None, expr=None):
        super().__init__(message, position=position, expr=expr)
        self.position = position
        self.expr = expr

    def __str__(self):
        if self.position is None:
            return self.message
        return f"{self.message} at position {self.position}"


class ConfigError(UsageError):
    pass
