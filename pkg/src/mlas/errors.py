"""Exception types raised across the package."""


class MlasError(Exception):
    pass


class ParseError(MlasError, ValueError):
    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class FormatError(MlasError, ValueError):
    pass


class DomainError(MlasError, ValueError):
    pass


class ConnectivityError(MlasError):
    def __init__(self, message, vertex=None):
        super().__init__(message)
        self.vertex = vertex


class FeasibilityError(MlasError):
    """A tree move would break the spanning-tree invariants."""


class PreconditionError(MlasError):
    pass


class SelectionError(MlasError):
    pass


class SizeError(MlasError):
    pass


class ResourceError(MlasError):
    pass


class ValidationError(MlasError):
    def __init__(self, message, violations=()):
        super().__init__(message)
        self.violations = list(violations)
