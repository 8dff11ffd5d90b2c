class ToolkitError(Exception):
    """
    Base class for toolkit errors.
    """
    exit_code = 1
    default_code = 'error'

    def __init__(self, message, code=None, params=None):
        super().__init__(message)
        self.message = message
        self.code = code or self.default_code
        self.params = params or {}


class InputError(ToolkitError):
    """
    Malformed or out-of-range input.
    """
    default_code = 'input'


class ResourceLimitError(ToolkitError):
    """
    A requested degree or order is above the configured ceiling.
    """
    default_code = 'resource'


class InconclusiveError(ToolkitError):
    exit_code = 2
    default_code = 'inconclusive'


class InvariantViolation(ToolkitError):
    """
    An internal consistency check failed.
    """
    exit_code = 3
    default_code = 'invariant'
