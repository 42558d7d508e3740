#
# File: errors.py
# Version: 1.0.0
#
# Description: Exception hierarchy shared by every frobkit module. Each error
#              carries a short diagnostic code so the CLI can report failures
#              in a stable, machine-readable way.
#

__version__ = "1.0.0"


class ToolkitError(Exception):
    """Base class for all frobkit errors."""
    code = "E-TOOLKIT"

    def __init__(self, message):
        super().__init__(message)
        self.message = message

    def to_dict(self):
        return {"code": self.code, "message": self.message}


class UsageError(ToolkitError, ValueError):
    """Raised when an operation is called outside its preconditions."""
    code = "E-USAGE"


class DomainError(ToolkitError, ArithmeticError):
    """Raised for mathematically undefined requests (leading term of 0, inexact division)."""
    code = "E-DOMAIN"


class ParseError(ToolkitError):
    """Raised by the textual polynomial grammar, with a 1-based line and column."""
    code = "E-PARSE"

    def __init__(self, message, line=1, column=1):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column

    def to_dict(self):
        data = super().to_dict()
        data["line"] = self.line
        data["column"] = self.column
        return data


class CapExceededError(ToolkitError):
    """Raised when a degree guard or term-count cap stops a computation."""
    code = "E-CAP"

    def __init__(self, message, limit=None, observed=None):
        super().__init__(message)
        self.limit = limit
        self.observed = observed
