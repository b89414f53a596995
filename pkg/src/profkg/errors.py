"""Exception hierarchy.

Every error carries an ``exit_code`` so the CLI can map failures onto its
exit-code contract: 1 usage, 2 config, 3 data, 4 runtime.
"""


class ProfkgError(Exception):
    """Base class for all package errors."""

    exit_code = 4


class UsageError(ProfkgError):
    exit_code = 1


class ConfigError(ProfkgError):
    exit_code = 2


class ConfigMissingError(ConfigError):
    pass


class DataError(ProfkgError):
    exit_code = 3


# --- graph construction / splitting ---------------------------------------

class EmptyGraphError(DataError):
    pass


class UnknownLabelError(DataError):
    pass


class OverlappingRolesError(DataError):
    pass


class InvalidEntityError(ProfkgError):
    pass


class UserWithoutInteractionsError(DataError):
    pass


# --- profiling --------------------------------------------------------------

class MissingLabelError(ProfkgError):
    pass


class MissingDependencyProfileError(ProfkgError):
    pass


# --- LLM transport ----------------------------------------------------------

class RateLimitedError(ProfkgError):
    pass


class EmptyCompletionError(ProfkgError):
    pass


class CompletionTimeoutError(ProfkgError):
    pass


class HttpStatusError(ProfkgError):
    def __init__(self, status, message=""):
        super().__init__(message or f"HTTP error {status}")
        self.status = status


# --- encoder / matrix files ---------------------------------------------------

class DimensionMismatchError(DataError):
    pass


class NonFiniteValueError(DataError):
    pass


class BadMagicError(DataError):
    pass


class TruncatedFileError(DataError):
    pass


class HeaderMismatchError(DataError):
    pass


# --- model ----------------------------------------------------------------

class ShapeMismatchError(ProfkgError):
    pass


class NearZeroDivisorError(ProfkgError):
    pass


class RoleMismatchError(ProfkgError):
    pass


# --- training ---------------------------------------------------------------

class NoNegativeAvailableError(ProfkgError):
    pass


class NonFiniteLossError(ProfkgError):
    pass


class DegenerateRowError(ProfkgError):
    pass


# --- evaluation ---------------------------------------------------------------

class EmptyRelevantSetError(ProfkgError):
    pass


# --- dataset files -----------------------------------------------------------

class ParseError(DataError):
    def __init__(self, path, line_number, message):
        super().__init__(f"{path}:{line_number}: {message}")
        self.path = str(path)
        self.line_number = line_number


class ChecksumMismatchError(DataError):
    pass


class SpecInvalidError(DataError):
    pass
