"""Process exit codes of the command line"""
from enum import IntEnum


class ExitCode(IntEnum):
    SUCCESS = 0
    VALIDATION_FAILED = 2
    DIVERGED = 3
    MAX_ITERATIONS = 4
    STEP_LIMIT = 5
    USAGE = 64
    DATA_FORMAT = 65
    FILE_NOT_FOUND = 66


class UsageError(ValueError):
    """Raised for flag values the commands cannot work with"""
