from enum import IntEnum


class ExitCode(IntEnum):
    """Process exit codes of the command line front end."""
    SUCCESS = 0
    VERIFICATION_FAILED = 1
    INPUT_ERROR = 2
    RESOURCE_CAP = 3
