"""Subcommands of the exhauster-converter command line."""

from typing import Final, List

from ..command import CliCommand
from .certificate_command import certificate_cli_command
from .convert_command import convert_cli_command
from .demyanov_command import demyanov_cli_command
from .eval_command import eval_cli_command
from .gen_command import gen_cli_command
from .reduce_command import reduce_cli_command
from .verify_command import verify_cli_command

ALL_COMMANDS: Final[List[CliCommand]] = [
    eval_cli_command,
    convert_cli_command,
    verify_cli_command,
    reduce_cli_command,
    demyanov_cli_command,
    gen_cli_command,
    certificate_cli_command,
]

__all__: Final[List[str]] = [
    "ALL_COMMANDS",
    "eval_cli_command",
    "convert_cli_command",
    "verify_cli_command",
    "reduce_cli_command",
    "demyanov_cli_command",
    "gen_cli_command",
    "certificate_cli_command",
]
