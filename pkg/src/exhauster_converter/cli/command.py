"""Registration record for command line subcommands."""

from dataclasses import dataclass
from typing import Callable

import typer

from ..utils.errors import ExhausterError


@dataclass(frozen=True)
class CliCommand:
    """
    A subcommand waiting to be registered on the typer application.

    Keeps the name, help text and implementing function together so that
    every command module exports one ready-made record.
    """

    name: str
    description: str
    fn: Callable[..., None]

    @classmethod
    def from_function(
        cls, fn: Callable[..., None], name: str, description: str
    ) -> "CliCommand":
        return cls(name=name, description=description, fn=fn)


def exit_with_error(e: ExhausterError) -> typer.Exit:
    """Print an error to stderr and build the Exit carrying its exit code."""
    typer.echo(f"Error: {e}", err=True)
    return typer.Exit(code=int(e.exit_code))


def format_number(value: float) -> str:
    """Format a result with 12 significant digits, never printing -0."""
    return f"{value + 0.0:.12g}"
