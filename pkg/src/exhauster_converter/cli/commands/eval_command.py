"""Command evaluating a family at one direction."""

from pathlib import Path
from typing import Annotated, Final

import typer

from ...core import eval_family
from ...utils import ExhausterError, parse_direction, read_family
from ..command import CliCommand, exit_with_error, format_number


def eval_command(
    file: Annotated[Path, typer.Argument(help="Family JSON file")],
    direction: Annotated[
        str,
        typer.Option(
            "--direction",
            "-d",
            help="Comma-separated point of length space_dim, e.g. '1,0,0,0'",
        ),
    ],
) -> None:
    """
    Print the value of the represented function at the given point.

    Exhauster families are positively homogeneous, coexhauster families are
    affine min-max / max-min and are evaluated as written.
    """
    try:
        family = read_family(file)
        point = parse_direction(direction, family.space_dim)
        typer.echo(format_number(eval_family(family, point)))
    except ExhausterError as e:
        raise exit_with_error(e) from e


eval_cli_command: Final[CliCommand] = CliCommand.from_function(
    eval_command,
    name="eval",
    description="Evaluate a family at a point and print the value (12 significant digits).",
)
