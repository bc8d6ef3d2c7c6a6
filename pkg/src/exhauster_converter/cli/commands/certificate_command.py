"""Command printing the payoff matrix that certifies a conversion at a point."""

from pathlib import Path
from typing import Annotated, Final

import typer

from ...config import config
from ...convert import (
    certificate_mode,
    conversion_certificate,
    convert_family,
    saddle_column,
    sides,
)
from ...utils import ExhausterError, parse_direction, read_family
from ..command import CliCommand, exit_with_error, format_number


def certificate_command(
    file: Annotated[Path, typer.Argument(help="Family JSON file")],
    direction: Annotated[
        str,
        typer.Option("--direction", "-d", help="Comma-separated point of length space_dim"),
    ],
    cap: Annotated[
        int,
        typer.Option("--cap", envvar="EXH_CAP", help="Largest admissible number of sets"),
    ] = config.EXH_CAP,
) -> None:
    """
    Print D(direction), its saddle column and both sides of the minimax equality.

    Rows are input sets, columns are converted sets; the saddle column is
    printed 1-based.
    """
    try:
        family = read_family(file)
        point = parse_direction(direction, family.space_dim)
        converted = convert_family(family, dedup=False, cap=cap)
        matrix = conversion_certificate(family, converted, point)
    except ExhausterError as e:
        raise exit_with_error(e) from e

    mode = certificate_mode(family.kind)
    column = saddle_column(matrix, mode)
    row_side, column_side = sides(matrix, mode)
    for row in matrix.entries:
        typer.echo(" ".join(format_number(x) for x in row))
    typer.echo(f"saddle_mode: {mode.value}")
    typer.echo(f"saddle_column: {'none' if column is None else column + 1}")
    typer.echo(f"row_side: {format_number(row_side)}")
    typer.echo(f"column_side: {format_number(column_side)}")


certificate_cli_command: Final[CliCommand] = CliCommand.from_function(
    certificate_command,
    name="certificate",
    description="Show the payoff matrix certifying the conversion at one point.",
)
