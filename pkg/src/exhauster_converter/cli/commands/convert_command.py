"""Command running the combinatorial conversion."""

from pathlib import Path
from typing import Annotated, Final

import typer

from ...config import config
from ...convert import convert_family, product_size
from ...reduce import dedup_sets
from ...utils import ExhausterError, read_family, write_family
from ..command import CliCommand, exit_with_error


def convert_command(
    in_file: Annotated[Path, typer.Argument(help="Family JSON file to convert")],
    out_file: Annotated[Path, typer.Argument(help="Where to write the converted family")],
    dedup: Annotated[
        bool,
        typer.Option("--dedup", help="Merge identical output sets"),
    ] = False,
    cap: Annotated[
        int,
        typer.Option(
            "--cap",
            envvar="EXH_CAP",
            help="Refuse conversions producing more than this many sets",
        ),
    ] = config.EXH_CAP,
) -> None:
    """
    Convert an upper family into a lower one or vice versa.

    Prints p, the number of sets before dedup, and the number written.
    Exits with code 3 when p exceeds the cap.
    """
    try:
        family = read_family(in_file)
        p = product_size(family)
        converted = convert_family(family, dedup=False, cap=cap)
        if dedup:
            converted = dedup_sets(converted)
        write_family(converted, out_file)
        typer.echo(f"p: {p}")
        typer.echo(f"sets: {len(converted)}")
    except ExhausterError as e:
        raise exit_with_error(e) from e


convert_cli_command: Final[CliCommand] = CliCommand.from_function(
    convert_command,
    name="convert",
    description=(
        "Convert an exhauster or coexhauster into its dual kind (one output set "
        "per choice of one vertex from every input set)."
    ),
)
