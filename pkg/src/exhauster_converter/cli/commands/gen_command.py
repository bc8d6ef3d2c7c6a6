"""Command generating seeded random families."""

from pathlib import Path
from typing import Annotated, Final

import typer

from ...config import config
from ...constants import FamilyKind
from ...utils import ExhausterError, write_family
from ...verify import random_family
from ..command import CliCommand, exit_with_error


def gen_command(
    out: Annotated[Path, typer.Option("--out", "-o", help="Where to write the family")],
    n: Annotated[int, typer.Option("--n", min=1, help="Space dimension")] = 3,
    k: Annotated[int, typer.Option("--k", min=1, help="Number of sets")] = 2,
    max_vertices: Annotated[
        int, typer.Option("--max-vertices", min=1, help="Most vertices per set")
    ] = 4,
    kind: Annotated[
        FamilyKind, typer.Option("--kind", help="Family kind")
    ] = FamilyKind.LOWER_EXHAUSTER,
    seed: Annotated[
        int, typer.Option("--seed", envvar="EXH_SEED", help="Generator seed")
    ] = config.EXH_SEED,
    normalize: Annotated[
        bool,
        typer.Option("--normalize", help="Shift coexhauster constants so h(0) = 0"),
    ] = False,
) -> None:
    """Write a random family; the same flags always produce the same file."""
    try:
        family = random_family(n, k, max_vertices, kind, seed, normalize=normalize)
        write_family(family, out)
        typer.echo(f"sets: {len(family)}")
    except ExhausterError as e:
        raise exit_with_error(e) from e


gen_cli_command: Final[CliCommand] = CliCommand.from_function(
    gen_command,
    name="gen",
    description="Generate a deterministic random family for tests and experiments.",
)
