"""Command running the sampled classical converter."""

from pathlib import Path
from typing import Annotated, Final, Optional

import typer

from ...config import config
from ...constants import SamplerMode
from ...demyanov import demyanov_convert
from ...models import Family
from ...utils import ExhausterError, build_sampler, read_family, write_family
from ..command import CliCommand, exit_with_error


def default_mode(family: Family) -> SamplerMode:
    """Half-sphere for coexhausters, exact angles in the plane, else full sphere."""
    if family.kind.is_coexhauster:
        return SamplerMode.HALF_SPHERE_FIRST_COORD_NONNEG
    if family.space_dim == 2:
        return SamplerMode.UNIFORM_ANGLES_2D
    return SamplerMode.FULL_SPHERE


def demyanov_command(
    in_file: Annotated[Path, typer.Argument(help="Family JSON file to convert")],
    out_file: Annotated[Path, typer.Argument(help="Where to write the converted family")],
    dirs: Annotated[
        int, typer.Option("--dirs", min=1, help="Number of sampled directions")
    ] = config.EXH_DIRS,
    seed: Annotated[
        int, typer.Option("--seed", envvar="EXH_SEED", help="Sampler seed")
    ] = config.EXH_SEED,
    mode: Annotated[
        Optional[SamplerMode],
        typer.Option("--mode", help="Override the sampler mode"),
    ] = None,
) -> None:
    """
    Convert a family by collecting active vertices along sampled directions.

    The result is exact at the sampled directions; check it with verify.
    """
    try:
        family = read_family(in_file)
        sampler = build_sampler(
            family.kind.vertex_dim(family.space_dim),
            dirs,
            seed,
            mode or default_mode(family),
        )
        converted = demyanov_convert(family, sampler)
        write_family(converted, out_file)
        typer.echo(f"directions: {dirs}")
        typer.echo(f"sets: {len(converted)}")
    except ExhausterError as e:
        raise exit_with_error(e) from e


demyanov_cli_command: Final[CliCommand] = CliCommand.from_function(
    demyanov_command,
    name="demyanov",
    description="Convert a family with the direction-sampled classical procedure.",
)
