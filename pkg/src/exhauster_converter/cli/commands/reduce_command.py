"""Command removing duplicate and sample-redundant sets."""

from pathlib import Path
from typing import Annotated, Final

import typer

from ...config import config
from ...models import DirectionSampler
from ...reduce import dedup_sets, prune_sampled
from ...utils import ExhausterError, read_family, write_family
from ..command import CliCommand, exit_with_error


def reduce_command(
    in_file: Annotated[Path, typer.Argument(help="Family JSON file to reduce")],
    out_file: Annotated[Path, typer.Argument(help="Where to write the reduced family")],
    dirs: Annotated[
        int, typer.Option("--dirs", min=0, help="Directions used to justify pruning")
    ] = config.EXH_DIRS,
    seed: Annotated[
        int, typer.Option("--seed", envvar="EXH_SEED", help="Sampler seed")
    ] = config.EXH_SEED,
    tol: Annotated[
        float, typer.Option("--tol", envvar="EXH_TOL", help="Deviation allowed when pruning")
    ] = config.EXH_TOL,
    prune: Annotated[
        bool,
        typer.Option("--prune/--no-prune", help="Also drop sets redundant on the sample"),
    ] = True,
) -> None:
    """
    Merge duplicate sets, then greedily prune sets that never decide the value.

    Pruning is justified on the sample only; re-run verify with a different
    seed to check the result.
    """
    try:
        family = read_family(in_file)
        reduced = dedup_sets(family)
        if prune:
            sampler = DirectionSampler(dim=family.space_dim, count=dirs, seed=seed)
            reduced = prune_sampled(reduced, sampler, tol=tol)
        write_family(reduced, out_file)
        typer.echo(f"sets: {len(family)} -> {len(reduced)}")
    except ExhausterError as e:
        raise exit_with_error(e) from e


reduce_cli_command: Final[CliCommand] = CliCommand.from_function(
    reduce_command,
    name="reduce",
    description="Remove duplicate sets and sets that are redundant on sampled directions.",
)
