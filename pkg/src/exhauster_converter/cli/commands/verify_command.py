"""Command comparing two families with the sampled oracle."""

from pathlib import Path
from typing import Annotated, Final

import typer

from ...config import config
from ...constants import ExitCode
from ...models import DirectionSampler, EquivalenceReport
from ...utils import ExhausterError, read_family
from ...verify import check_equivalence
from ..command import CliCommand, exit_with_error


def format_report(report: EquivalenceReport) -> str:
    """One `field: value` line per report field, floats in round-trip form."""
    return "\n".join(
        [
            f"max_abs_deviation: {report.max_abs_deviation!r}",
            "worst_direction: " + ",".join(repr(x) for x in report.worst_direction),
            f"directions_tested: {report.directions_tested}",
            f"tolerance: {report.tolerance!r}",
            f"passed: {str(report.passed).lower()}",
        ]
    )


def verify_command(
    file_a: Annotated[Path, typer.Argument(help="First family JSON file")],
    file_b: Annotated[Path, typer.Argument(help="Second family JSON file")],
    dirs: Annotated[
        int, typer.Option("--dirs", min=0, help="Number of sampled unit directions")
    ] = config.EXH_DIRS,
    seed: Annotated[
        int, typer.Option("--seed", envvar="EXH_SEED", help="Sampler seed")
    ] = config.EXH_SEED,
    tol: Annotated[
        float, typer.Option("--tol", envvar="EXH_TOL", help="Largest admissible deviation")
    ] = config.EXH_TOL,
) -> None:
    """
    Check that two families represent the same function.

    Exits 0 when the maximum deviation is within tolerance, 1 otherwise.
    """
    try:
        first = read_family(file_a)
        second = read_family(file_b)
        sampler = DirectionSampler(dim=first.space_dim, count=dirs, seed=seed)
        report = check_equivalence(first, second, sampler, tol=tol)
    except ExhausterError as e:
        raise exit_with_error(e) from e

    typer.echo(format_report(report))
    if not report.passed:
        raise typer.Exit(code=int(ExitCode.VERIFICATION_FAILED))


verify_cli_command: Final[CliCommand] = CliCommand.from_function(
    verify_command,
    name="verify",
    description="Compare two families as functions on seeded directions plus canonical probes.",
)
