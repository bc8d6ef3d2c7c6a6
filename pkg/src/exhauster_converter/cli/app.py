"""Command line application for converting and checking exhausters."""

import logging
import sys
from typing import Annotated, List

import typer

from .. import __version__
from ..config import config
from .command import CliCommand
from .commands import ALL_COMMANDS


def _show_version(value: bool) -> None:
    if value:
        typer.echo(f"exhauster-converter {__version__}")
        raise typer.Exit()


def configure_logging(
    verbose: Annotated[
        bool, typer.Option("--verbose", "-v", help="Log debug details to stderr")
    ] = False,
    version: Annotated[
        bool,
        typer.Option(
            "--version",
            callback=_show_version,
            is_eager=True,
            help="Show the version and exit",
        ),
    ] = False,
) -> None:
    """Evaluate, convert, reduce and verify exhausters and coexhausters."""
    # an invalid LOG_LEVEL was already reported by Config.validate on import
    configured = logging.getLevelNamesMapping().get(config.LOG_LEVEL.upper(), logging.WARNING)
    level = logging.DEBUG if verbose or config.DEBUG else configured
    logging.basicConfig(
        level=level,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )


def create_app() -> typer.Typer:
    """Build the typer application with every registered command."""
    app = typer.Typer(
        name="exhauster-converter",
        no_args_is_help=True,
        add_completion=False,
        pretty_exceptions_enable=False,
    )
    app.callback()(configure_logging)

    commands: List[CliCommand] = list(ALL_COMMANDS)
    for command in commands:
        app.command(name=command.name, help=command.description)(command.fn)
    return app


app: typer.Typer = create_app()


def main() -> None:
    """
    Main entry point for the exhauster-converter command line.

    Exits with the code of the command that ran.
    """
    try:
        app()
    except Exception as e:
        print(f"Error in main: {e}", file=sys.stderr)
        if config.DEBUG:
            import traceback
            traceback.print_exc(file=sys.stderr)
        sys.exit(2)


if __name__ == "__main__":
    main()
