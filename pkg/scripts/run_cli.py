#!/usr/bin/env python3
"""Development runner for the command line without installing the package."""

import os
import sys
from typing import NoReturn

# Add the src directory to the Python path for development
sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from exhauster_converter.cli.app import main  # noqa: E402


def run_development_cli() -> NoReturn:
    """
    Run the command line with the arguments given to this script.

    This function does not return; the command exits the process.
    """
    main()
    sys.exit(0)


if __name__ == "__main__":
    run_development_cli()
