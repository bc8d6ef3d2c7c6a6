"""Command line front end."""

from typing import Final, List

from .app import app, create_app, main

__all__: Final[List[str]] = ["app", "create_app", "main"]
