"""Command-line front end (``qr``)."""

from quandlering.cli.main import main

__all__ = ["main"]
