"""CLI entrypoint."""

from __future__ import annotations

from naflab.presentation.cli import commands
from naflab.presentation.cli.parser import build_parser


def main(argv: list[str] | None = None) -> int:
    return commands.main(argv)


__all__ = ["build_parser", "main", "commands"]
