"""CLI module alias.

The command handlers live in ``naflab.presentation.cli.commands``; this module
is that module object, so ``naflab.cli:main`` and monkeypatching both reach it.
"""

from __future__ import annotations

import sys

from naflab.presentation.cli import commands as _commands

sys.modules[__name__] = _commands
