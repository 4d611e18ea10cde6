"""Resolved command options: CLI flags layered over the config file."""

from __future__ import annotations

import argparse
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from naflab.config import AppConfig, OutputFormat, default_config_path
from naflab.expansion import NumberSystem
from naflab.rings import Ring, create_ring


@dataclass(frozen=True, slots=True)
class CliConfig:
    """One invocation; quadratic mode (p, q) and integer mode (base) are exclusive."""

    command: str
    fmt: OutputFormat
    out: str | None
    digit_cap: int
    app: AppConfig
    p: int | None = None
    q: int | None = None
    base: int | None = None
    w: int | None = None
    z: str | None = None
    seed: int | None = None

    @classmethod
    def from_args(cls, args: argparse.Namespace, app: AppConfig) -> CliConfig:
        fmt = getattr(args, "format", None) or app.output.format
        digit_cap = getattr(args, "digit_cap", None)
        return cls(
            command=str(args.command),
            fmt=OutputFormat(fmt),
            out=getattr(args, "out", None),
            digit_cap=app.digits.cap if digit_cap is None else int(digit_cap),
            app=app,
            p=getattr(args, "p", None),
            q=getattr(args, "q", None),
            base=getattr(args, "base", None),
            w=getattr(args, "w", None),
            z=getattr(args, "z", None),
            seed=getattr(args, "seed", None),
        )

    @property
    def plain(self) -> bool:
        return self.fmt is OutputFormat.PLAIN

    def ring(self) -> Ring:
        return create_ring(p=self.p, q=self.q, base=self.base)

    def width(self) -> int:
        if self.w is None:
            raise ValueError("-w is required")
        if self.w < 1:
            raise ValueError(f"-w must be positive, got {self.w}")
        return self.w

    def system(self) -> NumberSystem:
        return NumberSystem.build(self.ring(), self.width(), digit_cap=self.digit_cap)

    def element(self, ring: Ring, *, flag: str = "--z") -> Any:
        if self.z is None:
            raise ValueError(f"{flag} is required")
        try:
            return ring.parse_element(self.z)
        except ValueError as exc:
            raise ValueError(f"{flag}: {exc}") from exc


def resolve_config_path(path_value: str | None) -> Path:
    if path_value:
        return Path(path_value).expanduser()
    return default_config_path()
