"""Configuration loading and validation."""

from __future__ import annotations

import logging
import tomllib
from enum import Enum, StrEnum
from pathlib import Path
from typing import Any

import tomli_w
from pydantic import BaseModel, Field

from naflab.digitset import DEFAULT_DIGIT_CAP
from naflab.optimality.oracle import MAX_ORACLE_WEIGHT

LOGGER = logging.getLogger(__name__)

_LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


class OutputFormat(StrEnum):
    """Supported result formats."""

    JSON = "json"
    CSV = "csv"
    PLAIN = "plain"


class RuntimeConfig(BaseModel):
    """Runtime configuration."""

    log_level: str = "WARNING"
    # 0 means one worker per CPU; NAFLAB_THREADS caps either value
    workers: int = 1


class DigitsConfig(BaseModel):
    """Digit-set construction limits."""

    cap: int = DEFAULT_DIGIT_CAP


class OracleConfig(BaseModel):
    """Minimal-weight oracle bounds."""

    max_weight: int = MAX_ORACLE_WEIGHT
    extra_exponents: int = 4


class MapConfig(BaseModel):
    """Default grid of the optimality map."""

    p_max: int = 8
    q_max: int = 20
    w_min: int = 2
    w_max: int = 6
    digit_cap: int = 20_000


class OutputConfig(BaseModel):
    """Result output configuration."""

    format: OutputFormat = OutputFormat.JSON


class AppConfig(BaseModel):
    """Top-level configuration."""

    runtime: RuntimeConfig = Field(default_factory=RuntimeConfig)
    digits: DigitsConfig = Field(default_factory=DigitsConfig)
    oracle: OracleConfig = Field(default_factory=OracleConfig)
    map: MapConfig = Field(default_factory=MapConfig)
    output: OutputConfig = Field(default_factory=OutputConfig)


def default_config_path() -> Path:
    """Return default user config path."""
    return Path("~/.config/naflab/config.toml").expanduser()


def _clamp_min(value: int, *, field_name: str, minimum: int) -> int:
    if value < minimum:
        LOGGER.warning("%s=%s is below %s; using %s", field_name, value, minimum, minimum)
        return minimum
    return value


def _clamp_max(value: int, *, field_name: str, maximum: int) -> int:
    if value > maximum:
        LOGGER.warning("%s=%s exceeds %s; using %s", field_name, value, maximum, maximum)
        return maximum
    return value


def _normalize_log_level(value: str) -> str:
    normalized = value.strip().upper()
    if normalized not in _LOG_LEVELS:
        raise ValueError(
            f"runtime.log_level must be one of {', '.join(_LOG_LEVELS)}; got {value!r}"
        )
    return normalized


def _to_primitive(value: Any) -> Any:
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, dict):
        return {key: _to_primitive(item) for key, item in value.items()}
    if isinstance(value, list):
        return [_to_primitive(item) for item in value]
    return value


def write_example_config(path: Path) -> None:
    """Write a config file holding every default."""
    write_config(path, AppConfig())


def write_config(path: Path, config: AppConfig) -> None:
    """Write a concrete config file."""
    cfg = _to_primitive(config.model_dump(mode="json"))
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(tomli_w.dumps(cfg), encoding="utf-8")


def load_config(path: Path | None = None) -> AppConfig:
    """Load configuration from TOML; a missing file yields the defaults."""
    config_path = path or default_config_path()
    if not config_path.exists():
        LOGGER.debug("No config at %s; using defaults", config_path)
        config = AppConfig()
    else:
        raw = tomllib.loads(config_path.read_text(encoding="utf-8"))
        config = AppConfig.model_validate(raw)

    config.runtime.log_level = _normalize_log_level(str(config.runtime.log_level))
    config.runtime.workers = _clamp_min(
        int(config.runtime.workers), field_name="runtime.workers", minimum=0
    )
    config.digits.cap = _clamp_min(int(config.digits.cap), field_name="digits.cap", minimum=2)
    config.oracle.max_weight = _clamp_max(
        _clamp_min(int(config.oracle.max_weight), field_name="oracle.max_weight", minimum=1),
        field_name="oracle.max_weight",
        maximum=MAX_ORACLE_WEIGHT,
    )
    config.oracle.extra_exponents = _clamp_min(
        int(config.oracle.extra_exponents), field_name="oracle.extra_exponents", minimum=0
    )
    config.map.p_max = _clamp_min(int(config.map.p_max), field_name="map.p_max", minimum=0)
    config.map.q_max = _clamp_min(int(config.map.q_max), field_name="map.q_max", minimum=2)
    config.map.w_min = _clamp_min(int(config.map.w_min), field_name="map.w_min", minimum=2)
    config.map.w_max = _clamp_min(
        int(config.map.w_max), field_name="map.w_max", minimum=config.map.w_min
    )
    config.map.digit_cap = _clamp_min(
        int(config.map.digit_cap), field_name="map.digit_cap", minimum=2
    )
    return config
