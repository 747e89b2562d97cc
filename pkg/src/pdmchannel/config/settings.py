"""TOML config loading and profiles."""

from __future__ import annotations

import logging
import sys
import tomllib
from pathlib import Path
from typing import Any

# Default config search path (project root or cwd)
_CONFIG_DIR = Path(__file__).resolve().parent.parent.parent.parent / "config"


def _load_toml(path: Path) -> dict[str, Any]:
    with open(path, "rb") as f:
        return tomllib.load(f)


def _deep_merge(base: dict[str, Any], override: dict[str, Any]) -> dict[str, Any]:
    """Recursively merge override into base. Override values take precedence."""
    result = dict(base)
    for key, value in override.items():
        if key in result and isinstance(result[key], dict) and isinstance(value, dict):
            result[key] = _deep_merge(result[key], value)
        else:
            result[key] = value
    return result


def _find_config_dir(config_dir: Path | None = None) -> Path:
    if config_dir is not None:
        return config_dir
    cwd_config = Path.cwd() / "config"
    if cwd_config.exists():
        return cwd_config
    return _CONFIG_DIR


def load_config(profile: str | None = None, config_dir: Path | None = None) -> dict[str, Any]:
    """Load merged config from default.toml and optional profile overlay."""
    directory = _find_config_dir(config_dir)
    default_path = directory / "default.toml"
    if not default_path.exists():
        return {}
    base = _load_toml(default_path)
    if profile:
        profile_path = directory / f"{profile}.toml"
        if profile_path.exists():
            overlay = _load_toml(profile_path)
            base = _deep_merge(base, overlay)
    return base


def get_settings(profile: str | None = None, config_dir: Path | None = None) -> Settings:
    """Return Settings instance from merged config."""
    raw = load_config(profile, config_dir)
    return Settings.from_dict(raw)


class Settings:
    """Application settings from TOML config."""

    def __init__(
        self,
        *,
        model: dict[str, Any] | None = None,
        quadrature: dict[str, Any] | None = None,
        fd: dict[str, Any] | None = None,
        verify: dict[str, Any] | None = None,
        report: dict[str, Any] | None = None,
        logging: dict[str, Any] | None = None,
    ):
        self.model = model or {}
        self.quadrature = quadrature or {}
        self.fd = fd or {}
        self.verify = verify or {}
        self.report = report or {}
        self.logging = logging or {}

    @classmethod
    def from_dict(cls, raw: dict[str, Any]) -> Settings:
        return cls(
            model=raw.get("model"),
            quadrature=raw.get("quadrature"),
            fd=raw.get("fd"),
            verify=raw.get("verify"),
            report=raw.get("report"),
            logging=raw.get("logging"),
        )

    # Convenience accessors with defaults
    @property
    def k(self) -> float:
        return float(self.model.get("k", 1.0))

    @property
    def q(self) -> float:
        return float(self.model.get("q", 1.0))

    @property
    def radius(self) -> float:
        return float(self.model.get("R", 1.0))

    @property
    def t_nodes(self) -> int:
        return int(self.quadrature.get("t_nodes", 96))

    @property
    def y_nodes(self) -> int:
        return int(self.quadrature.get("y_nodes", 64))

    @property
    def quad_rel_tol(self) -> float:
        return float(self.quadrature.get("rel_tol", 1e-8))

    @property
    def fd_x_max_q(self) -> float:
        return float(self.fd.get("x_max_q", 12.0))

    @property
    def fd_nodes(self) -> int:
        return int(self.fd.get("nodes", 399))

    @property
    def verify_k_values(self) -> list[float]:
        return [float(v) for v in self.verify.get("k_values") or [0.5, 1.0, 2.5]]

    @property
    def verify_n_max(self) -> int:
        return int(self.verify.get("n_max", 6))

    @property
    def verify_q_values(self) -> list[float]:
        return [float(v) for v in self.verify.get("q_values") or [1.0, 2.0]]

    @property
    def verify_residual_levels(self) -> int:
        return int(self.verify.get("residual_levels", 8))

    @property
    def seed(self) -> int:
        return int(self.verify.get("seed", 20240611))

    @property
    def report_format(self) -> str:
        return self.report.get("format", "json")

    @property
    def logging_level(self) -> str:
        return self.logging.get("level", "INFO").upper()

    @property
    def logging_format(self) -> str:
        return self.logging.get("format", "console")

    @property
    def logging_level_num(self) -> int:
        return getattr(logging, self.logging_level, logging.INFO)


def configure_logging(settings: Settings, level: str | None = None) -> None:
    """Configure structlog with settings. Call once at application entry.

    Logs go to stderr so that reports written to stdout stay byte-identical.
    """
    import structlog

    processors = [
        structlog.contextvars.merge_contextvars,
        structlog.processors.add_log_level,
        structlog.processors.TimeStamper(fmt="iso"),
        structlog.processors.StackInfoRenderer(),
    ]
    if settings.logging_format == "json":
        processors.append(structlog.processors.JSONRenderer())
    else:
        processors.append(structlog.dev.ConsoleRenderer())

    level_num = settings.logging_level_num
    if level:
        level_num = getattr(logging, level.upper(), level_num)

    structlog.configure(
        processors=processors,
        wrapper_class=structlog.make_filtering_bound_logger(level_num),
        context_class=dict,
        logger_factory=structlog.PrintLoggerFactory(file=sys.stderr),
        cache_logger_on_first_use=True,
    )
