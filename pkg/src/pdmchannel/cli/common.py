"""Helpers shared by the CLI commands: settings, exit codes and output."""

from __future__ import annotations

from collections.abc import Iterator
from contextlib import contextmanager
from pathlib import Path
from typing import Any

import structlog
import typer
from pydantic import BaseModel, ValidationError

from pdmchannel.config.settings import Settings
from pdmchannel.errors import InvalidParam, PdmError
from pdmchannel.models.report import Report
from pdmchannel.models.run import RunConfig
from pdmchannel.storage.reports import write_text

log = structlog.get_logger(__name__)

EXIT_CHECK_FAILED = 1
EXIT_INVALID = InvalidParam.exit_code


def settings_of(ctx: typer.Context) -> Settings:
    return ctx.obj["settings"]


@contextmanager
def exit_codes(command: str) -> Iterator[None]:
    """Map package errors and validation failures to the documented exit codes."""
    try:
        yield
    except ValidationError as e:
        first = e.errors()[0]
        where = ".".join(str(p) for p in first["loc"]) or "flags"
        typer.echo(f"{command}: invalid {where}: {first['msg']}", err=True)
        log.error("invalid_flags", command=command, errors=e.error_count())
        raise typer.Exit(code=EXIT_INVALID) from e
    except PdmError as e:
        typer.echo(f"{command}: {type(e).__name__}: {e}", err=True)
        log.error("command_failed", command=command, error=type(e).__name__)
        raise typer.Exit(code=e.exit_code) from e


def run_config(ctx: typer.Context, command: str, **flags: Any) -> RunConfig:
    """RunConfig from the flags; unset ones are filled from the settings."""
    settings = settings_of(ctx)
    defaults = {
        "k": settings.k,
        "q": settings.q,
        "R": settings.radius,
        "t_nodes": settings.t_nodes,
        "y_nodes": settings.y_nodes,
        "nodes": settings.fd_nodes,
        "format": settings.report_format,
    }
    for name, value in defaults.items():
        if flags.get(name) is None:
            flags[name] = value
    return RunConfig(command=command, **{k: v for k, v in flags.items() if v is not None})


def emit(text: str, out: Path | None) -> None:
    """Write to ``out`` when given, else to stdout."""
    if out is None:
        typer.echo(text, nl=False)
    else:
        write_text(text, out)


def finish(report: Report | BaseModel, ok: bool) -> None:
    if not ok and isinstance(report, Report):
        failed = report.first_failure()
        name = failed.id if failed else "?"
        typer.echo(f"{report.command}: check failed: {name}", err=True)
        raise typer.Exit(code=EXIT_CHECK_FAILED)
