"""Root CLI app - entry point and command registration."""

from pathlib import Path

import typer

from pdmchannel.config import get_settings
from pdmchannel.config.settings import configure_logging

EXIT_CODES_HELP = """
Exit codes: 0 ok; 1 a check failed (first failing id on stderr); 2 usage error;
3 numeric non-convergence; 4 invalid parameter; 5 algebra inconsistency; 6 output I/O error.
"""

app = typer.Typer(
    name="pdmchan",
    help="pdmchannel - exact and numerical checks of position-dependent-mass channel models.",
    epilog=EXIT_CODES_HELP,
    no_args_is_help=True,
)


@app.callback()
def main(
    ctx: typer.Context,
    config_dir: Path | None = typer.Option(
        None, "--config-dir", "-C", help="Config directory (default: ./config or package config)"
    ),
    profile: str | None = typer.Option(
        None, "--profile", "-p", help="Config profile (e.g. dev) to overlay on default.toml"
    ),
    log_level: str | None = typer.Option(
        None, "--log-level", help="Override logging.level (DEBUG, INFO, WARNING, ...)"
    ),
) -> None:
    """Configure logging and store options in context."""
    settings = get_settings(profile, config_dir)
    configure_logging(settings, log_level)
    ctx.obj = {"settings": settings, "config_dir": config_dir, "profile": profile}


# Commands registered from other modules
from pdmchannel.cli import degeneracy, fdcheck, fields, matelem, spectrum, verify  # noqa: E402

app.command("verify", epilog=EXIT_CODES_HELP)(verify.verify)
app.command("spectrum", epilog=EXIT_CODES_HELP)(spectrum.spectrum)
app.command("matelem", epilog=EXIT_CODES_HELP)(matelem.matelem)
app.command("fdcheck", epilog=EXIT_CODES_HELP)(fdcheck.fdcheck)
app.command("export-field", epilog=EXIT_CODES_HELP)(fields.export_field)
app.command("spectrum3d-degeneracy", epilog=EXIT_CODES_HELP)(
    degeneracy.spectrum3d_degeneracy
)


def run() -> None:
    app()


if __name__ == "__main__":
    run()
