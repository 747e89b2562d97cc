"""spectrum: lowest states of the planar model or of one three-dimensional channel."""

from __future__ import annotations

from pathlib import Path

import typer

from pdmchannel import __version__
from pdmchannel.cli.common import emit, exit_codes, run_config
from pdmchannel.model3d import groups_for, spectrum3d
from pdmchannel.storage.reports import (
    SPECTRUM_HEADER,
    render_csv,
    render_json,
    spectrum2d_rows,
    spectrum3d_rows,
)
from pdmchannel.wavefn.spectrum import spectrum2d


def spectrum(
    ctx: typer.Context,
    model: str = typer.Option("2d", "--model", "-m", help="2d | box | cyl"),
    count: int = typer.Option(10, "--count", "-n", help="Number of states"),
    k: float | None = typer.Option(None, "--k", help="Barrier parameter k > 0"),
    q: float | None = typer.Option(None, "--q", help="Inverse length q > 0"),
    radius: float | None = typer.Option(None, "--R", help="Cylinder radius"),
    fmt: str | None = typer.Option(None, "--format", "-f", help="json | csv (default: config)"),
    out: Path | None = typer.Option(None, "--out", "-o", help="Output path (default: stdout)"),
) -> None:
    """Enumerate the lowest states by energy, ties in quantum-number order."""
    with exit_codes("spectrum"):
        cfg = run_config(
            ctx, "spectrum", model=model, count=count, k=k, q=q, R=radius, format=fmt, out=out
        )
        if cfg.model == "2d":
            entries = spectrum2d(cfg.count, cfg.k, cfg.q)
            rows = spectrum2d_rows(entries)
            states = [e.model_dump() for e in entries]
            groups: list = []
        else:
            found = spectrum3d(cfg.model, cfg.count, k=cfg.k, q=cfg.q, R=cfg.R)
            group_list = groups_for(cfg.model, found)
            rows = spectrum3d_rows(cfg.model, found, group_list)
            states = [st.model_dump() for st in found]
            groups = [g.model_dump() for g in group_list]
        if cfg.format == "csv":
            text = render_csv(SPECTRUM_HEADER, rows)
        else:
            payload = {
                "tool_version": __version__,
                "command": "spectrum",
                "params": cfg.params("model", "count", "k", "q", "R"),
                "states": states,
                "groups": groups,
            }
            text = render_json(payload)
        emit(text, cfg.out)
