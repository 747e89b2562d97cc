"""spectrum3d-degeneracy: degeneracy groups of a three-dimensional channel below E_max."""

from __future__ import annotations

from pathlib import Path

import typer

from pdmchannel import __version__
from pdmchannel.cli.common import emit, exit_codes, run_config
from pdmchannel.errors import InvalidParam
from pdmchannel.model3d import box_degeneracy_scan, cyl_degeneracy_scan
from pdmchannel.storage.reports import render_csv, render_json

GROUP_HEADER = ("group_id", "kind", "key", "energy", "members")


def spectrum3d_degeneracy(
    ctx: typer.Context,
    model: str = typer.Option("box", "--model", "-m", help="box | cyl"),
    e_max: float = typer.Option(..., "--e-max", help="Largest energy scanned"),
    k: float | None = typer.Option(None, "--k", help="Barrier parameter k > 0"),
    q: float | None = typer.Option(None, "--q", help="Inverse length q > 0"),
    radius: float | None = typer.Option(None, "--R", help="Cylinder radius"),
    fmt: str | None = typer.Option(None, "--format", "-f", help="json | csv (default: config)"),
    out: Path | None = typer.Option(None, "--out", "-o", help="Output path (default: stdout)"),
) -> None:
    """Group states by exact energy: (l, m) swaps, accidental sums of squares, sign of m."""
    with exit_codes("spectrum3d-degeneracy"):
        cfg = run_config(
            ctx,
            "spectrum3d-degeneracy",
            model=model,
            e_max=e_max,
            k=k,
            q=q,
            R=radius,
            format=fmt,
            out=out,
        )
        if cfg.model == "box":
            groups = box_degeneracy_scan(cfg.e_max, cfg.k, cfg.q)
        elif cfg.model == "cyl":
            groups = cyl_degeneracy_scan(cfg.e_max, cfg.k, cfg.q, cfg.R)
        else:
            raise InvalidParam("spectrum3d-degeneracy needs --model box or cyl")
        if cfg.format == "csv":
            rows = [
                (g.group_id, g.kind, g.key, g.E, ";".join(",".join(map(str, m)) for m in g.members))
                for g in groups
            ]
            text = render_csv(GROUP_HEADER, rows)
        else:
            payload = {
                "tool_version": __version__,
                "command": "spectrum3d-degeneracy",
                "params": cfg.params("model", "e_max", "k", "q", "R"),
                "groups": [g.model_dump() for g in groups],
            }
            text = render_json(payload)
        emit(text, cfg.out)
