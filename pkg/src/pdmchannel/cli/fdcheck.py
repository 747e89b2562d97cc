"""fdcheck: finite-difference eigenvalues of one channel against the closed form."""

from __future__ import annotations

from pathlib import Path

import typer

from pdmchannel.cli.common import emit, exit_codes, finish, run_config, settings_of
from pdmchannel.models.report import CheckResult, Report
from pdmchannel.numerics.fd import fd_cross_check
from pdmchannel.storage.reports import render_json

FD_TOL = 1e-3


def fdcheck(
    ctx: typer.Context,
    k: float | None = typer.Option(None, "--k", help="Barrier parameter k > 0"),
    q: float | None = typer.Option(None, "--q", help="Inverse length q > 0"),
    l: int | None = typer.Option(None, "--l", help="Planar channel l (delta = l + 1)"),
    delta: float | None = typer.Option(None, "--delta", help="Transverse delta >= 1"),
    x_max: float | None = typer.Option(None, "--x-max", help="Truncation point"),
    nodes: int | None = typer.Option(None, "--nodes", help="Coarse-grid nodes (fine: 2n+1)"),
    count: int = typer.Option(3, "--count", "-n", help="Number of levels"),
    out: Path | None = typer.Option(None, "--out", "-o", help="Report path (default: stdout)"),
) -> None:
    """Lowest levels on two grids, Richardson-extrapolated, within 0.1% of the closed form."""
    with exit_codes("fdcheck"):
        cfg = run_config(
            ctx,
            "fdcheck",
            k=k,
            q=q,
            l=l,
            delta=delta,
            x_max=x_max,
            nodes=nodes,
            count=count,
            out=out,
        )
        x_max_value = cfg.x_max or settings_of(ctx).fd_x_max_q / cfg.q
        result = fd_cross_check(
            k=cfg.k,
            q=cfg.q,
            l=cfg.l,
            delta=cfg.delta,
            x_max=x_max_value,
            nodes=cfg.nodes,
            count=cfg.count,
        )
        pairs = zip(result.extrapolated, result.analytic, strict=True)
        checks = [
            CheckResult.compare(f"fd_n{i}", value, exact, FD_TOL)
            for i, (value, exact) in enumerate(pairs)
        ]
        report = Report.build("fdcheck", cfg.params("k", "q", "l", "delta", "nodes"), checks)
        payload = report.model_dump(mode="json", by_alias=True)
        payload["x_max"] = x_max_value
        payload["coarse"] = result.coarse
        payload["fine"] = result.fine
        payload["convergence_order"] = result.convergence_order
        emit(render_json(payload), cfg.out)
    finish(report, report.ok)
