"""matelem: analytic and quadrature blocks of L on one energy level."""

from __future__ import annotations

from pathlib import Path

import typer

from pdmchannel.cli.common import emit, exit_codes, finish, run_config
from pdmchannel.models.report import Report
from pdmchannel.quadalg.matrix_elements import verify_l_matrix
from pdmchannel.storage.reports import render_json


def matelem(
    ctx: typer.Context,
    level: int = typer.Option(..., "--N", help="Energy level N = 2n + l"),
    k: float | None = typer.Option(None, "--k", help="Barrier parameter k > 0"),
    q: float | None = typer.Option(None, "--q", help="Inverse length q > 0"),
    out: Path | None = typer.Option(None, "--out", "-o", help="Report path (default: stdout)"),
) -> None:
    """Compare <Psi_{N,N-nu'}, L Psi_{N,N-nu}> by quadrature with the closed form."""
    with exit_codes("matelem"):
        cfg = run_config(ctx, "matelem", N=level, k=k, q=q, out=out)
        result = verify_l_matrix(
            cfg.N, cfg.k, cfg.q, strict=True, t_nodes=cfg.t_nodes, y_nodes=cfg.y_nodes
        )
        report = Report.build("matelem", cfg.params("N", "k", "q"), result.checks())
        payload = report.model_dump(mode="json", by_alias=True)
        payload["nus"] = list(result.block.nus)
        payload["analytic"] = result.block.matrix().tolist()
        payload["quadrature"] = result.quadrature.tolist()
        payload["induced_phases"] = list(result.induced_phases)
        emit(render_json(payload), cfg.out)
    finish(report, report.ok)
