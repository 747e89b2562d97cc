"""verify: run one scope of the verification suites and write a JSON report."""

from __future__ import annotations

from pathlib import Path

import typer

from pdmchannel.cli.common import emit, exit_codes, finish, run_config, settings_of
from pdmchannel.models.report import Report
from pdmchannel.storage.reports import render_json
from pdmchannel.verification.runner import SuiteContext, run_scope


def verify(
    ctx: typer.Context,
    scope: str = typer.Option(
        "all",
        "--scope",
        "-s",
        help="algebra2d | quadratic | classical | wavefn | numerics | model3d | all",
    ),
    k: float | None = typer.Option(None, "--k", help="Barrier parameter k > 0"),
    q: float | None = typer.Option(None, "--q", help="Inverse length q > 0"),
    radius: float | None = typer.Option(None, "--R", help="Cylinder radius"),
    out: Path | None = typer.Option(None, "--out", "-o", help="Report path (default: stdout)"),
) -> None:
    """Check every identity of a scope; exit 0 iff all of them hold."""
    with exit_codes("verify"):
        cfg = run_config(ctx, "verify", scope=scope, k=k, q=q, R=radius, out=out)
        settings = settings_of(ctx)
        suite_ctx = SuiteContext(
            k=cfg.k,
            q=cfg.q,
            R=cfg.R,
            t_nodes=cfg.t_nodes,
            y_nodes=cfg.y_nodes,
            rel_tol=settings.quad_rel_tol,
            n_max=settings.verify_n_max,
            k_values=tuple(settings.verify_k_values),
            q_values=tuple(settings.verify_q_values),
            residual_levels=settings.verify_residual_levels,
            fd_nodes=cfg.nodes,
            seed=settings.seed,
        )
        checks = run_scope(cfg.scope, suite_ctx)
        report = Report.build("verify", cfg.params("scope", "k", "q", "R"), checks)
        emit(render_json(report), cfg.out)
    finish(report, report.ok)
