"""export-field: sample one planar field on a grid and write x, y, value as CSV."""

from __future__ import annotations

import math
from pathlib import Path

import numpy as np
import typer

from pdmchannel.cli.common import emit, exit_codes, run_config
from pdmchannel.errors import InvalidParam
from pdmchannel.storage.reports import field_rows, render_csv
from pdmchannel.wavefn import chi_l, chibar_l, omega_zero_mode, psi_nl, second_basis
from pdmchannel.wavefn.fields import SmoothField

X_EXTENT_Q = 6.0


def _ints(text: str, count: int, label: str) -> list[int]:
    try:
        values = [int(v) for v in text.split(",")]
    except ValueError as e:
        raise InvalidParam(f"bad state {label!r}") from e
    if len(values) != count:
        raise InvalidParam(f"state {label!r} needs {count} integer(s)")
    return values


def resolve_state(label: str, k: float, q: float) -> SmoothField:
    """psi:n,l | Psi:N,nu | omega:s | omegabar:s | chi:l | chibar:l."""
    kind, _, args = label.partition(":")
    if kind == "psi":
        n, l = _ints(args, 2, label)
        return psi_nl(n, l, k, q)
    if kind == "Psi":
        N, nu = _ints(args, 2, label)
        if not 0 <= nu <= N or (N - nu) % 2:
            raise InvalidParam(f"need 0 <= nu <= N with nu = N mod 2, got {label!r}")
        return next(st.field for st in second_basis(N, k, q) if st.nu == nu)
    if kind in ("omega", "omegabar"):
        (s,) = _ints(args, 1, label)
        return omega_zero_mode("eta" if kind == "omega" else "etabar", s, k, q)
    if kind == "chi":
        (l,) = _ints(args, 1, label)
        return chi_l(l, q)
    if kind == "chibar":
        (l,) = _ints(args, 1, label)
        return chibar_l(l, q)
    raise InvalidParam(f"unknown state kind {kind!r}")


def field_grid(field: SmoothField, q: float, nx: int, ny: int) -> list[tuple]:
    """nx x ny samples on (0, 6/q] x [-pi/(2q), pi/(2q)], x-major."""
    half = math.pi / (2.0 * q)
    xs = np.linspace(X_EXTENT_Q / (q * nx), X_EXTENT_Q / q, nx)
    ys = np.linspace(-half, half, ny)
    gx, gy = np.meshgrid(xs, ys, indexing="ij")
    values = field(gx, gy)
    return field_rows(gx.ravel(), gy.ravel(), values.ravel())


def export_field(
    ctx: typer.Context,
    state: str = typer.Option(..., "--state", help="psi:n,l | Psi:N,nu | omega:s | chi:l | ..."),
    grid: str = typer.Option("50x50", "--grid", help="NxM samples in x and y"),
    k: float | None = typer.Option(None, "--k", help="Barrier parameter k > 0"),
    q: float | None = typer.Option(None, "--q", help="Inverse length q > 0"),
    out: Path | None = typer.Option(None, "--out", "-o", help="CSV path (default: stdout)"),
) -> None:
    """Write field samples as CSV with columns x, y, value."""
    with exit_codes("export-field"):
        cfg = run_config(ctx, "export-field", state=state, grid=grid, k=k, q=q, out=out)
        field = resolve_state(state, cfg.k, cfg.q)
        nx, ny = cfg.grid_shape
        rows = field_grid(field, cfg.q, nx, ny)
        emit(render_csv(("x", "y", "value"), rows), cfg.out)
