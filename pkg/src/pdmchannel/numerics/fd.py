"""Finite-difference cross-check of the separated x-problem.

After separating the transverse eigenvalue delta'^2 q^2, the channel equation is

    -(c u')' + W u = E u,   c = cosh^2 qx,
    W = delta'^2 q^2 cosh^2 qx - q^2 cosh^2 qx + q^2 k(k-1) csch^2 qx,

on (0, X_max) with Dirichlet ends. delta' = l + 1 for the planar model and delta for the
three-dimensional channels. The conservative three-point scheme uses c at the cell
midpoints, so the matrix is symmetric tridiagonal.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
import structlog
from scipy.linalg import eigh_tridiagonal

from pdmchannel.errors import InvalidParam, TruncationTooSmall

log = structlog.get_logger(__name__)

MIN_NODES = 200
TRUNCATION_SHIFT_TOL = 1e-4
TAIL_TOL = 1e-8


def channel_energies(delta: float, k: float, q: float, count: int = 3) -> list[float]:
    """Closed-form channel energies q^2 (2n+1+delta)(2n+2k+delta), n = 0..count-1."""
    return [q**2 * (2 * n + 1 + delta) * (2 * n + 2 * k + delta) for n in range(count)]


@dataclass(frozen=True)
class FDOperator1D:
    """Symmetric tridiagonal discretization on the interior nodes x_i = i h."""

    grid: np.ndarray
    delta: float
    k: float
    q: float
    diagonal: np.ndarray = field(repr=False)
    off_diagonal: np.ndarray = field(repr=False)

    @classmethod
    def build(cls, delta: float, k: float, q: float, x_max: float, nodes: int) -> FDOperator1D:
        if nodes < 2:
            raise InvalidParam(f"need at least two interior nodes, got {nodes}")
        if q * x_max > 300.0:
            raise InvalidParam(f"q * x_max = {q * x_max} overflows cosh^2")
        h = x_max / (nodes + 1)
        x = h * np.arange(1, nodes + 1)
        mid = h * (np.arange(0, nodes + 1) + 0.5)
        c_mid = np.cosh(q * mid) ** 2
        cosh2 = np.cosh(q * x) ** 2
        w = (delta**2 - 1.0) * q**2 * cosh2 + q**2 * k * (k - 1) / np.sinh(q * x) ** 2
        diag = (c_mid[:-1] + c_mid[1:]) / h**2 + w
        off = -c_mid[1:-1] / h**2
        return cls(grid=x, delta=delta, k=k, q=q, diagonal=diag, off_diagonal=off)

    @property
    def step(self) -> float:
        return float(self.grid[1] - self.grid[0])

    def lowest(self, count: int = 3) -> np.ndarray:
        """Lowest ``count`` eigenvalues by Sturm bisection."""
        values = eigh_tridiagonal(
            self.diagonal,
            self.off_diagonal,
            eigvals_only=True,
            select="i",
            select_range=(0, count - 1),
            lapack_driver="stebz",
            tol=1e-300,
        )
        return np.sort(values)


@dataclass(frozen=True)
class FDCheckResult:
    delta: float
    k: float
    q: float
    x_max: float
    nodes: int
    coarse: list[float]
    fine: list[float]
    extrapolated: list[float]
    analytic: list[float]

    @property
    def rel_errors(self) -> list[float]:
        return [abs(e - a) / abs(a) for e, a in zip(self.extrapolated, self.analytic, strict=True)]

    @property
    def fine_nodes(self) -> int:
        return 2 * self.nodes + 1

    @property
    def convergence_order(self) -> float:
        """log2 of the coarse/fine error ratio for the lowest level."""
        a = self.analytic[0]
        return math.log2(abs(self.coarse[0] - a) / abs(self.fine[0] - a))


def fd_cross_check(
    *,
    k: float,
    q: float,
    l: int | None = None,
    delta: float | None = None,
    x_max: float | None = None,
    nodes: int = 399,
    count: int = 3,
) -> FDCheckResult:
    """Lowest eigenvalues of one channel on two grids, with Richardson extrapolation.

    Exactly one of ``l`` (planar channel, delta' = l + 1) or ``delta`` must be given.
    ``nodes`` counts the coarse grid; the fine grid halves the step with 2 * nodes + 1.
    ``x_max`` defaults to 12/q. Raises TruncationTooSmall when sech^2(q x_max) is not
    negligible or when doubling x_max at fixed step moves the levels.
    """
    if (l is None) == (delta is None):
        raise InvalidParam("give exactly one of l or delta")
    if l is not None:
        if l < 0:
            raise InvalidParam(f"l must be >= 0, got {l}")
        delta = float(l + 1)
    if delta < 1.0:
        raise InvalidParam(f"transverse delta must be >= 1, got {delta}")
    if k <= 0 or q <= 0:
        raise InvalidParam(f"need k > 0 and q > 0, got k={k}, q={q}")
    if nodes < MIN_NODES:
        raise InvalidParam(f"nodes must be >= {MIN_NODES}, got {nodes}")
    if x_max is None:
        x_max = 12.0 / q
    if 1.0 / math.cosh(q * x_max) ** 2 >= TAIL_TOL:
        raise TruncationTooSmall(f"sech^2(q x_max) = {1.0 / math.cosh(q * x_max) ** 2:.3e}")

    coarse = FDOperator1D.build(delta, k, q, x_max, nodes).lowest(count)
    fine = FDOperator1D.build(delta, k, q, x_max, 2 * nodes + 1).lowest(count)
    extrapolated = (4.0 * fine - coarse) / 3.0

    # same step, twice the length
    doubled = FDOperator1D.build(delta, k, q, 2 * x_max, 2 * nodes + 1).lowest(count)
    shift = float(np.max(np.abs(doubled - coarse) / np.abs(coarse)))
    if shift > TRUNCATION_SHIFT_TOL:
        raise TruncationTooSmall(f"doubling x_max moved the levels by {shift:.3e} (relative)")

    result = FDCheckResult(
        delta=float(delta),
        k=k,
        q=q,
        x_max=x_max,
        nodes=nodes,
        coarse=coarse.tolist(),
        fine=fine.tolist(),
        extrapolated=extrapolated.tolist(),
        analytic=channel_energies(delta, k, q, count),
    )
    log.info(
        "fd_eigenvalues",
        delta=result.delta,
        k=k,
        q=q,
        extrapolated=result.extrapolated,
        max_rel_err=max(result.rel_errors),
        truncation_shift=shift,
    )
    return result
