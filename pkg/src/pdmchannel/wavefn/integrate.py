"""Inner products on the strip by Gauss-Legendre quadrature after t = tanh qx."""

from __future__ import annotations

import math
from collections.abc import Callable, Sequence
from dataclasses import dataclass
from functools import lru_cache
from typing import Any

import numpy as np
import structlog

from pdmchannel.errors import NonConvergent
from pdmchannel.numerics.quadrature import gauss_legendre

log = structlog.get_logger(__name__)

Integrand = Callable[..., Any]


@dataclass(frozen=True)
class IntegralEstimate:
    """Value on the finer grid and |fine - coarse| as error estimate."""

    value: float
    error: float


@lru_cache(maxsize=32)
def _line_nodes(q: float, nodes: int) -> tuple[np.ndarray, np.ndarray]:
    rule = gauss_legendre(nodes).remap(0.0, 1.0)
    t = rule.nodes
    return np.arctanh(t) / q, rule.weights / (q * (1.0 - t**2))


@lru_cache(maxsize=32)
def strip_grid(q: float, t_nodes: int, y_nodes: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Tensor grid (x, y, weight) covering 0 < x < inf, |y| < pi/(2q)."""
    x, wx = _line_nodes(q, t_nodes)
    half = math.pi / (2.0 * q)
    ry = gauss_legendre(y_nodes).remap(-half, half)
    xx, yy = np.meshgrid(x, ry.nodes, indexing="ij")
    w = np.outer(wx, ry.weights)
    for arr in (xx, yy, w):
        arr.setflags(write=False)
    return xx, yy, w


def _check(
    value: float, coarse: float, magnitude: float, rel_tol: float, what: str
) -> IntegralEstimate:
    error = abs(value - coarse)
    scale = max(abs(value), magnitude)
    log.debug("quadrature_doubling", what=what, value=value, error=error)
    if error > rel_tol * scale:
        raise NonConvergent(
            f"{what}: node doubling changed the integral by {error:.3e} (scale {scale:.3e})"
        )
    return IntegralEstimate(value=value, error=error)


def integrate_line(
    fn: Integrand, *, q: float, nodes: int = 96, rel_tol: float = 1e-8
) -> IntegralEstimate:
    """int_0^inf fn(x) dx."""
    xc, wc = _line_nodes(q, nodes)
    xf, wf = _line_nodes(q, 2 * nodes)
    vc = np.asarray(fn(xc), dtype=float)
    vf = np.asarray(fn(xf), dtype=float)
    fine = float(np.dot(wf, vf))
    return _check(fine, float(np.dot(wc, vc)), float(np.dot(wf, np.abs(vf))), rel_tol, "line")


def integrate_strip(
    f: Integrand,
    g: Integrand | None = None,
    *,
    q: float,
    t_nodes: int = 96,
    y_nodes: int = 64,
    rel_tol: float = 1e-8,
) -> IntegralEstimate:
    """int int_D f g dx dy (or int int_D f when g is None).

    The integrand must decay at least like sech^2 qx. Raises NonConvergent when doubling
    both node counts moves the result by more than ``rel_tol`` relative to
    max(|I|, int |f g|).
    """
    values = inner_products([f], [g] if g is not None else None, q=q, t_nodes=t_nodes,
                            y_nodes=y_nodes, rel_tol=rel_tol)
    return IntegralEstimate(value=float(values.value[0, 0]), error=float(values.error[0, 0]))


@dataclass(frozen=True)
class MatrixEstimate:
    value: np.ndarray
    error: np.ndarray


def _samples(fields: Sequence[Integrand], xx: np.ndarray, yy: np.ndarray) -> list[np.ndarray]:
    return [np.asarray(f(xx, yy), dtype=float) for f in fields]


def inner_products(
    left: Sequence[Integrand],
    right: Sequence[Integrand] | None = None,
    *,
    q: float,
    t_nodes: int = 96,
    y_nodes: int = 64,
    rel_tol: float = 1e-8,
) -> MatrixEstimate:
    """Matrix of <left_i, right_j> on the strip; each field is sampled once per grid.

    With ``right`` omitted the integrals are of ``left_i`` alone (a column).
    """
    coarse_grid = strip_grid(q, t_nodes, y_nodes)
    fine_grid = strip_grid(q, 2 * t_nodes, 2 * y_nodes)
    out = []
    for xx, yy, w in (coarse_grid, fine_grid):
        ls = _samples(left, xx, yy)
        rs = _samples(right, xx, yy) if right is not None else [np.ones_like(w)]
        value = np.array([[float(np.sum(w * a * b)) for b in rs] for a in ls])
        magnitude = np.array([[float(np.sum(w * np.abs(a * b))) for b in rs] for a in ls])
        out.append((value, magnitude))
    (coarse, _), (fine, magnitude) = out
    error = np.abs(fine - coarse)
    scale = np.maximum(np.abs(fine), magnitude)
    log.debug("quadrature_doubling", what="strip", shape=fine.shape, max_error=float(error.max()))
    bad = error > rel_tol * scale
    if np.any(bad):
        i, j = map(int, np.argwhere(bad)[0])
        raise NonConvergent(
            f"strip integral ({i},{j}): node doubling changed it by {error[i, j]:.3e} "
            f"(scale {scale[i, j]:.3e})"
        )
    return MatrixEstimate(value=fine, error=error)
