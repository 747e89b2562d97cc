"""Gauss-Legendre rules."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from pdmchannel.errors import InvalidParam

_MAX_NODES = 512


@dataclass(frozen=True)
class QuadratureRule:
    """Nodes and weights on (lo, hi)."""

    nodes: np.ndarray
    weights: np.ndarray
    interval: tuple[float, float] = (-1.0, 1.0)

    def remap(self, lo: float, hi: float) -> QuadratureRule:
        """Affine map of the rule onto (lo, hi)."""
        a, b = self.interval
        scale = (hi - lo) / (b - a)
        nodes = lo + (self.nodes - a) * scale
        return QuadratureRule(nodes=nodes, weights=self.weights * scale, interval=(lo, hi))

    def integrate(self, values: np.ndarray) -> float:
        return float(np.dot(self.weights, values))

    def __len__(self) -> int:
        return len(self.nodes)


def _legendre_with_derivative(n: int, x: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    p0 = np.ones_like(x)
    p1 = x.copy()
    for j in range(2, n + 1):
        p0, p1 = p1, ((2 * j - 1) * x * p1 - (j - 1) * p0) / j
    dp = n * (x * p1 - p0) / (x**2 - 1)
    return p1, dp


@lru_cache(maxsize=64)
def _rule(n: int) -> tuple[np.ndarray, np.ndarray]:
    if n == 1:
        return np.array([0.0]), np.array([2.0])
    i = np.arange(1, n + 1)
    x = np.cos(np.pi * (i - 0.25) / (n + 0.5))
    for _ in range(100):
        p, dp = _legendre_with_derivative(n, x)
        dx = p / dp
        x = x - dx
        if np.max(np.abs(dx)) < 1e-16:
            break
    _, dp = _legendre_with_derivative(n, x)
    w = 2.0 / ((1.0 - x**2) * dp**2)
    order = np.argsort(x)
    x, w = x[order], w[order]
    # enforce exact symmetry
    x = 0.5 * (x - x[::-1])
    w = 0.5 * (w + w[::-1])
    x.setflags(write=False)
    w.setflags(write=False)
    return x, w


def gauss_legendre(n: int) -> QuadratureRule:
    """n-point Gauss-Legendre rule on (-1, 1), Newton iteration on the Legendre recurrence."""
    if not 1 <= n <= _MAX_NODES:
        raise InvalidParam(f"node count must be in 1..{_MAX_NODES}, got {n}")
    x, w = _rule(n)
    return QuadratureRule(nodes=x, weights=w)
