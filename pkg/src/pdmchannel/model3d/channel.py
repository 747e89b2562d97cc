"""The x-channel shared by both three-dimensional models.

After separating the transverse eigenvalue delta^2 q^2 the x-equation is the planar one
with l + 1 replaced by a real delta, so the same phi machinery applies.
"""

from __future__ import annotations

import math
from typing import Any

import numpy as np
import sympy

from pdmchannel.errors import InvalidParam
from pdmchannel.numerics.quadrature import gauss_legendre
from pdmchannel.numerics.special import jacobi_P, log_gamma
from pdmchannel.wavefn.fields import check_params, phi_expr

X_SPAN_Q = 40.0
X_NODES = 400


def channel_energy(n: int, delta: float, k: float, q: float) -> float:
    """q^2 (2n + 1 + delta)(2n + 2k + delta)."""
    return q**2 * (2 * n + 1 + delta) * (2 * n + 2 * k + delta)


def channel_norm(n: int, delta: float, k: float, q: float) -> float:
    """Closed-form normalization of the x-factor.

    N^2 = 2q (2n + k + 1/2 + delta) n! Gamma(n + k + 1/2 + delta)
          / (Gamma(n + 1 + delta) Gamma(n + k + 1/2)).
    """
    check_params(k, q)
    if n < 0:
        raise InvalidParam(f"n must be >= 0, got {n}")
    if not delta > 0:
        raise InvalidParam(f"delta must be positive, got {delta}")
    log_sq = (
        math.log(2 * q * (2 * n + k + 0.5 + delta))
        + log_gamma(n + 1.0)
        + log_gamma(n + k + 0.5 + delta)
        - log_gamma(n + 1.0 + delta)
        - log_gamma(n + k + 0.5)
    )
    return math.exp(0.5 * log_sq)


def channel_factor_values(n: int, delta: float, k: float, q: float, x: Any) -> np.ndarray:
    """Unnormalized x-factor at x, through the Jacobi recurrence."""
    x = np.asarray(x, dtype=float)
    t = np.tanh(q * x)
    poly = jacobi_P(n, k - 0.5, delta, 1.0 - 2.0 * t**2)
    return t**k * np.cosh(q * x) ** (-(delta + 1.0)) * poly


def channel_norm_quadrature(
    n: int, delta: float, k: float, q: float, *, nodes: int = X_NODES, span_q: float = X_SPAN_Q
) -> float:
    """1 / sqrt(int phi^2 dx) by Gauss-Legendre on (0, span_q / q)."""
    check_params(k, q)
    rule = gauss_legendre(nodes).remap(0.0, span_q / q)
    phi = channel_factor_values(n, delta, k, q, rule.nodes)
    return 1.0 / math.sqrt(rule.integrate(phi**2))


def channel_factor(n: int, delta: Any, k: float, q: float) -> sympy.Expr:
    """Normalized x-factor as a sympy expression in x; delta may be an exact surd."""
    norm = channel_norm(n, float(delta), k, q)
    return sympy.Float(norm, 17) * phi_expr(n, delta, k, q)
