"""Parallelepipedal channel 0 < x, |y| < pi/(2q), |z| < pi/(2q)."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import structlog
import sympy

from pdmchannel.algebra.coeffring import Y
from pdmchannel.errors import InvalidParam
from pdmchannel.model3d.channel import (
    channel_energy,
    channel_factor,
    channel_norm,
    channel_norm_quadrature,
)
from pdmchannel.model3d.operators import BOX_COORDS, Z, box_operators, eigen_residual_3d
from pdmchannel.models.spectrum import BoxState
from pdmchannel.wavefn.fields import SmoothField, check_params, chi_l

log = structlog.get_logger(__name__)

NORM_TOL = 1e-10
BOUNDARY_TOL = 1e-12


def box_delta_sq(l: int, m: int) -> int:
    """(l + 1)^2 + (m + 1)^2, exact."""
    if l < 0 or m < 0:
        raise InvalidParam(f"need l, m >= 0, got ({l}, {m})")
    return (l + 1) ** 2 + (m + 1) ** 2


def box_state(n: int, l: int, m: int, k: float, q: float) -> BoxState:
    check_params(k, q)
    if n < 0:
        raise InvalidParam(f"n must be >= 0, got {n}")
    d_sq = box_delta_sq(l, m)
    delta = math.sqrt(d_sq)
    return BoxState(
        n=n,
        l=l,
        m=m,
        delta_sq=d_sq,
        delta=delta,
        E=channel_energy(n, delta, k, q),
        norm=channel_norm(n, delta, k, q),
    )


def box_field(state: BoxState, k: float, q: float) -> SmoothField:
    """phi_{n,l,m}(x) chi_l(y) zeta_m(z), normalized on the channel."""
    delta = sympy.sqrt(state.delta_sq)
    zeta = chi_l(state.m, q).expr.subs(Y, Z)
    expr = channel_factor(state.n, delta, k, q) * chi_l(state.l, q).expr * zeta
    return SmoothField(expr, label=f"psi_{state.n},{state.l},{state.m}", coords=BOX_COORDS)


@dataclass(frozen=True)
class BoxCheck:
    state: BoxState
    norm_quadrature: float
    norm_rel_err: float
    boundary_max: float
    h_residual: float
    l_residual: float
    m_residual: float

    @property
    def passed(self) -> bool:
        return (
            self.norm_rel_err <= NORM_TOL
            and self.boundary_max <= BOUNDARY_TOL
            and max(self.h_residual, self.l_residual, self.m_residual) <= 1e-9
        )


def box_boundary_max(field: SmoothField, q: float, *, count: int = 16, seed: int = 0) -> float:
    """Largest |psi| sampled on x = 0 and on the four walls y, z = +-pi/(2q)."""
    rng = np.random.default_rng(seed)
    half = math.pi / (2.0 * q)
    u = rng.uniform(-half, half, size=count)
    v = rng.uniform(-half, half, size=count)
    x = rng.uniform(0.05 / q, 4.0 / q, size=count)
    samples = [field(np.zeros(count), u, v)]
    for wall in (-half, half):
        samples.append(field(x, np.full(count, wall), v))
        samples.append(field(x, u, np.full(count, wall)))
    return max(float(np.max(np.abs(s))) for s in samples)


def check_box_state(
    n: int, l: int, m: int, k: float, q: float, *, points: int = 20, seed: int = 0
) -> BoxCheck:
    state = box_state(n, l, m, k, q)
    quad = channel_norm_quadrature(n, state.delta, k, q)
    field = box_field(state, k, q)
    ops = box_operators(k, q)
    opts = {"points": points, "seed": seed}
    result = BoxCheck(
        state=state,
        norm_quadrature=quad,
        norm_rel_err=abs(quad - state.norm) / state.norm,
        boundary_max=box_boundary_max(field, q, seed=seed),
        h_residual=eigen_residual_3d(ops, "H", field, state.E, **opts),
        l_residual=eigen_residual_3d(ops, "L", field, (l + 1) ** 2 * q**2, **opts),
        m_residual=eigen_residual_3d(ops, "M", field, (m + 1) ** 2 * q**2, **opts),
    )
    log.debug(
        "box_state_checked",
        n=n,
        l=l,
        m=m,
        norm_rel_err=result.norm_rel_err,
        h_residual=result.h_residual,
    )
    return result
