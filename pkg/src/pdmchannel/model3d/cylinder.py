"""Cylindrical channel 0 < x, rho < R, with Bessel radial factors."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import structlog
import sympy

from pdmchannel.errors import InvalidParam
from pdmchannel.model3d.channel import channel_energy, channel_factor, channel_norm
from pdmchannel.model3d.operators import (
    CYL_COORDS,
    PHI,
    RHO,
    cyl_operators,
    eigen_residual_3d,
)
from pdmchannel.models.spectrum import CylState
from pdmchannel.numerics.quadrature import gauss_legendre
from pdmchannel.numerics.special import bessel_J, bessel_J_array, bessel_zero
from pdmchannel.wavefn.fields import SmoothField, check_params

log = structlog.get_logger(__name__)

RADIAL_NODES = 64
NORM_TOL = 1e-10
ORTHO_TOL = 1e-9


def radial_norm(m: int, s: int, R: float) -> float:
    """sqrt(2) / (R |J_{|m|+1}(j_{|m|,s})|)."""
    j = bessel_zero(abs(m), s)
    return math.sqrt(2.0) / (R * abs(bessel_J(abs(m) + 1, j)))


def cyl_state(n: int, m: int, s: int, k: float, q: float, R: float) -> CylState:
    check_params(k, q)
    if n < 0:
        raise InvalidParam(f"n must be >= 0, got {n}")
    if s < 1:
        raise InvalidParam(f"s must be >= 1, got {s}")
    if not R > 0:
        raise InvalidParam(f"R must be positive, got {R}")
    j = bessel_zero(abs(m), s)
    delta = j / (q * R)
    radial = radial_norm(m, s, R)
    return CylState(
        n=n,
        m=m,
        s=s,
        R=R,
        j_ms=j,
        delta=delta,
        E=channel_energy(n, delta, k, q),
        radial_norm=radial,
        norm=channel_norm(n, delta, k, q) * radial / math.sqrt(2.0 * math.pi),
    )


def cyl_field(state: CylState, k: float, q: float) -> SmoothField:
    """phi(x) N J_{|m|}(kappa rho) e^{i m phi} / sqrt(2 pi); complex valued."""
    kappa = state.j_ms / state.R
    radial = sympy.Float(state.radial_norm, 17) * sympy.besselj(
        abs(state.m), sympy.Float(kappa, 17) * RHO
    )
    angular = sympy.exp(sympy.I * state.m * PHI) / sympy.sqrt(2 * sympy.pi)
    expr = channel_factor(state.n, sympy.Float(state.delta, 17), k, q) * radial * angular
    return SmoothField(
        expr,
        label=f"psi_{state.n},{state.m},{state.s}",
        coords=CYL_COORDS,
        complex_valued=True,
    )


def angular_periodic(m: int) -> bool:
    """zeta_m(2 pi) == zeta_m(0), decided exactly."""
    zeta = sympy.exp(sympy.I * m * PHI)
    return sympy.simplify(zeta.subs(PHI, 2 * sympy.pi) - zeta.subs(PHI, 0)) == 0


def radial_overlap(m: int, s: int, s2: int, R: float, *, nodes: int = RADIAL_NODES) -> float:
    """int_0^R chi_{|m|,s} chi_{|m|,s2} rho d rho by Gauss-Legendre."""
    rule = gauss_legendre(nodes).remap(0.0, R)
    rho = rule.nodes
    values = []
    for idx in (s, s2):
        j = bessel_zero(abs(m), idx)
        values.append(radial_norm(m, idx, R) * bessel_J_array(abs(m), j * rho / R))
    return rule.integrate(values[0] * values[1] * rho)


@dataclass(frozen=True)
class CylCheck:
    state: CylState
    radial_norm_err: float
    orthogonality_max: float
    wall_max: float
    periodic: bool
    h_residual: float
    l_residual: float
    m_residual: float

    @property
    def passed(self) -> bool:
        return (
            self.radial_norm_err <= NORM_TOL
            and self.orthogonality_max <= ORTHO_TOL
            and self.wall_max <= 1e-12
            and self.periodic
            and max(self.h_residual, self.l_residual, self.m_residual) <= 1e-9
        )


def cyl_wall_max(
    field: SmoothField, state: CylState, q: float, *, count: int = 16, seed: int = 0
) -> float:
    """Largest |psi| sampled on the mantle rho = R (0.05/q < x < 4/q) and on the end x = 0."""
    rng = np.random.default_rng(seed)
    x = rng.uniform(0.05 / q, 4.0 / q, size=count)
    rho = rng.uniform(0.0, state.R, size=count)
    phi = rng.uniform(0.0, 2.0 * np.pi, size=count)
    mantle = field(x, np.full(count, state.R), phi)
    end = field(np.zeros(count), rho, phi)
    return max(float(np.max(np.abs(mantle))), float(np.max(np.abs(end))))


def check_cyl_state(
    n: int,
    m: int,
    s: int,
    k: float,
    q: float,
    R: float,
    *,
    s_max: int = 3,
    points: int = 20,
    seed: int = 0,
) -> CylCheck:
    state = cyl_state(n, m, s, k, q, R)
    field = cyl_field(state, k, q)
    ops = cyl_operators(k, q)
    kappa = state.j_ms / R
    norm_err = abs(radial_overlap(m, s, s, R) - 1.0)
    ortho = max(
        (abs(radial_overlap(m, s, other, R)) for other in range(1, s_max + 1) if other != s),
        default=0.0,
    )
    opts = {"R": R, "points": points, "seed": seed}
    result = CylCheck(
        state=state,
        radial_norm_err=norm_err,
        orthogonality_max=ortho,
        wall_max=cyl_wall_max(field, state, q, seed=seed),
        periodic=angular_periodic(m),
        h_residual=eigen_residual_3d(ops, "H", field, state.E, **opts),
        l_residual=eigen_residual_3d(ops, "L", field, kappa**2, **opts),
        m_residual=eigen_residual_3d(ops, "M", field, float(m), **opts),
    )
    log.debug(
        "cyl_state_checked",
        n=n,
        m=m,
        s=s,
        j_ms=state.j_ms,
        radial_norm_err=norm_err,
        h_residual=result.h_residual,
    )
    return result
