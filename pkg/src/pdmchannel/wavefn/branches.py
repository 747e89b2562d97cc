"""Boundary-condition checks and rejection of the unphysical separable solutions."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import structlog
import sympy
from scipy.integrate import cumulative_trapezoid, trapezoid

from pdmchannel.algebra.coeffring import X
from pdmchannel.errors import InvalidParam
from pdmchannel.wavefn.fields import SmoothField, check_params, chi_l, chibar_l, phi_expr

log = structlog.get_logger(__name__)

VANISH_TOL = 1e-12
VIOLATION_TOL = 1e-3
TAIL_RATIO_MAX = 1e-6


@dataclass(frozen=True)
class BoundaryReport:
    label: str
    physical: bool
    max_boundary: float
    sup_norm: float

    @property
    def vanishes(self) -> bool:
        return self.max_boundary <= VANISH_TOL * self.sup_norm

    @property
    def violates(self) -> bool:
        return self.max_boundary >= VIOLATION_TOL * self.sup_norm

    @property
    def consistent(self) -> bool:
        """Physical fields vanish on the boundary and unphysical ones clearly do not."""
        return self.vanishes if self.physical else self.violates


def check_boundary(field: SmoothField, q: float, *, samples: int = 100) -> BoundaryReport:
    """Sample the wall x = 0 and the edges y = +-pi/(2q)."""
    half = math.pi / (2.0 * q)
    x_far = 6.0 / q
    n_wall = samples // 2
    n_edge = samples - n_wall
    wall_y = np.linspace(-half, half, n_wall)
    edge_x = np.linspace(x_far / n_edge, x_far, n_edge)
    values = np.concatenate(
        [
            field(np.zeros_like(wall_y), wall_y),
            field(edge_x[: n_edge // 2], np.full(n_edge // 2, half)),
            field(edge_x[n_edge // 2 :], np.full(n_edge - n_edge // 2, -half)),
        ]
    )
    gx, gy = np.meshgrid(np.linspace(x_far / 80, x_far, 80), np.linspace(-half, half, 81))
    sup = float(np.max(np.abs(field(gx, gy))))
    report = BoundaryReport(
        label=field.label,
        physical=field.physical,
        max_boundary=float(np.max(np.abs(values))),
        sup_norm=sup,
    )
    log.debug("boundary_checked", field=field.label, ratio=report.max_boundary / sup)
    return report


@dataclass(frozen=True)
class SeparableBranch:
    x_solution: str
    y_solution: str
    boundary_ok: bool
    normalizable: bool
    tail_ratio: float

    @property
    def passes(self) -> bool:
        return self.boundary_ok and self.normalizable


def _x_solutions(l: int, k: float, q: float) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Grid, regular solution and its reduction-of-order partner u1 int ds/(cosh^2 u1^2)."""
    x_ref = 1.0 / q
    left = np.geomspace(1e-8 / q, x_ref, 3000)
    right = np.linspace(x_ref, 12.0 / q, 4000)
    xs = np.concatenate([left, right[1:]])
    u1 = sympy.lambdify(X, phi_expr(0, l + 1, k, q), modules="numpy")(xs)
    integrand = 1.0 / (np.cosh(q * xs) ** 2 * u1**2)
    i_ref = len(left) - 1
    acc = np.empty_like(xs)
    acc[i_ref:] = cumulative_trapezoid(integrand[i_ref:], xs[i_ref:], initial=0.0)
    acc[: i_ref + 1] = cumulative_trapezoid(
        integrand[: i_ref + 1][::-1], xs[: i_ref + 1][::-1], initial=0.0
    )[::-1]
    return xs, u1, u1 * acc


def _x_behaviour(xs: np.ndarray, u: np.ndarray, q: float) -> tuple[bool, bool, float]:
    split = 6.0 / q
    head = xs <= split
    head_norm = trapezoid(u[head] ** 2, xs[head])
    tail_norm = trapezoid(u[~head] ** 2, xs[~head])
    tail_ratio = float(tail_norm / head_norm)
    sup = float(np.max(np.abs(u)))
    wall_ok = abs(u[0]) <= 1e-2 * sup
    return wall_ok, tail_ratio < TAIL_RATIO_MAX, tail_ratio


def separable_branches(l: int, k: float, q: float) -> list[SeparableBranch]:
    """The four formal products (regular | irregular x-solution) x (chi | chibar) of channel l.

    Only the regular x chi product satisfies the boundary conditions and is normalizable.
    """
    check_params(k, q)
    if l < 0:
        raise InvalidParam(f"l must be >= 0, got {l}")
    xs, regular, irregular = _x_solutions(l, k, q)
    edges = np.array([-1.0, 1.0]) * math.pi / (2.0 * q)
    ones = np.ones_like(edges)
    y_ok = {
        "chi": float(np.max(np.abs(chi_l(l, q)(ones, edges)))) <= VANISH_TOL,
        "chibar": float(np.max(np.abs(chibar_l(l, q)(ones, edges)))) <= VANISH_TOL,
    }
    out = []
    for x_name, u in (("regular", regular), ("irregular", irregular)):
        wall_ok, normalizable, tail_ratio = _x_behaviour(xs, u, q)
        for y_name in ("chi", "chibar"):
            out.append(
                SeparableBranch(
                    x_solution=x_name,
                    y_solution=y_name,
                    boundary_ok=wall_ok and y_ok[y_name],
                    normalizable=normalizable,
                    tail_ratio=tail_ratio,
                )
            )
    log.info(
        "separable_branches",
        l=l,
        k=k,
        passing=[(b.x_solution, b.y_solution) for b in out if b.passes],
    )
    return out


@dataclass(frozen=True)
class PyCheck:
    """Edge values of the real and imaginary parts of exp(i m q y)."""

    m: int
    real_edge: float
    imag_edge: float

    @property
    def real_ok(self) -> bool:
        return self.real_edge <= VANISH_TOL

    @property
    def imag_ok(self) -> bool:
        return self.imag_edge <= VANISH_TOL

    @property
    def complex_ok(self) -> bool:
        return self.real_ok and self.imag_ok

    @property
    def matching_chi(self) -> int:
        """l of the chi_l that the surviving part coincides with."""
        return abs(self.m) - 1


def py_eigenfunction_check(m: int, q: float = 1.0) -> PyCheck:
    """exp(i m q y) never vanishes on both edges; only one part survives, and that part is chi."""
    if m == 0:
        raise InvalidParam("m = 0 gives a constant, not a p_y eigenstate on the strip")
    if not q > 0:
        raise InvalidParam(f"q must be positive, got {q}")
    half = math.pi / (2.0 * q)
    edges = (half, -half)
    real_edge = max(abs(math.cos(m * q * y)) for y in edges)
    imag_edge = max(abs(math.sin(m * q * y)) for y in edges)
    return PyCheck(m=m, real_edge=real_edge, imag_edge=imag_edge)
