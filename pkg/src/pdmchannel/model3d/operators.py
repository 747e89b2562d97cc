"""Hamiltonian and integrals of the three-dimensional channels, acting on sympy fields."""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass
from typing import Any

import numpy as np
import sympy

from pdmchannel.algebra.coeffring import X, Y
from pdmchannel.wavefn.fields import SmoothField, exact, interior_points

Z = sympy.Symbol("z", real=True)
RHO = sympy.Symbol("rho", positive=True)
PHI = sympy.Symbol("varphi", real=True)

BOX_COORDS = (X, Y, Z)
CYL_COORDS = (X, RHO, PHI)

Operator = Callable[[sympy.Expr], sympy.Expr]


def _box_transverse(f: sympy.Expr) -> sympy.Expr:
    return -(sympy.diff(f, Y, 2) + sympy.diff(f, Z, 2))


def _cyl_transverse(f: sympy.Expr) -> sympy.Expr:
    return -(sympy.diff(f, RHO, 2) + sympy.diff(f, RHO) / RHO + sympy.diff(f, PHI, 2) / RHO**2)


@dataclass(frozen=True)
class ChannelOperators:
    """H = -d_x cosh^2 d_x + cosh^2 T - q^2 cosh^2 + q^2 k(k-1) csch^2, T transverse."""

    model: str
    k: Any
    q: Any
    coords: tuple[sympy.Symbol, ...]
    transverse: Operator
    first: Operator
    second: Operator

    def H(self, f: sympy.Expr) -> sympy.Expr:
        qe, ke = exact(self.q), exact(self.k)
        c = sympy.cosh(qe * X) ** 2
        return (
            -sympy.diff(c * sympy.diff(f, X), X)
            + c * self.transverse(f)
            - qe**2 * c * f
            + qe**2 * ke * (ke - 1) * f / sympy.sinh(qe * X) ** 2
        )

    def L(self, f: sympy.Expr) -> sympy.Expr:
        return self.first(f)

    def M(self, f: sympy.Expr) -> sympy.Expr:
        return self.second(f)

    def get(self, name: str) -> Operator:
        return {"H": self.H, "L": self.L, "M": self.M}[name]


def box_operators(k: Any, q: Any) -> ChannelOperators:
    """L = -d_y^2 and M = -d_z^2; H carries their sum."""
    return ChannelOperators(
        model="box",
        k=k,
        q=q,
        coords=BOX_COORDS,
        transverse=_box_transverse,
        first=lambda f: -sympy.diff(f, Y, 2),
        second=lambda f: -sympy.diff(f, Z, 2),
    )


def cyl_operators(k: Any, q: Any) -> ChannelOperators:
    """L is minus the polar Laplacian, M = -i d_phi."""
    return ChannelOperators(
        model="cyl",
        k=k,
        q=q,
        coords=CYL_COORDS,
        transverse=_cyl_transverse,
        first=_cyl_transverse,
        second=lambda f: -sympy.I * sympy.diff(f, PHI),
    )


def sample_points(
    model: str, q: float, *, R: float = 1.0, count: int = 20, seed: int = 0
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Random interior points of the box channel or the cylinder channel."""
    x, y = interior_points(q, count, seed)
    if model == "box":
        _, z = interior_points(q, count, seed + 1)
        return x, y, z
    rng = np.random.default_rng(seed + 1)
    rho = rng.uniform(0.05 * R, 0.95 * R, size=count)
    phi = rng.uniform(0.0, 2.0 * np.pi, size=count)
    return x, rho, phi


def operator_image(ops: ChannelOperators, name: str, field: SmoothField) -> SmoothField:
    return SmoothField(
        ops.get(name)(field.expr),
        label=f"{name} {field.label}",
        physical=field.physical,
        coords=field.coords,
        max_order=max(field.max_order - 2, 0),
        complex_valued=field.complex_valued or name == "M",
    )


def eigen_residual_3d(
    ops: ChannelOperators,
    name: str,
    field: SmoothField,
    value: float,
    *,
    R: float = 1.0,
    points: int = 20,
    seed: int = 0,
) -> float:
    """max |op f - value f| / (max(|value|, q^2) max |f|) at random interior points."""
    pts = sample_points(ops.model, float(ops.q), R=R, count=points, seed=seed)
    f = field(*pts)
    res = operator_image(ops, name, field)(*pts) - value * f
    scale = max(abs(value), float(ops.q) ** 2) * float(np.max(np.abs(f)))
    return float(np.max(np.abs(res))) / scale


def random_test_field(model: str, q: Any, *, terms: int = 3, seed: int = 0) -> SmoothField:
    """Seeded smooth field with no symmetry, for commutator checks."""
    rng = np.random.default_rng(seed)
    qe = exact(q)
    total = sympy.Integer(0)
    for _ in range(terms):
        c = sympy.Rational(int(rng.integers(1, 20)), int(rng.integers(1, 8)))
        a, b, p = (int(v) for v in rng.integers(1, 4, size=3))
        x_part = sympy.tanh(qe * X) ** (a + 1) / sympy.cosh(qe * X) ** b
        if model == "box":
            rest = sympy.cos(p * qe * Y + b) * sympy.sin(a * qe * Z + p)
        else:
            rest = RHO ** (a + 1) * sympy.exp(-b * RHO**2) * sympy.exp(sympy.I * p * PHI)
        total += c * x_part * rest
    coords = BOX_COORDS if model == "box" else CYL_COORDS
    return SmoothField(
        total, label=f"test_{model}_{seed}", coords=coords, complex_valued=model == "cyl"
    )


def commutator_residuals(
    ops: ChannelOperators, *, R: float = 1.0, fields: int = 3, points: int = 20, seed: int = 0
) -> dict[str, float]:
    """Relative size of [H, L] f, [H, M] f, [L, M] f on seeded random fields."""
    out: dict[str, float] = {}
    for a, b in (("H", "L"), ("H", "M"), ("L", "M")):
        worst = 0.0
        for i in range(fields):
            f = random_test_field(ops.model, ops.q, seed=seed + i).expr
            ab = ops.get(a)(ops.get(b)(f))
            ba = ops.get(b)(ops.get(a)(f))
            fn = sympy.lambdify(ops.coords, [ab - ba, ab], modules=["scipy", "numpy"])
            pts = sample_points(ops.model, float(ops.q), R=R, count=points, seed=seed + i)
            with np.errstate(divide="ignore", invalid="ignore"):
                diff, scale = (np.asarray(v, dtype=complex) for v in fn(*pts))
            worst = max(worst, float(np.max(np.abs(diff)) / np.max(np.abs(scale))))
        out[f"{a}_{b}_commute"] = worst
    return out
