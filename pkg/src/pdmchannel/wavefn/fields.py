"""Analytic fields on the strip 0 < x, |y| < pi/(2q), with exact derivatives.

A SmoothField wraps a sympy expression in the coordinate symbols. Derivatives are taken
symbolically on first use and compiled to numpy with ``lambdify``; finite differences
only ever appear in tests.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable, Sequence
from fractions import Fraction
from typing import Any

import numpy as np
import sympy

from pdmchannel.algebra.coeffring import X, Y
from pdmchannel.errors import DerivativeOrderUnsupported, InvalidParam

MAX_ORDER = 6


def exact(value: Any) -> sympy.Expr:
    """Exact sympy number for a parameter (floats via their decimal representation)."""
    if isinstance(value, sympy.Basic):
        return value
    if isinstance(value, Fraction):
        return sympy.Rational(value.numerator, value.denominator)
    if isinstance(value, int):
        return sympy.Integer(value)
    return sympy.nsimplify(value, rational=True)


def check_params(k: Any, q: Any) -> None:
    if not k > 0:
        raise InvalidParam(f"k must be positive, got {k}")
    if not q > 0:
        raise InvalidParam(f"q must be positive, got {q}")


def _broadcasting(fn: Callable, arity: int, dtype: type = float) -> Callable[..., np.ndarray]:
    def evaluate(*points: Any) -> np.ndarray:
        if len(points) != arity:
            raise InvalidParam(f"field takes {arity} coordinates, got {len(points)}")
        arrays = [np.asarray(p, dtype=float) for p in points]
        shape = np.broadcast_shapes(*(a.shape for a in arrays))
        with np.errstate(divide="ignore", invalid="ignore"):
            value = np.asarray(fn(*arrays), dtype=dtype)
        return np.array(np.broadcast_to(value, shape))

    return evaluate


class SmoothField:
    """Analytic function on the channel with mixed partials up to ``max_order``."""

    def __init__(
        self,
        expr: sympy.Expr,
        *,
        label: str,
        physical: bool = True,
        coords: Sequence[sympy.Symbol] = (X, Y),
        max_order: int = MAX_ORDER,
        complex_valued: bool = False,
    ):
        self.expr = sympy.sympify(expr)
        self.label = label
        self.physical = physical
        self.coords = tuple(coords)
        self.max_order = max_order
        self.complex_valued = complex_valued
        self._exprs: dict[tuple[int, ...], sympy.Expr] = {(0,) * len(self.coords): self.expr}
        self._compiled: dict[tuple[int, ...], Callable[..., np.ndarray]] = {}

    @property
    def dim(self) -> int:
        return len(self.coords)

    def _key(self, orders: Sequence[int]) -> tuple[int, ...]:
        if len(orders) > self.dim or any(o < 0 for o in orders):
            raise InvalidParam(f"bad derivative multi-index {tuple(orders)}")
        key = tuple(orders) + (0,) * (self.dim - len(orders))
        if sum(key) > self.max_order:
            raise DerivativeOrderUnsupported(
                f"{self.label}: order {sum(key)} exceeds {self.max_order}"
            )
        return key

    def derivative_expr(self, *orders: int) -> sympy.Expr:
        key = self._key(orders)
        if key not in self._exprs:
            axis = next(i for i, o in enumerate(key) if o)
            lower = list(key)
            lower[axis] -= 1
            self._exprs[key] = sympy.diff(self.derivative_expr(*lower), self.coords[axis])
        return self._exprs[key]

    def derivative(self, *orders: int) -> Callable[..., np.ndarray]:
        """Compiled partial derivative; ``derivative(i, j)`` is d_x^i d_y^j."""
        key = self._key(orders)
        if key not in self._compiled:
            fn = sympy.lambdify(self.coords, self.derivative_expr(*key), modules=["scipy", "numpy"])
            dtype = complex if self.complex_valued else float
            self._compiled[key] = _broadcasting(fn, self.dim, dtype)
        return self._compiled[key]

    def __call__(self, *points: Any) -> np.ndarray:
        return self.derivative()(*points)

    def scaled(self, factor: Any, label: str | None = None) -> SmoothField:
        return SmoothField(
            exact(factor) * self.expr,
            label=label or self.label,
            physical=self.physical,
            coords=self.coords,
            max_order=self.max_order,
            complex_valued=self.complex_valued,
        )

    @classmethod
    def combination(
        cls, terms: Iterable[tuple[float, SmoothField]], *, label: str
    ) -> SmoothField:
        """Linear combination with binary64 weights."""
        terms = list(terms)
        if not terms:
            raise InvalidParam("empty combination")
        coords = terms[0][1].coords
        expr = sympy.Add(*(sympy.Float(float(c), 17) * f.expr for c, f in terms))
        return cls(
            expr,
            label=label,
            physical=all(f.physical for _, f in terms),
            coords=coords,
            max_order=min(f.max_order for _, f in terms),
            complex_valued=any(f.complex_valued for _, f in terms),
        )

    def __repr__(self) -> str:
        tag = "" if self.physical else ", unphysical"
        return f"SmoothField({self.label}{tag})"


# building blocks


def _binom(top: sympy.Expr, r: int) -> sympy.Expr:
    """C(top, r) as a falling product, so irrational tops stay explicit."""
    return sympy.Mul(*(top - i for i in range(r))) / sympy.factorial(r)


def jacobi_expr(n: int, alpha: Any, beta: Any, t: sympy.Expr) -> sympy.Expr:
    """P_n^(alpha, beta)(1 - 2 t^2) as an explicit polynomial in t.

    Uses P_n(z) = sum_s C(n+alpha, n-s) C(n+beta, s) ((z-1)/2)^s ((z+1)/2)^(n-s) with
    (z-1)/2 = -t^2 and (z+1)/2 = 1 - t^2.
    """
    if n < 0:
        raise InvalidParam(f"degree must be >= 0, got {n}")
    a, b = exact(alpha), exact(beta)
    return sympy.Add(
        *(
            _binom(n + a, n - s) * _binom(n + b, s) * (-(t**2)) ** s
            * (1 - t**2) ** (n - s)
            for s in range(n + 1)
        )
    )


def phi_expr(n: int, delta: Any, k: Any, q: Any, x: sympy.Symbol = X) -> sympy.Expr:
    """Unnormalized x-factor tanh^k sech^(delta+1) P_n^(k-1/2, delta)(1 - 2 tanh^2)."""
    ke, qe, de = exact(k), exact(q), exact(delta)
    t = sympy.tanh(qe * x)
    poly = jacobi_expr(n, ke - sympy.Rational(1, 2), de, t)
    return t**ke * sympy.cosh(qe * x) ** (-(de + 1)) * poly


def phi_norm(
    n: int, delta: Any, k: Any, q: Any, *, t_nodes: int = 96, rel_tol: float = 1e-8
) -> float:
    """1 / sqrt(int_0^inf phi^2 dx) by Gauss-Legendre in t = tanh qx."""
    from pdmchannel.wavefn.integrate import integrate_line

    fn = sympy.lambdify(X, phi_expr(n, delta, k, q) ** 2, modules="numpy")
    norm_sq = integrate_line(fn, q=float(q), nodes=t_nodes, rel_tol=rel_tol).value
    return 1.0 / float(np.sqrt(norm_sq))


def _transverse(l: int, q: sympy.Expr, *, physical: bool, y: sympy.Symbol = Y) -> sympy.Expr:
    arg = (l + 1) * q * y
    use_cos = (l % 2 == 0) == physical
    return sympy.cos(arg) if use_cos else sympy.sin(arg)


def chi_l(l: int, q: Any) -> SmoothField:
    """sqrt(2q/pi) cos((l+1)qy) for even l, sin((l+1)qy) for odd l."""
    if l < 0:
        raise InvalidParam(f"l must be >= 0, got {l}")
    if not q > 0:
        raise InvalidParam(f"q must be positive, got {q}")
    qe = exact(q)
    expr = sympy.sqrt(2 * qe / sympy.pi) * _transverse(l, qe, physical=True)
    return SmoothField(expr, label=f"chi_{l}")


def chibar_l(l: int, q: Any) -> SmoothField:
    """The companion y-solution (sin for even l, cos for odd l); unnormalized, unphysical."""
    if l < -1:
        raise InvalidParam(f"chibar needs l >= -1, got {l}")
    if not q > 0:
        raise InvalidParam(f"q must be positive, got {q}")
    expr = _transverse(l, exact(q), physical=False)
    return SmoothField(expr, label=f"chibar_{l}", physical=False)


def psi_nl(
    n: int, l: int, k: Any, q: Any, *, t_nodes: int = 96, rel_tol: float = 1e-8
) -> SmoothField:
    """Normalized separable eigenfunction phi_{n,l}(x) chi_l(y)."""
    check_params(k, q)
    if n < 0 or l < 0:
        raise InvalidParam(f"need n, l >= 0, got ({n}, {l})")
    norm = phi_norm(n, l + 1, k, q, t_nodes=t_nodes, rel_tol=rel_tol)
    expr = sympy.Float(norm, 17) * phi_expr(n, l + 1, k, q) * chi_l(l, q).expr
    return SmoothField(expr, label=f"psi_{n},{l}")


def omega_zero_mode(kind: str, s: Any, k: Any, q: Any) -> SmoothField:
    """tanh^k sech^(s+1) cos^s qy (kind "eta") or sin^s qy (kind "etabar").

    Only the eta zero mode with s > 0 vanishes on y = +-pi/(2q).
    """
    check_params(k, q)
    if kind not in ("eta", "etabar"):
        raise InvalidParam(f"kind must be 'eta' or 'etabar', got {kind!r}")
    ke, qe, se = exact(k), exact(q), exact(s)
    trig = sympy.cos(qe * Y) if kind == "eta" else sympy.sin(qe * Y)
    expr = sympy.tanh(qe * X) ** ke * sympy.cosh(qe * X) ** (-(se + 1)) * trig**se
    physical = kind == "eta" and se > 0
    name = "omega" if kind == "eta" else "omegabar"
    return SmoothField(expr, label=f"{name}_{s}", physical=physical)


def interior_points(q: float, count: int = 20, seed: int = 0) -> tuple[np.ndarray, np.ndarray]:
    """Random points well inside the strip (0.05/q < x < 4/q, |y| < 0.95 pi/(2q))."""
    rng = np.random.default_rng(seed)
    x = rng.uniform(0.05 / q, 4.0 / q, size=count)
    y = rng.uniform(-0.95, 0.95, size=count) * np.pi / (2.0 * q)
    return x, y
