"""Normal-ordered differential operators with coefficients in the exact ring.

A DiffOp is a finite sum of ``c_ij * d_x^i d_y^j`` with every derivative standing to the
right of its coefficient. Products are normal-ordered with the Leibniz rule, so an
operator identity holds iff the difference is the empty operator.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from itertools import permutations
from math import comb
from typing import TYPE_CHECKING, Any

import numpy as np
import sympy

from pdmchannel.algebra.coeffring import X, Y, CoeffPoly, ScalarPoly, SCALARS
from pdmchannel.errors import DerivativeOrderUnsupported

if TYPE_CHECKING:
    from pdmchannel.wavefn.fields import SmoothField

Order = tuple[int, int]


class DiffOp:
    """Normal-ordered operator. Treat instances as immutable."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Order, CoeffPoly] | None = None):
        self._terms: dict[Order, CoeffPoly] = {
            ij: c for ij, c in (terms or {}).items() if not c.is_zero
        }

    @classmethod
    def multiplication(cls, c: CoeffPoly | Any) -> DiffOp:
        """Operator of multiplication by a coefficient (or scalar)."""
        if not isinstance(c, CoeffPoly):
            c = CoeffPoly.constant(c)
        return cls({(0, 0): c})

    @classmethod
    def identity(cls) -> DiffOp:
        return cls.multiplication(CoeffPoly.one())

    @classmethod
    def partial(cls, i: int = 0, j: int = 0) -> DiffOp:
        return cls({(i, j): CoeffPoly.one()})

    @property
    def terms(self) -> Mapping[Order, CoeffPoly]:
        return self._terms

    @property
    def order(self) -> int:
        return max((i + j for i, j in self._terms), default=0)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, i: int, j: int) -> CoeffPoly:
        return self._terms.get((i, j), CoeffPoly.zero())

    def term_count(self) -> int:
        """Number of (derivative, monomial) pairs."""
        return sum(len(c) for c in self._terms.values())

    # linear structure

    def __add__(self, other: Any) -> DiffOp:
        other = _coerce(other)
        out = dict(self._terms)
        for ij, c in other._terms.items():
            out[ij] = out[ij] + c if ij in out else c
        return DiffOp(out)

    __radd__ = __add__

    def __neg__(self) -> DiffOp:
        return DiffOp({ij: -c for ij, c in self._terms.items()})

    def __sub__(self, other: Any) -> DiffOp:
        return self + (-_coerce(other))

    def __rsub__(self, other: Any) -> DiffOp:
        return _coerce(other) - self

    def scale(self, factor: CoeffPoly | ScalarPoly | int) -> DiffOp:
        """Left multiplication by a coefficient or scalar."""
        return DiffOp({ij: c * factor for ij, c in self._terms.items()})

    def __mul__(self, other: Any) -> DiffOp:
        if isinstance(other, DiffOp):
            return compose(self, other)
        return self.scale(other)

    def __rmul__(self, other: Any) -> DiffOp:
        return self.scale(other)

    def __matmul__(self, other: DiffOp) -> DiffOp:
        return compose(self, other)

    def __pow__(self, n: int) -> DiffOp:
        result = DiffOp.identity()
        for _ in range(n):
            result = compose(result, self)
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DiffOp):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(tuple(sorted((ij, hash(c)) for ij, c in self._terms.items())))

    def shift_k(self, by: int) -> DiffOp:
        return DiffOp({ij: c.shift_k(by) for ij, c in self._terms.items()})

    def map_scalars(self, fn) -> DiffOp:
        return DiffOp({ij: c.map_scalars(fn) for ij, c in self._terms.items()})

    # application

    def apply(self, field: SmoothField, x: Any, y: Any, *, q: float, k: float) -> Any:
        """Numeric action on a field at points (x, y), binary64."""
        order = self.order
        if order > field.max_order:
            raise DerivativeOrderUnsupported(
                f"operator of order {order} on a field supporting {field.max_order}"
            )
        x = np.asarray(x, dtype=float)
        y = np.asarray(y, dtype=float)
        total = np.zeros(np.broadcast_shapes(x.shape, y.shape))
        for (i, j), c in sorted(self._terms.items()):
            total = total + c.eval(q, k, x, y) * field.derivative(i, j)(x, y)
        return total if total.shape else float(total)

    def apply_expr(
        self, expr: sympy.Expr, *, q: Any = None, k: Any = None
    ) -> sympy.Expr:
        """Symbolic action on a sympy expression in the symbols x, y."""
        qs, ks = SCALARS.symbols
        subs = {}
        if q is not None:
            subs[qs] = q
        if k is not None:
            subs[ks] = k
        parts = []
        for (i, j), c in sorted(self._terms.items()):
            coeff = c.as_expr().subs(subs) if subs else c.as_expr()
            derivative = expr
            if i:
                derivative = sympy.diff(derivative, X, i)
            if j:
                derivative = sympy.diff(derivative, Y, j)
            parts.append(coeff * derivative)
        return sympy.Add(*parts)

    def __str__(self) -> str:
        """Golden-test serialization: one ``(i,j): <CoeffPoly>`` line per term."""
        return "\n".join(f"({i},{j}): {c}" for (i, j), c in sorted(self._terms.items()))

    def __repr__(self) -> str:
        return f"DiffOp(order={self.order}, terms={len(self._terms)})"


def _coerce(value: Any) -> DiffOp:
    if isinstance(value, DiffOp):
        return value
    return DiffOp.multiplication(value)


def compose(a: DiffOp, b: DiffOp) -> DiffOp:
    """Normal-ordered product a o b.

    d_x^i d_y^j o (c D) = sum_{r,s} C(i,r) C(j,s) (d_x^r d_y^s c) d_x^(i-r) d_y^(j-s) D
    """
    cache: dict[tuple[Order, int, int], CoeffPoly] = {}

    def deriv(ij: Order, c: CoeffPoly, r: int, s: int) -> CoeffPoly:
        key = (ij, r, s)
        if key not in cache:
            if r == 0 and s == 0:
                cache[key] = c
            elif r > 0:
                cache[key] = deriv(ij, c, r - 1, s).derive_x()
            else:
                cache[key] = deriv(ij, c, r, s - 1).derive_y()
        return cache[key]

    out: dict[Order, CoeffPoly] = {}
    for (i, j), ca in a._terms.items():
        for (m, n), cb in b._terms.items():
            for r in range(i + 1):
                for s in range(j + 1):
                    dcb = deriv((m, n), cb, r, s)
                    if dcb.is_zero:
                        continue
                    coeff = ca * dcb
                    mult = comb(i, r) * comb(j, s)
                    if mult != 1:
                        coeff = coeff * mult
                    target = (i - r + m, j - s + n)
                    out[target] = out[target] + coeff if target in out else coeff
    return DiffOp(out)


def commutator(a: DiffOp, b: DiffOp) -> DiffOp:
    return compose(a, b) - compose(b, a)


def anticommutator(a: DiffOp, b: DiffOp) -> DiffOp:
    return compose(a, b) + compose(b, a)


def triple_sym(a: DiffOp, b: DiffOp, c: DiffOp) -> DiffOp:
    """{a, b, c}: sum over all six orderings."""
    total = DiffOp()
    for u, v, w in permutations((a, b, c)):
        total = total + compose(compose(u, v), w)
    return total


def shift_k_op(a: DiffOp, by: int) -> DiffOp:
    return a.shift_k(by)


def linear_combination(pairs: Iterable[tuple[Any, DiffOp]]) -> DiffOp:
    total = DiffOp()
    for coeff, op in pairs:
        total = total + op.scale(coeff)
    return total
