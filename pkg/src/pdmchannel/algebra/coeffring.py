"""Exact coefficient ring generated by sinh qx, cosh qx, sin qy, cos qy.

Elements are finite sums ``scale * sinh^a cosh^b sin^c cos^d`` where ``scale`` is a
polynomial in the parameters (q, k) with rational coefficients. The canonical form keeps
``b`` and ``d`` in {0, 1} using cosh^2 = 1 + sinh^2 and cos^2 = 1 - sin^2, so negative
powers of sinh (csch) stay representable and structural equality is mathematical equality.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from fractions import Fraction
from math import comb
from typing import Any

import numpy as np
import sympy
from sympy.polys.domains import QQ
from sympy.polys.rings import PolyElement, ring

from pdmchannel.errors import InvalidParam, PoleAtOrigin

# Scalar polynomials in the model parameters.
SCALARS, q, k = ring("q,k", QQ)
ScalarPoly = PolyElement

Key = tuple[int, int, int, int]

X, Y = sympy.symbols("x y", real=True)


def scalar(value: Any) -> ScalarPoly:
    """Coerce an int, Fraction, QQ element or ScalarPoly into the scalar ring."""
    if isinstance(value, PolyElement):
        if value.ring is not SCALARS:
            raise InvalidParam(f"scalar from foreign ring {value.ring}")
        return value
    if isinstance(value, Fraction):
        return SCALARS(QQ(value.numerator, value.denominator))
    if isinstance(value, float):
        raise InvalidParam("floating-point scalars are not allowed in the exact ring")
    return SCALARS(value)


def shift_scalar(p: ScalarPoly, by: int) -> ScalarPoly:
    """Substitute k -> k + by."""
    if by == 0 or p.is_zero:
        return p
    return p.compose(k, k + by)


def eval_scalar(p: ScalarPoly, qv: float, kv: float) -> float:
    total = 0.0
    for (i, j), c in p.terms():
        total += float(c) * qv**i * kv**j
    return total


def format_scalar(p: ScalarPoly) -> str:
    """Render as ``(r q^i k^j + ...)``."""
    if p.is_zero:
        return "(0)"
    parts = []
    for (i, j), c in sorted(p.terms(), reverse=True):
        text = str(c)
        if i:
            text += f" q^{i}"
        if j:
            text += f" k^{j}"
        parts.append(text)
    return "(" + " + ".join(parts) + ")"


def _expand_raw(a: int, b: int, c: int, d: int) -> list[tuple[Key, int]]:
    """Canonical expansion of sinh^a cosh^b sin^c cos^d with b, c, d >= 0."""
    if b < 0 or c < 0 or d < 0:
        raise InvalidParam(f"monomial outside the coefficient family: ({a},{b},{c},{d})")
    hb, b0 = divmod(b, 2)
    hd, d0 = divmod(d, 2)
    out: list[tuple[Key, int]] = []
    # cosh^(2hb) = sum_i C(hb,i) sinh^(2i); cos^(2hd) = sum_j C(hd,j) (-1)^j sin^(2j)
    for i in range(hb + 1):
        ci = comb(hb, i)
        for j in range(hd + 1):
            cj = comb(hd, j) * (-1) ** j
            out.append(((a + 2 * i, b0, c + 2 * j, d0), ci * cj))
    return out


class CoeffPoly:
    """Canonical element of the coefficient ring. Treat instances as immutable."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Key, ScalarPoly] | None = None):
        cleaned: dict[Key, ScalarPoly] = {}
        if terms:
            for key, scale in terms.items():
                a, b, c, d = key
                if b not in (0, 1) or d not in (0, 1) or c < 0:
                    raise InvalidParam(f"non-canonical key {key}; use normalize()")
                if not scale.is_zero:
                    cleaned[key] = scale
        self._terms = cleaned

    # construction

    @classmethod
    def monomial(
        cls, a: int = 0, b: int = 0, c: int = 0, d: int = 0, scale: Any = 1
    ) -> CoeffPoly:
        return normalize([(a, b, c, d, scale)])

    @classmethod
    def constant(cls, scale: Any) -> CoeffPoly:
        return cls({(0, 0, 0, 0): scalar(scale)})

    @classmethod
    def zero(cls) -> CoeffPoly:
        return cls()

    @classmethod
    def one(cls) -> CoeffPoly:
        return cls.constant(1)

    # access

    @property
    def terms(self) -> Mapping[Key, ScalarPoly]:
        return self._terms

    def monomials(self) -> list[tuple[Key, ScalarPoly]]:
        """Monomials in canonical (lexicographic) order."""
        return sorted(self._terms.items())

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    # ring operations

    def __add__(self, other: Any) -> CoeffPoly:
        other = _coerce(other)
        out = dict(self._terms)
        for key, scale in other._terms.items():
            out[key] = out[key] + scale if key in out else scale
        return CoeffPoly(out)

    __radd__ = __add__

    def __neg__(self) -> CoeffPoly:
        return CoeffPoly({key: -scale for key, scale in self._terms.items()})

    def __sub__(self, other: Any) -> CoeffPoly:
        return self + (-_coerce(other))

    def __rsub__(self, other: Any) -> CoeffPoly:
        return _coerce(other) - self

    def __mul__(self, other: Any) -> CoeffPoly:
        if not isinstance(other, CoeffPoly):
            s = scalar(other)
            if s.is_zero:
                return CoeffPoly()
            return CoeffPoly({key: scale * s for key, scale in self._terms.items()})
        out: dict[Key, ScalarPoly] = {}
        for (a1, b1, c1, d1), s1 in self._terms.items():
            for (a2, b2, c2, d2), s2 in other._terms.items():
                s = s1 * s2
                for key, mult in _expand_raw(a1 + a2, b1 + b2, c1 + c2, d1 + d2):
                    term = s * mult
                    out[key] = out[key] + term if key in out else term
        return CoeffPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> CoeffPoly:
        if n < 0:
            raise InvalidParam("negative powers are only available through generator exponents")
        result = CoeffPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, CoeffPoly):
            return self._terms == other._terms
        try:
            return self == _coerce(other)
        except (InvalidParam, TypeError):
            return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple((key, tuple(sorted(s.items()))) for key, s in self.monomials()))

    # calculus

    def derive_x(self) -> CoeffPoly:
        raw = []
        for (a, b, c, d), s in self._terms.items():
            if a:
                raw.append((a - 1, b + 1, c, d, s * (a * q)))
            if b:
                raw.append((a + 1, b - 1, c, d, s * (b * q)))
        return normalize(raw)

    def derive_y(self) -> CoeffPoly:
        raw = []
        for (a, b, c, d), s in self._terms.items():
            if c:
                raw.append((a, b, c - 1, d + 1, s * (c * q)))
            if d:
                raw.append((a, b, c + 1, d - 1, s * (-d * q)))
        return normalize(raw)

    def derive(self, i: int, j: int) -> CoeffPoly:
        out = self
        for _ in range(i):
            out = out.derive_x()
        for _ in range(j):
            out = out.derive_y()
        return out

    def shift_k(self, by: int) -> CoeffPoly:
        return CoeffPoly({key: shift_scalar(s, by) for key, s in self._terms.items()})

    def map_scalars(self, fn) -> CoeffPoly:
        return CoeffPoly({key: fn(s) for key, s in self._terms.items()})

    # numeric bridge

    def eval(self, qv: float, kv: float, x: Any, y: Any) -> Any:
        """Evaluate in binary64; x and y may be numpy arrays (broadcast)."""
        x = np.asarray(x, dtype=float)
        y = np.asarray(y, dtype=float)
        if any(key[0] < 0 for key in self._terms) and np.any(x == 0.0):
            raise PoleAtOrigin("csch coefficient evaluated at x = 0")
        shape = np.broadcast_shapes(x.shape, y.shape)
        total = np.zeros(shape)
        if not self._terms:
            return total if shape else 0.0
        sh, ch = np.sinh(qv * x), np.cosh(qv * x)
        sn, cs = np.sin(qv * y), np.cos(qv * y)
        for (a, b, c, d), s in self.monomials():
            value = eval_scalar(s, qv, kv)
            if value == 0.0:
                continue
            term = value * sh**a if a >= 0 else value / sh ** (-a)
            if b:
                term = term * ch
            if c:
                term = term * sn**c
            if d:
                term = term * cs
            total = total + term
        return total if shape else float(total)

    def as_expr(self, x: sympy.Symbol = X, y: sympy.Symbol = Y) -> sympy.Expr:
        """Sympy expression in x, y and the parameter symbols q, k."""
        qs = SCALARS.symbols[0]
        terms = []
        for (a, b, c, d), s in self.monomials():
            terms.append(
                s.as_expr()
                * sympy.sinh(qs * x) ** a
                * sympy.cosh(qs * x) ** b
                * sympy.sin(qs * y) ** c
                * sympy.cos(qs * y) ** d
            )
        return sympy.Add(*terms)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (a, b, c, d), s in self.monomials():
            parts.append(f"{format_scalar(s)} * sinh^{a} cosh^{b} sin^{c} cos^{d}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"CoeffPoly({self})"


def _coerce(value: Any) -> CoeffPoly:
    if isinstance(value, CoeffPoly):
        return value
    return CoeffPoly.constant(value)


def normalize(raw: Iterable[tuple[int, int, int, int, Any]]) -> CoeffPoly:
    """Canonical form of a list of raw monomials ``(a, b, c, d, scale)``.

    b, c and d must be non-negative; a may be any integer.
    """
    out: dict[Key, ScalarPoly] = {}
    for a, b, c, d, scale in raw:
        s = scalar(scale)
        if s.is_zero:
            continue
        for key, mult in _expand_raw(a, b, c, d):
            term = s * mult
            out[key] = out[key] + term if key in out else term
    return CoeffPoly(out)


# generators

ONE = CoeffPoly.one()
SINH = CoeffPoly.monomial(a=1)
COSH = CoeffPoly.monomial(b=1)
CSCH = CoeffPoly.monomial(a=-1)
SIN = CoeffPoly.monomial(c=1)
COS = CoeffPoly.monomial(d=1)


def derive_x(f: CoeffPoly) -> CoeffPoly:
    return f.derive_x()


def derive_y(f: CoeffPoly) -> CoeffPoly:
    return f.derive_y()


def shift_k(f: CoeffPoly, by: int) -> CoeffPoly:
    return f.shift_k(by)
