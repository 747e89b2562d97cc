"""Phase-space functions polynomial in the momenta, and their Poisson bracket.

Coefficients live in the exact coefficient ring, read with the classical symbols:
q stands for Q, k for the parameter K, and the generators are sinh QX, cosh QX,
sin QY, cos QY.
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass
from typing import Any

import numpy as np

from pdmchannel.algebra.coeffring import CoeffPoly, ScalarPoly

Momenta = tuple[int, int]
Scalar = CoeffPoly | ScalarPoly | int


class PhaseFunction:
    """sum c_(i,j)(X, Y) P_X^i P_Y^j. Treat instances as immutable."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Momenta, CoeffPoly] | None = None):
        self._terms: dict[Momenta, CoeffPoly] = {
            ij: c for ij, c in (terms or {}).items() if not c.is_zero
        }

    @classmethod
    def coordinate(cls, c: CoeffPoly | Any) -> PhaseFunction:
        if not isinstance(c, CoeffPoly):
            c = CoeffPoly.constant(c)
        return cls({(0, 0): c})

    @classmethod
    def momentum(cls, px: int = 0, py: int = 0) -> PhaseFunction:
        return cls({(px, py): CoeffPoly.one()})

    @property
    def terms(self) -> Mapping[Momenta, CoeffPoly]:
        return self._terms

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def degree(self) -> int:
        """Total degree in the momenta."""
        return max((i + j for i, j in self._terms), default=0)

    def term_count(self) -> int:
        return sum(len(c) for c in self._terms.values())

    def __add__(self, other: Any) -> PhaseFunction:
        other = _coerce(other)
        out = dict(self._terms)
        for ij, c in other._terms.items():
            out[ij] = out[ij] + c if ij in out else c
        return PhaseFunction(out)

    __radd__ = __add__

    def __neg__(self) -> PhaseFunction:
        return PhaseFunction({ij: -c for ij, c in self._terms.items()})

    def __sub__(self, other: Any) -> PhaseFunction:
        return self + (-_coerce(other))

    def __rsub__(self, other: Any) -> PhaseFunction:
        return _coerce(other) - self

    def __mul__(self, other: Any) -> PhaseFunction:
        if not isinstance(other, PhaseFunction):
            return PhaseFunction({ij: c * other for ij, c in self._terms.items()})
        out: dict[Momenta, CoeffPoly] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                ij = (i1 + i2, j1 + j2)
                prod = c1 * c2
                out[ij] = out[ij] + prod if ij in out else prod
        return PhaseFunction(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> PhaseFunction:
        result = PhaseFunction.coordinate(1)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PhaseFunction):
            return NotImplemented
        return (self - other).is_zero

    def __hash__(self) -> int:
        return hash(tuple(sorted((ij, hash(c)) for ij, c in self._terms.items())))

    def d_x(self) -> PhaseFunction:
        return PhaseFunction({ij: c.derive_x() for ij, c in self._terms.items()})

    def d_y(self) -> PhaseFunction:
        return PhaseFunction({ij: c.derive_y() for ij, c in self._terms.items()})

    def d_px(self) -> PhaseFunction:
        return PhaseFunction({(i - 1, j): c * i for (i, j), c in self._terms.items() if i})

    def d_py(self) -> PhaseFunction:
        return PhaseFunction({(i, j - 1): c * j for (i, j), c in self._terms.items() if j})

    def at_zero_py(self) -> PhaseFunction:
        """Restriction to P_Y = 0."""
        return PhaseFunction({ij: c for ij, c in self._terms.items() if ij[1] == 0})

    def momentum_part(self, degree: int) -> PhaseFunction:
        return PhaseFunction({ij: c for ij, c in self._terms.items() if sum(ij) == degree})

    def eval(self, Q: float, K: float, X: Any, Y: Any, PX: Any, PY: Any) -> Any:
        PX = np.asarray(PX, dtype=float)
        PY = np.asarray(PY, dtype=float)
        total = 0.0
        for (i, j), c in sorted(self._terms.items()):
            total = total + c.eval(Q, K, X, Y) * PX**i * PY**j
        return total

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"[{c}] PX^{i} PY^{j}" for (i, j), c in sorted(self._terms.items()))

    def __repr__(self) -> str:
        return f"PhaseFunction(degree={self.degree}, terms={self.term_count()})"


def _coerce(value: Any) -> PhaseFunction:
    if isinstance(value, PhaseFunction):
        return value
    return PhaseFunction.coordinate(value)


def poisson(f: PhaseFunction, g: PhaseFunction) -> PhaseFunction:
    """{f, g} = f_X g_PX - f_PX g_X + f_Y g_PY - f_PY g_Y."""
    return f.d_x() * g.d_px() - f.d_px() * g.d_x() + f.d_y() * g.d_py() - f.d_py() * g.d_y()


def poisson_jacobi(f: PhaseFunction, g: PhaseFunction, h: PhaseFunction) -> PhaseFunction:
    return poisson(f, poisson(g, h)) + poisson(g, poisson(h, f)) + poisson(h, poisson(f, g))


@dataclass(frozen=True)
class ComplexPhase:
    """re + i im with real phase-space functions."""

    re: PhaseFunction
    im: PhaseFunction

    def conj(self) -> ComplexPhase:
        return ComplexPhase(self.re, -self.im)

    def __add__(self, other: ComplexPhase) -> ComplexPhase:
        return ComplexPhase(self.re + other.re, self.im + other.im)

    def __mul__(self, other: ComplexPhase) -> ComplexPhase:
        return ComplexPhase(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    @property
    def is_real(self) -> bool:
        return self.im.is_zero
