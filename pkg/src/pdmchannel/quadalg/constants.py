"""Structure constants of the quadratic algebra generated by A = R, B = L and C = [A, B].

The relations have the form

    [A, C] = alpha A^2 + gamma {A, B} + delta A + epsilon B + zeta
    [B, C] = a A^2 - gamma B^2 - alpha {A, B} + d A - delta B + z

where delta, epsilon, d are affine in H and zeta, z quadratic in H. Constants are kept as
polynomials in (q, k, H) with rational coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import structlog
import sympy
from sympy.polys.domains import QQ
from sympy.polys.rings import PolyElement, ring

from pdmchannel.algebra.coeffring import SCALARS, ScalarPoly, k, q
from pdmchannel.algebra.diffalg import DiffOp, anticommutator, commutator, compose
from pdmchannel.algebra.matching import match_operator
from pdmchannel.errors import NoMatch
from pdmchannel.model2d.catalog import OperatorCatalog, build_catalog

log = structlog.get_logger(__name__)

HSCALARS, hq, hk, H = ring("q,k,H", QQ)
HPoly = PolyElement
Q_SYM, K_SYM, H_SYM = HSCALARS.symbols


def lift(p: ScalarPoly) -> HPoly:
    """Embed a (q, k) polynomial into the (q, k, H) ring."""
    return HSCALARS.from_dict({(i, j, 0): c for (i, j), c in p.terms()})


def h_coefficients(p: HPoly) -> list[ScalarPoly]:
    """[c_0, c_1, ...] with p = sum_n c_n H^n."""
    degree = max((h for (_, _, h), _ in p.terms()), default=0)
    out = [SCALARS.zero for _ in range(degree + 1)]
    for (i, j, h), c in p.terms():
        out[h] += SCALARS.from_dict({(i, j): c})
    return out


def from_h_coefficients(*coeffs: ScalarPoly) -> HPoly:
    return sum((lift(c) * H**n for n, c in enumerate(coeffs)), HSCALARS.zero)


def h_operator(p: HPoly, catalog: OperatorCatalog | None = None) -> DiffOp:
    """The operator p(H) = sum_n c_n H^n."""
    cat = catalog or build_catalog()
    coeffs = h_coefficients(p)
    powers = _h_powers(cat, len(coeffs) - 1)
    total = DiffOp()
    for c, op in zip(coeffs, powers, strict=True):
        if not c.is_zero:
            total = total + op.scale(c)
    return total


def _h_powers(cat: OperatorCatalog, degree: int) -> list[DiffOp]:
    if cat is build_catalog():
        return list(_default_h_powers(degree))
    powers = [DiffOp.identity()]
    for _ in range(degree):
        powers.append(compose(cat.H, powers[-1]))
    return powers


@lru_cache(maxsize=8)
def _default_h_powers(degree: int) -> tuple[DiffOp, ...]:
    cat = build_catalog()
    if degree == 0:
        return (DiffOp.identity(),)
    lower = _default_h_powers(degree - 1)
    return (*lower, compose(cat.H, lower[-1]))


def apply_h(p: HPoly, op: DiffOp, catalog: OperatorCatalog | None = None) -> DiffOp:
    """p(H) o op, scaling directly when p does not involve H."""
    coeffs = h_coefficients(p)
    if len(coeffs) == 1:
        return op.scale(coeffs[0])
    return compose(h_operator(p, catalog), op)


@dataclass(frozen=True)
class StructureConstants:
    alpha: ScalarPoly
    gamma: ScalarPoly
    a: ScalarPoly
    delta0: ScalarPoly
    delta1: ScalarPoly
    epsilon0: ScalarPoly
    epsilon1: ScalarPoly
    zeta0: ScalarPoly
    zeta1: ScalarPoly
    zeta2: ScalarPoly
    d0: ScalarPoly
    d1: ScalarPoly
    z0: ScalarPoly
    z1: ScalarPoly
    z2: ScalarPoly

    @property
    def delta(self) -> HPoly:
        return from_h_coefficients(self.delta0, self.delta1)

    @property
    def epsilon(self) -> HPoly:
        return from_h_coefficients(self.epsilon0, self.epsilon1)

    @property
    def zeta(self) -> HPoly:
        return from_h_coefficients(self.zeta0, self.zeta1, self.zeta2)

    @property
    def d(self) -> HPoly:
        return from_h_coefficients(self.d0, self.d1)

    @property
    def z(self) -> HPoly:
        return from_h_coefficients(self.z0, self.z1, self.z2)

    def as_hpolys(self) -> dict[str, HPoly]:
        return {
            "alpha": lift(self.alpha),
            "gamma": lift(self.gamma),
            "a": lift(self.a),
            "delta": self.delta,
            "epsilon": self.epsilon,
            "zeta": self.zeta,
            "d": self.d,
            "z": self.z,
        }

    def as_exprs(self, energy: sympy.Expr | None = None) -> dict[str, sympy.Expr]:
        """Sympy expressions in (q, k, H); with ``energy`` the symbol H is replaced by it."""
        out = {}
        for name, p in self.as_hpolys().items():
            expr = p.as_expr()
            if energy is not None:
                expr = expr.subs(H_SYM, energy)
            out[name] = expr
        return out


def printed_constants() -> StructureConstants:
    """alpha = gamma = 8q^2, delta = 8q^2[q^2(2k-1) - H], epsilon = 16q^4(k-1)(k+1),
    zeta = 8q^4(k-1)(2q^2 k - H), a = 0, d = 16q^4, z = 8q^4(2q^2 k - H)."""
    zero = SCALARS.zero
    return StructureConstants(
        alpha=8 * q**2,
        gamma=8 * q**2,
        a=zero,
        delta0=8 * q**4 * (2 * k - 1),
        delta1=-8 * q**2,
        epsilon0=16 * q**4 * (k - 1) * (k + 1),
        epsilon1=zero,
        zeta0=16 * q**6 * k * (k - 1),
        zeta1=-8 * q**4 * (k - 1),
        zeta2=zero,
        d0=16 * q**4,
        d1=zero,
        z0=16 * q**6 * k,
        z1=-8 * q**4,
        z2=zero,
    )


def matching_basis(catalog: OperatorCatalog | None = None) -> dict[str, DiffOp]:
    """{A^2, {A,B}, B^2, A, HA, B, HB, 1, H, H^2} in normal form."""
    cat = catalog or build_catalog()
    a_op, b_op, h_op = cat.A, cat.B, cat.H
    return {
        "A2": compose(a_op, a_op),
        "AB": anticommutator(a_op, b_op),
        "B2": compose(b_op, b_op),
        "A": a_op,
        "HA": compose(h_op, a_op),
        "B": b_op,
        "HB": compose(h_op, b_op),
        "1": DiffOp.identity(),
        "H": h_op,
        "H2": compose(h_op, h_op),
    }


def extract_structure_constants(catalog: OperatorCatalog | None = None) -> StructureConstants:
    """Match [A, C] and [B, C] against the quadratic basis and read off the constants.

    Raises NoMatch if either commutator leaves the span or violates the
    antisymmetric pattern linking the two relations.
    """
    cat = catalog or build_catalog()
    basis = matching_basis(cat)
    ac = match_operator(commutator(cat.A, cat.C), basis)
    bc = match_operator(commutator(cat.B, cat.C), basis)

    if not ac["B2"].is_zero:
        raise NoMatch(f"[A, C] has a B^2 term {ac['B2']}")
    if bc["B2"] != -ac["AB"]:
        raise NoMatch("coefficient of B^2 in [B, C] is not -gamma")
    if bc["AB"] != -ac["A2"]:
        raise NoMatch("coefficient of {A, B} in [B, C] is not -alpha")
    if bc["B"] != -ac["A"] or bc["HB"] != -ac["HA"]:
        raise NoMatch("coefficient of B in [B, C] is not -delta")

    constants = StructureConstants(
        alpha=ac["A2"],
        gamma=ac["AB"],
        a=bc["A2"],
        delta0=ac["A"],
        delta1=ac["HA"],
        epsilon0=ac["B"],
        epsilon1=ac["HB"],
        zeta0=ac["1"],
        zeta1=ac["H"],
        zeta2=ac["H2"],
        d0=bc["A"],
        d1=bc["HA"],
        z0=bc["1"],
        z1=bc["H"],
        z2=bc["H2"],
    )
    log.info("structure_constants_extracted", alpha=str(constants.alpha), a=str(constants.a))
    return constants


@lru_cache(maxsize=1)
def default_constants() -> StructureConstants:
    """Extracted constants for the default catalog, computed once."""
    return extract_structure_constants()


def relation_residuals(
    constants: StructureConstants, catalog: OperatorCatalog | None = None
) -> dict[str, DiffOp]:
    """Both defining relations as LHS - RHS operators; both are empty when they hold."""
    cat = catalog or build_catalog()
    a_op, b_op, c_op = cat.A, cat.B, cat.C
    a2, b2 = compose(a_op, a_op), compose(b_op, b_op)
    ab = anticommutator(a_op, b_op)
    one = DiffOp.identity()
    hp = constants.as_hpolys()
    rhs_ac = (
        a2.scale(constants.alpha)
        + ab.scale(constants.gamma)
        + apply_h(hp["delta"], a_op, cat)
        + apply_h(hp["epsilon"], b_op, cat)
        + apply_h(hp["zeta"], one, cat)
    )
    rhs_bc = (
        a2.scale(constants.a)
        - b2.scale(constants.gamma)
        - ab.scale(constants.alpha)
        + apply_h(hp["d"], a_op, cat)
        - apply_h(hp["delta"], b_op, cat)
        + apply_h(hp["z"], one, cat)
    )
    return {
        "AC_relation": commutator(a_op, c_op) - rhs_ac,
        "BC_relation": commutator(b_op, c_op) - rhs_bc,
    }
