"""Casimir operator of the quadratic algebra and its value as a polynomial in H."""

from __future__ import annotations

from functools import lru_cache

import numpy as np
import structlog
from sympy.polys.domains import QQ

from pdmchannel.algebra.coeffring import SCALARS, ScalarPoly
from pdmchannel.algebra.diffalg import DiffOp, anticommutator, commutator, compose, triple_sym
from pdmchannel.algebra.matching import match_operator
from pdmchannel.errors import NoMatch
from pdmchannel.model2d.catalog import OperatorCatalog, build_catalog
from pdmchannel.quadalg.constants import (
    H,
    HPoly,
    StructureConstants,
    _h_powers,
    apply_h,
    default_constants,
    from_h_coefficients,
    h_coefficients,
    h_operator,
    hk,
    hq,
)
from pdmchannel.wavefn.fields import SmoothField, interior_points

log = structlog.get_logger(__name__)

THIRD = QQ(1, 3)
TWO_THIRDS = QQ(2, 3)


def casimir_coefficients(constants: StructureConstants) -> dict[str, HPoly]:
    """Coefficient of each ordered monomial in

    K = C^2 + 2/3 a A^3 - 1/3 alpha {A,A,B} - 1/3 gamma {A,B,B}
        + (2/3 alpha^2 + d + 2/3 a gamma) A^2 + (1/3 alpha gamma - delta) {A,B}
        + (2/3 gamma^2 - epsilon) B^2 + (2/3 alpha delta + 1/3 a epsilon + 1/3 d gamma + 2z) A
        + (-1/3 alpha epsilon + 2/3 gamma delta - 2 zeta) B + 1/3 gamma z - 1/3 alpha zeta
    """
    c = constants.as_hpolys()
    al, ga, a = c["alpha"], c["gamma"], c["a"]
    de, ep, ze, d, z = c["delta"], c["epsilon"], c["zeta"], c["d"], c["z"]
    return {
        "CC": al.ring.one,
        "AAA": a * TWO_THIRDS,
        "AAB": -al * THIRD,
        "ABB": -ga * THIRD,
        "AA": al**2 * TWO_THIRDS + d + a * ga * TWO_THIRDS,
        "AB": al * ga * THIRD - de,
        "BB": ga**2 * TWO_THIRDS - ep,
        "A": al * de * TWO_THIRDS + a * ep * THIRD + d * ga * THIRD + 2 * z,
        "B": -al * ep * THIRD + ga * de * TWO_THIRDS - 2 * ze,
        "1": ga * z * THIRD - al * ze * THIRD,
    }


def casimir_operator(
    catalog: OperatorCatalog | None = None, constants: StructureConstants | None = None
) -> DiffOp:
    """K as a normal-ordered sixth-order operator."""
    if catalog is None and constants is None:
        return _default_casimir()
    cat = catalog or build_catalog()
    return _build_casimir(cat, constants or default_constants())


@lru_cache(maxsize=1)
def _default_casimir() -> DiffOp:
    return _build_casimir(build_catalog(), default_constants())


def _build_casimir(cat: OperatorCatalog, constants: StructureConstants) -> DiffOp:
    a_op, b_op, c_op = cat.A, cat.B, cat.C
    a2 = compose(a_op, a_op)
    monomials = {
        "CC": lambda: compose(c_op, c_op),
        "AAA": lambda: compose(a2, a_op),
        "AAB": lambda: triple_sym(a_op, a_op, b_op),
        "ABB": lambda: triple_sym(a_op, b_op, b_op),
        "AA": lambda: a2,
        "AB": lambda: anticommutator(a_op, b_op),
        "BB": lambda: compose(b_op, b_op),
        "A": lambda: a_op,
        "B": lambda: b_op,
        "1": DiffOp.identity,
    }
    total = DiffOp()
    for name, coeff in casimir_coefficients(constants).items():
        if coeff.is_zero:
            continue
        total = total + apply_h(coeff, monomials[name](), cat)
    log.debug("casimir_built", terms=total.term_count(), order=total.order)
    return total


def printed_casimir() -> HPoly:
    """-4 q^4 [2 q^2 (7k - 6) - 3H] (2 q^2 k - H)."""
    return -4 * hq**4 * (2 * hq**2 * (7 * hk - 6) - 3 * H) * (2 * hq**2 * hk - H)


def casimir_polynomial(
    catalog: OperatorCatalog | None = None, constants: StructureConstants | None = None
) -> HPoly:
    """K as a polynomial in H, read off by matching the operator against {1, H, H^2, H^3}."""
    cat = catalog or build_catalog()
    op = casimir_operator(catalog, constants)
    powers = _h_powers(cat, 3)
    basis = {f"H{n}": p for n, p in enumerate(powers)}
    coeffs = match_operator(op, basis)
    return from_h_coefficients(*(coeffs[f"H{n}"] for n in range(4)))


def casimir_h_coefficients(poly: HPoly) -> tuple[ScalarPoly, ScalarPoly, ScalarPoly, ScalarPoly]:
    """(k_0, k_1, k_2, k_3) of K = k_0 + k_1 H + k_2 H^2 + k_3 H^3."""
    coeffs = h_coefficients(poly)
    if len(coeffs) > 4:
        raise NoMatch(f"Casimir of degree {len(coeffs) - 1} in H")
    coeffs += [SCALARS.zero] * (4 - len(coeffs))
    return tuple(coeffs)  # type: ignore[return-value]


def casimir_residual(
    catalog: OperatorCatalog | None = None, constants: StructureConstants | None = None
) -> DiffOp:
    """K - K_printed(H) in normal form."""
    return casimir_operator(catalog, constants) - h_operator(printed_casimir(), catalog)


def casimir_commutators(
    catalog: OperatorCatalog | None = None, constants: StructureConstants | None = None
) -> dict[str, DiffOp]:
    cat = catalog or build_catalog()
    op = casimir_operator(catalog, constants)
    return {"K_A_commute": commutator(op, cat.A), "K_B_commute": commutator(op, cat.B)}


def casimir_value(energy: float, k: float, q: float) -> float:
    """Eigenvalue of K on the level of energy E."""
    return -4 * q**4 * (2 * q**2 * (7 * k - 6) - 3 * energy) * (2 * q**2 * k - energy)


def casimir_on_field(
    field: SmoothField,
    *,
    k: float,
    q: float,
    points: int = 12,
    seed: int = 0,
    catalog: OperatorCatalog | None = None,
    constants: StructureConstants | None = None,
) -> np.ndarray:
    """Pointwise ratio (K f)/f at random interior points."""
    x, y = interior_points(q, points, seed)
    values = field(x, y)
    op = casimir_operator(catalog, constants)
    return np.asarray(op.apply(field, x, y, q=q, k=k)) / values
