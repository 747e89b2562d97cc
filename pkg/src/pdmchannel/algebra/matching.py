"""Express an operator as a combination of basis operators with scalar coefficients."""

from __future__ import annotations

from collections.abc import Mapping

import structlog
import sympy
from sympy.polys.polyerrors import CoercionFailed

from pdmchannel.algebra.coeffring import SCALARS, ScalarPoly
from pdmchannel.algebra.diffalg import DiffOp
from pdmchannel.errors import NoMatch

log = structlog.get_logger(__name__)


def _coordinates(op: DiffOp) -> dict[tuple, ScalarPoly]:
    out = {}
    for ij, c in op.terms.items():
        for key, s in c.terms.items():
            out[(ij, key)] = s
    return out


def match_operator(target: DiffOp, basis: Mapping[str, DiffOp]) -> dict[str, ScalarPoly]:
    """Solve ``target = sum_n c_n basis[n]`` for polynomial scalars c_n.

    The linear system is solved over the field of rational functions in (q, k); the
    solution must be unique and polynomial, and the residual must vanish exactly.
    Raises NoMatch otherwise.
    """
    names = list(basis)
    unknowns = sympy.symbols(f"c0:{len(names)}")
    coords = [_coordinates(basis[name]) for name in names]
    target_coords = _coordinates(target)
    keys = set(target_coords)
    for c in coords:
        keys.update(c)

    equations = []
    for key in sorted(keys):
        expr = -target_coords[key].as_expr() if key in target_coords else sympy.Integer(0)
        for unknown, c in zip(unknowns, coords, strict=True):
            if key in c:
                expr += unknown * c[key].as_expr()
        equations.append(expr)

    solutions = sympy.linsolve(equations, unknowns)
    if solutions == sympy.S.EmptySet:
        raise NoMatch("operator is not in the span of the basis")
    solution = next(iter(solutions))
    result: dict[str, ScalarPoly] = {}
    for name, unknown, value in zip(names, unknowns, solution, strict=True):
        value = sympy.cancel(value)
        if value.free_symbols & set(unknowns):
            raise NoMatch(f"basis is linearly dependent (free coefficient for {name})")
        try:
            result[name] = SCALARS.from_expr(value)
        except (ValueError, CoercionFailed) as e:
            raise NoMatch(f"coefficient of {name} is not polynomial: {value}") from e

    residual = target - sum((basis[n].scale(result[n]) for n in names), DiffOp())
    if not residual.is_zero:
        raise NoMatch(f"residual with {residual.term_count()} terms after matching")
    log.debug("operator_matched", basis=names, equations=len(equations))
    return result
