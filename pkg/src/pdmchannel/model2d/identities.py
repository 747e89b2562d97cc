"""Exact operator identity suite of the two-dimensional model."""

from __future__ import annotations

from collections.abc import Callable

import structlog

from pdmchannel.algebra.coeffring import ONE, k, q
from pdmchannel.algebra.diffalg import DiffOp, commutator, compose
from pdmchannel.algebra.matching import match_operator
from pdmchannel.errors import UnknownIdentity
from pdmchannel.model2d.catalog import OperatorCatalog, build_catalog, c_printed
from pdmchannel.models.report import IdentityReport

log = structlog.get_logger(__name__)


def _h1(cat: OperatorCatalog) -> DiffOp:
    """H_1 = H^(k+1) + 2 q^2 k."""
    return cat.H.shift_k(1) + DiffOp.multiplication(2 * q**2 * k)


def _residuals() -> dict[str, Callable[[OperatorCatalog], DiffOp]]:
    two_q2k = 2 * q**2 * k
    return {
        "H_L_commute": lambda c: commutator(c.H, c.L),
        "H_R_commute": lambda c: commutator(c.H, c.R),
        "H_Rbar_commute": lambda c: commutator(c.H, c.Rbar),
        "eta_intertwining": lambda c: compose(c.eta, c.H) - compose(_h1(c), c.eta),
        "etabar_intertwining": lambda c: compose(c.etabar, c.H) - compose(_h1(c), c.etabar),
        "eta_dag_intertwining": lambda c: compose(c.H, c.eta_dag) - compose(c.eta_dag, _h1(c)),
        "sum_rule": lambda c: c.H - (c.L + c.R + c.Rbar + DiffOp.multiplication(two_q2k)),
        "R_factorized": lambda c: c.R - c.R_printed,
        "Rbar_factorized": lambda c: c.Rbar - c.Rbar_printed,
        "dy_eta": lambda c: commutator(c.dy, c.eta) - c.etabar.scale(q),
        "dy_etabar": lambda c: commutator(c.dy, c.etabar) + c.eta.scale(q),
        "eta_etabar": lambda c: commutator(c.eta, c.etabar) - c.dy.scale(q),
        "dy_eta_dag": lambda c: commutator(c.dy, c.eta_dag) - c.etabar_dag.scale(q),
        "dy_etabar_dag": lambda c: commutator(c.dy, c.etabar_dag) + c.eta_dag.scale(q),
        "eta_dag_etabar_dag": lambda c: commutator(c.eta_dag, c.etabar_dag) - c.dy.scale(q),
        "eta_eta_dag": lambda c: commutator(c.eta, c.eta_dag)
        - DiffOp.multiplication((ONE + c.xi * c.xi) * two_q2k),
        "etabar_etabar_dag": lambda c: commutator(c.etabar, c.etabar_dag)
        - DiffOp.multiplication((ONE + c.xibar * c.xibar) * two_q2k),
        "eta_etabar_dag": lambda c: commutator(c.eta, c.etabar_dag)
        - (c.dy.scale(-q) + DiffOp.multiplication(c.xi * c.xibar * two_q2k)),
        "xi_definition": lambda c: c.eta
        + c.eta_dag
        + DiffOp.multiplication(c.xi * (2 * q * k)),
        "xibar_definition": lambda c: c.etabar
        + c.etabar_dag
        + DiffOp.multiplication(c.xibar * (2 * q * k)),
        "C_expression": lambda c: c.C - c_printed(c),
    }


IDENTITIES: tuple[str, ...] = tuple(_residuals())


def verify_identity(name: str, catalog: OperatorCatalog | None = None) -> IdentityReport:
    """Residual LHS - RHS in normal form; the identity holds iff it is empty."""
    builders = _residuals()
    if name not in builders:
        raise UnknownIdentity(name)
    cat = catalog or build_catalog()
    residual = builders[name](cat)
    report = IdentityReport(
        id=name,
        holds=residual.is_zero,
        residual_term_count=residual.term_count(),
    )
    if report.holds:
        log.debug("identity_checked", id=name)
    else:
        log.warning("identity_failed", id=name, residual_terms=report.residual_term_count)
    return report


def residual(name: str, catalog: OperatorCatalog | None = None) -> DiffOp:
    builders = _residuals()
    if name not in builders:
        raise UnknownIdentity(name)
    return builders[name](catalog or build_catalog())


def verify_all(catalog: OperatorCatalog | None = None) -> list[IdentityReport]:
    cat = catalog or build_catalog()
    return [verify_identity(name, cat) for name in IDENTITIES]


def sl2_structure(dagger: bool = False, catalog: OperatorCatalog | None = None) -> dict:
    """Pairwise commutators of {d_y, eta, etabar} (or the daggered set) in their own span.

    Returns ``{(left, right): {generator: scalar}}``; raises NoMatch if the span does not
    close.
    """
    cat = catalog or build_catalog()
    if dagger:
        gens = {"dy": cat.dy, "eta_dag": cat.eta_dag, "etabar_dag": cat.etabar_dag}
    else:
        gens = {"dy": cat.dy, "eta": cat.eta, "etabar": cat.etabar}
    names = list(gens)
    out = {}
    for i, left in enumerate(names):
        for right in names[i + 1 :]:
            out[(left, right)] = match_operator(commutator(gens[left], gens[right]), gens)
    return out


def jacobi_residual(a: DiffOp, b: DiffOp, c: DiffOp) -> DiffOp:
    return (
        commutator(a, commutator(b, c))
        + commutator(b, commutator(c, a))
        + commutator(c, commutator(a, b))
    )
