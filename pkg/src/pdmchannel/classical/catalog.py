"""Classical limit of the planar model and its quadratic Poisson algebra."""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import structlog

from pdmchannel.algebra.coeffring import COS, COSH, CSCH, SIN, SINH, k, q
from pdmchannel.classical.limit import as_phase_function, coefficient_map
from pdmchannel.classical.phase import ComplexPhase, PhaseFunction, poisson, poisson_jacobi
from pdmchannel.errors import UnknownIdentity
from pdmchannel.models.report import IdentityReport

log = structlog.get_logger(__name__)

PX = PhaseFunction.momentum(1, 0)
PY = PhaseFunction.momentum(0, 1)


def _f(c) -> PhaseFunction:
    return PhaseFunction.coordinate(c)


@dataclass(frozen=True)
class ClassicalCatalog:
    """Classical counterparts of the operator catalog (A_c = R_c, B_c = L_c)."""

    H: PhaseFunction
    L: PhaseFunction
    R: PhaseFunction
    Rbar: PhaseFunction
    eta: ComplexPhase
    etabar: ComplexPhase
    C: PhaseFunction
    C_imag: PhaseFunction
    R_printed: PhaseFunction
    Rbar_printed: PhaseFunction

    @property
    def A(self) -> PhaseFunction:
        return self.R

    @property
    def B(self) -> PhaseFunction:
        return self.L


def _eta(trig_a, trig_b, sign: int) -> ComplexPhase:
    """i(cosh trig_a P_X - sign sinh trig_b P_Y) - QK csch trig_a."""
    return ComplexPhase(
        re=_f(CSCH * trig_a * (-(q * k))),
        im=_f(COSH * trig_a) * PX + _f(SINH * trig_b * (-sign)) * PY,
    )


def _r_printed(trig_a, trig_b, sign: int) -> PhaseFunction:
    """cosh^2 a^2 P_X^2 - 2 sign sinh cosh a b P_X P_Y + sinh^2 b^2 P_Y^2 + Q^2K^2 csch^2 a^2."""
    return (
        _f(COSH * COSH * trig_a * trig_a) * PX**2
        + _f(SINH * COSH * trig_a * trig_b * (-2 * sign)) * PX * PY
        + _f(SINH * SINH * trig_b * trig_b) * PY**2
        + _f(CSCH * CSCH * trig_a * trig_a * (q**2 * k**2))
    )


@lru_cache(maxsize=1)
def classical_catalog() -> ClassicalCatalog:
    h = _f(COSH * COSH) * (PX**2 + PY**2) + _f(CSCH * CSCH * (q**2 * k**2))
    eta = _eta(SIN, COS, 1)
    etabar = _eta(COS, SIN, -1)
    r = eta * eta.conj()
    rbar = etabar * etabar.conj()
    c = eta.conj() * etabar + etabar.conj() * eta
    c = ComplexPhase(c.re * PY * (2 * q), c.im * PY * (2 * q))
    return ClassicalCatalog(
        H=h,
        L=PY**2,
        R=r.re,
        Rbar=rbar.re,
        eta=eta,
        etabar=etabar,
        C=c.re,
        C_imag=c.im,
        R_printed=_r_printed(SIN, COS, 1),
        Rbar_printed=_r_printed(COS, SIN, -1),
    )


def classical_casimir(cat: ClassicalCatalog, consts: dict[str, PhaseFunction]) -> PhaseFunction:
    """C^2 + 2/3 a A^3 - 2 alpha A^2 B - 2 gamma A B^2 + d A^2 - 2 delta A B - epsilon B^2
    + 2 z A - 2 zeta B, the plain-product leading order of the quantum Casimir."""
    a_c, b_c = cat.A, cat.B
    return (
        cat.C * cat.C
        + consts["a"] * a_c**3 * Fraction(2, 3)
        - consts["alpha"] * a_c * a_c * b_c * 2
        - consts["gamma"] * a_c * b_c * b_c * 2
        + consts["d"] * a_c * a_c
        - consts["delta"] * a_c * b_c * 2
        - consts["epsilon"] * b_c * b_c
        + consts["z"] * a_c * 2
        - consts["zeta"] * b_c * 2
    )


def _phase_constants(cat: ClassicalCatalog) -> dict[str, PhaseFunction]:
    return {name: as_phase_function(expr, cat.H) for name, expr in coefficient_map().items()}


def _residuals() -> dict[str, Callable[[ClassicalCatalog, dict], PhaseFunction]]:
    return {
        "sum_rule": lambda c, _: c.H - (c.L + c.R + c.Rbar),
        "R_factorized": lambda c, _: c.R - c.R_printed,
        "Rbar_factorized": lambda c, _: c.Rbar - c.Rbar_printed,
        "C_real": lambda c, _: c.C_imag,
        "AB_bracket": lambda c, _: poisson(c.A, c.B) - c.C,
        "H_L_commute": lambda c, _: poisson(c.H, c.L),
        "H_R_commute": lambda c, _: poisson(c.H, c.R),
        "H_Rbar_commute": lambda c, _: poisson(c.H, c.Rbar),
        "AC_relation": lambda c, k_: poisson(c.A, c.C)
        - (
            k_["alpha"] * c.A * c.A
            + k_["gamma"] * c.A * c.B * 2
            + k_["delta"] * c.A
            + k_["epsilon"] * c.B
            + k_["zeta"]
        ),
        "BC_relation": lambda c, k_: poisson(c.B, c.C)
        - (
            k_["a"] * c.A * c.A
            - k_["gamma"] * c.B * c.B
            - k_["alpha"] * c.A * c.B * 2
            + k_["d"] * c.A
            - k_["delta"] * c.B
            + k_["z"]
        ),
        "casimir_vanishes": lambda c, k_: classical_casimir(c, k_) - k_["K"],
        "jacobi": lambda c, _: poisson_jacobi(c.A, c.B, c.C),
    }


POISSON_IDENTITIES: tuple[str, ...] = tuple(_residuals())


def poisson_residual(name: str, catalog: ClassicalCatalog | None = None) -> PhaseFunction:
    builders = _residuals()
    if name not in builders:
        raise UnknownIdentity(name)
    cat = catalog or classical_catalog()
    return builders[name](cat, _phase_constants(cat))


def verify_poisson_algebra(catalog: ClassicalCatalog | None = None) -> list[IdentityReport]:
    """Every classical identity as an exact residual; holds iff the residual is empty."""
    cat = catalog or classical_catalog()
    consts = _phase_constants(cat)
    out = []
    for name, build in _residuals().items():
        res = build(cat, consts)
        report = IdentityReport(id=name, holds=res.is_zero, residual_term_count=res.term_count())
        if not report.holds:
            log.warning(
                "poisson_identity_failed", id=name, residual_terms=report.residual_term_count
            )
        out.append(report)
    log.info("poisson_algebra_verified", passed=sum(r.holds for r in out), total=len(out))
    return out
