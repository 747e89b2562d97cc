"""Leading-order coefficient map from the quantum structure constants to the classical ones.

With q = Q hbar, k = K / hbar and H -> H_c, every constant must start at order hbar^2;
the classical coefficient is minus that leading term, because C = i hbar C_c and each
commutator contributes a factor i hbar.
"""

from __future__ import annotations

import sympy

from pdmchannel.algebra.coeffring import SCALARS
from pdmchannel.classical.phase import PhaseFunction
from pdmchannel.errors import NoMatch
from pdmchannel.quadalg.casimir import printed_casimir
from pdmchannel.quadalg.constants import H_SYM, K_SYM, Q_SYM, StructureConstants, printed_constants

HBAR, QC, KC, HC = sympy.symbols("hbar Q K H_c")

_LIFT = 12


def classical_coefficient(expr: sympy.Expr) -> sympy.Expr:
    """-(coefficient of hbar^2) after rescaling; NoMatch if lower orders survive."""
    rescale = {Q_SYM: QC * HBAR, K_SYM: KC / HBAR, H_SYM: HC}
    scaled = sympy.expand(expr.subs(rescale, simultaneous=True))
    poly = sympy.Poly(sympy.expand(scaled * HBAR**_LIFT), HBAR)
    for (power,), coeff in poly.terms():
        if power < _LIFT + 2 and coeff != 0:
            raise NoMatch(f"term of order hbar^{power - _LIFT} in {expr}")
    return -poly.coeff_monomial(HBAR ** (_LIFT + 2))


def coefficient_map(constants: StructureConstants | None = None) -> dict[str, sympy.Expr]:
    """Classical constants derived from the quantum ones, plus the Casimir under "K"."""
    out = {
        name: classical_coefficient(expr)
        for name, expr in (constants or printed_constants()).as_exprs().items()
    }
    out["K"] = classical_coefficient(printed_casimir().as_expr())
    return out


def printed_classical() -> dict[str, sympy.Expr]:
    """alpha_c = gamma_c = -8Q^2, delta_c = 8Q^2 H_c, epsilon_c = -16Q^4 K^2, others 0."""
    zero = sympy.Integer(0)
    return {
        "alpha": -8 * QC**2,
        "gamma": -8 * QC**2,
        "a": zero,
        "delta": 8 * QC**2 * HC,
        "epsilon": -16 * QC**4 * KC**2,
        "zeta": zero,
        "d": zero,
        "z": zero,
        "K": zero,
    }


def as_phase_function(expr: sympy.Expr, hamiltonian: PhaseFunction) -> PhaseFunction:
    """Turn a polynomial in (Q, K, H_c) into a phase-space function, H_c -> hamiltonian."""
    qs, ks = SCALARS.symbols
    poly = sympy.Poly(sympy.expand(expr), HC)
    total = PhaseFunction()
    for (power,), coeff in poly.terms():
        scale = SCALARS.from_expr(sympy.expand(coeff.subs({QC: qs, KC: ks})))
        total = total + hamiltonian**power * scale
    return total
