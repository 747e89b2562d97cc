"""Finite-dimensional representations through deformed parafermionic oscillators.

A is diagonal, A = A(N + u), and B = sigma(N + u) + b^dag rho(N + u) + rho(N + u) b with
b^dag |m> = sqrt(Phi(m+1)) |m+1>. A representation of order p needs Phi(0) = Phi(p+1) = 0
and Phi(m) > 0 for 0 < m <= p.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import structlog
import sympy
from sympy import Rational

from pdmchannel.errors import InvalidBranch, InvalidParam, PoleInSigma
from pdmchannel.quadalg.constants import K_SYM, Q_SYM, StructureConstants, printed_constants
from pdmchannel.wavefn.fields import exact

log = structlog.get_logger(__name__)

X_SYM = sympy.Symbol("x")
U_SYM = sympy.Symbol("u")
E_SYM = sympy.Symbol("E")

U_CHOICES: dict[str, sympy.Expr] = {"k/2": K_SYM / 2, "(k+1)/2": (K_SYM + 1) / 2}
K_SAMPLES = (Rational(1, 4), Rational(1, 2), Rational(1), Rational(2), Rational(5))
REALIZATION_TOL = 1e-10


def structure_function_general(
    constants: StructureConstants,
    u: sympy.Expr,
    casimir: sympy.Expr,
    *,
    energy: sympy.Expr = E_SYM,
    x: sympy.Expr = X_SYM,
) -> sympy.Expr:
    """Phi(x) for arbitrary structure constants, with K the Casimir eigenvalue."""
    c = constants.as_exprs(energy)
    al, ga, a = c["alpha"], c["gamma"], c["a"]
    de, ep, ze, d, z = c["delta"], c["epsilon"], c["zeta"], c["d"], c["z"]
    w = x + u
    s = 2 * w
    return (
        -3072 * ga**6 * casimir * (s - 1) ** 2
        - 48
        * ga**6
        * (al**2 * ep - al * ga * de + a * ga * ep - d * ga**2)
        * (s - 3)
        * (s - 1) ** 4
        * (s + 1)
        + ga**8 * (3 * al**2 + 4 * a * ga) * (s - 3) ** 2 * (s - 1) ** 4 * (s + 1) ** 2
        + 768 * (al * ep**2 - 2 * ga * de * ep + 4 * ga**2 * ze) ** 2
        + 32
        * ga**4
        * (
            3 * al**2 * ep**2
            - 6 * al * ga * de * ep
            + 2 * a * ga * ep**2
            + 2 * ga**2 * de**2
            - 4 * d * ga**2 * ep
            + 8 * ga**3 * z
            + 4 * al * ga**2 * ze
        )
        * (s - 1) ** 2
        * (12 * w**2 - 12 * w - 1)
        - 256
        * ga**2
        * (
            3 * al**2 * ep**3
            - 9 * al * ga * de * ep**2
            + a * ga * ep**3
            + 6 * ga**2 * de**2 * ep
            - 3 * d * ga**2 * ep**2
            + 2 * ga**4 * de**2
            + 2 * d * ga**4 * ep
            + 12 * ga**3 * ep * z
            - 4 * ga**5 * z
            + 12 * al * ga**2 * ep * ze
            - 12 * ga**3 * de * ze
            + 4 * al * ga**4 * ze
        )
        * (s - 1) ** 2
    )


def delta_sq(energy: sympy.Expr, k: sympy.Expr = K_SYM, q: sympy.Expr = Q_SYM) -> sympy.Expr:
    """Delta^2 = (k - 1/2)^2 + E/q^2."""
    return (k - Rational(1, 2)) ** 2 + energy / q**2


def structure_function_factorized(
    u: sympy.Expr,
    energy: sympy.Expr = E_SYM,
    *,
    x: sympy.Expr = X_SYM,
    k: sympy.Expr = K_SYM,
    q: sympy.Expr = Q_SYM,
) -> sympy.Expr:
    """3 2^30 q^20 (2x+2u+k-1)(2x+2u+k-2)(2x+2u-k)(2x+2u-k-1)
    [(2x+2u-1/2)^2 - Delta^2][(2x+2u-3/2)^2 - Delta^2]."""
    w = 2 * x + 2 * u
    d2 = delta_sq(energy, k, q)
    half = Rational(1, 2)
    return (
        3
        * 2**30
        * q**20
        * (w + k - 1)
        * (w + k - 2)
        * (w - k)
        * (w - k - 1)
        * ((w - half) ** 2 - d2)
        * ((w - 3 * half) ** 2 - d2)
    )


def realization_a(w: sympy.Expr, constants: dict[str, sympy.Expr]) -> sympy.Expr:
    """A(w) = gamma/2 [w^2 - 1/4 - epsilon/gamma^2] with w = m + u."""
    ga, ep = constants["gamma"], constants["epsilon"]
    return ga / 2 * (w**2 - Rational(1, 4) - ep / ga**2)


def realization_sigma(w: sympy.Expr, constants: dict[str, sympy.Expr]) -> sympy.Expr:
    al, ga = constants["alpha"], constants["gamma"]
    de, ep, ze = constants["delta"], constants["epsilon"], constants["zeta"]
    shifted = w**2 - Rational(1, 4)
    return (
        -al / 4 * shifted
        + (al * ep - ga * de) / (2 * ga**2)
        - (al * ep**2 - 2 * ga * de * ep + 4 * ga**2 * ze) / (4 * ga**4) / shifted
    )


def realization_rho_sq(w: sympy.Expr, constants: dict[str, sympy.Expr]) -> sympy.Expr:
    """rho^2(w) = 1 / (3 2^12 gamma^8 w (w+1) (2w+1)^2)."""
    ga = constants["gamma"]
    return 1 / (3 * 2**12 * ga**8 * w * (w + 1) * (2 * w + 1) ** 2)


def a_closed_form(m: sympy.Expr, u: sympy.Expr, q: sympy.Expr = Q_SYM) -> sympy.Expr:
    """A(m) = q^2 (2m + 2u - k)(2m + 2u + k)."""
    return q**2 * (2 * m + 2 * u - K_SYM) * (2 * m + 2 * u + K_SYM)


def branch_energy(p: int, u_choice: str, sign: int) -> sympy.Expr:
    """E = q^2 (2p + 3/2 +- 1/2)(2p + 2k + 1/2 +- 1/2) for u = k/2,
    E = q^2 (2p + 5/2 +- 1/2)(2p + 2k + 3/2 +- 1/2) for u = (k+1)/2."""
    _check_choice(u_choice, sign)
    s = Rational(sign, 2)
    shift = 0 if u_choice == "k/2" else 1
    return Q_SYM**2 * (2 * p + Rational(3, 2) + shift + s) * (
        2 * p + 2 * K_SYM + Rational(1, 2) + shift + s
    )


def branch_structure_function(
    x: sympy.Expr, p: int, u_choice: str, sign: int
) -> sympy.Expr:
    """The structure function of each branch in fully factorized form."""
    _check_choice(u_choice, sign)
    k = K_SYM
    half, quarter = Rational(1, 2), Rational(1, 4)
    s2, s4 = Rational(sign, 2), Rational(sign, 4)
    lead = 3 * 2**38 * Q_SYM**20 * x * (p + 1 - x) * (p + 1 + s2 - x)
    if u_choice == "k/2":
        rest = (
            (x - half)
            * (x + k - half)
            * (x + k - 1)
            * (x + p + k + quarter + s4)
            * (x + p + k - quarter + s4)
        )
    else:
        rest = (
            (x + half)
            * (x + k)
            * (x + k - half)
            * (x + p + k + 5 * quarter + s4)
            * (x + p + k + 3 * quarter + s4)
        )
    return lead * rest


def _check_choice(u_choice: str, sign: int) -> None:
    if u_choice not in U_CHOICES:
        raise InvalidParam(f"u must be one of {list(U_CHOICES)}, got {u_choice!r}")
    if sign not in (1, -1):
        raise InvalidParam(f"sign must be +1 or -1, got {sign}")


def admissible(p: int, u: sympy.Expr, energy: sympy.Expr) -> tuple[sympy.Expr, ...]:
    """Phi(0..p+1) for the given u and E; raises InvalidBranch unless they define an irrep.

    Positivity of Phi(1..p) and of A(0..p) is checked exactly at the sampled k.
    """
    if p < 0:
        raise InvalidParam(f"p must be >= 0, got {p}")
    phi = tuple(
        sympy.expand(structure_function_factorized(u, energy, x=sympy.Integer(m)))
        for m in range(p + 2)
    )
    if phi[0] != 0:
        raise InvalidBranch(f"Phi(0) = {phi[0]} is not zero")
    if phi[p + 1] != 0:
        raise InvalidBranch(f"Phi(p+1) = {phi[p + 1]} is not zero for p = {p}")
    for kv in K_SAMPLES:
        at = {K_SYM: kv, Q_SYM: 1}
        for m in range(1, p + 1):
            value = phi[m].subs(at)
            if not value > 0:
                raise InvalidBranch(f"Phi({m}) = {value} <= 0 at k = {kv}")
        for m in range(p + 1):
            value = a_closed_form(sympy.Integer(m), u).subs(at)
            if value < 0:
                raise InvalidBranch(f"A({m}) = {value} < 0 at k = {kv}")
    return phi


@dataclass(frozen=True)
class ParafermionRep:
    p: int
    u_choice: str
    sign: int
    u: sympy.Expr
    energy: sympy.Expr
    phi: tuple[sympy.Expr, ...]

    @property
    def dimension(self) -> int:
        return self.p + 1

    @property
    def N(self) -> int:
        """Level whose multiplet has the same dimension."""
        return 2 * self.p if self.u_choice == "k/2" else 2 * self.p + 1

    def a_values(self) -> tuple[sympy.Expr, ...]:
        return tuple(
            sympy.expand(a_closed_form(sympy.Integer(m), self.u)) for m in range(self.p + 1)
        )


def representation(p: int, u_choice: str, sign: int = 1) -> ParafermionRep:
    energy = sympy.expand(branch_energy(p, u_choice, sign))
    u = U_CHOICES[u_choice]
    phi = admissible(p, u, energy)
    log.debug("parafermion_rep", p=p, u=u_choice, sign=sign, energy=str(energy))
    return ParafermionRep(p=p, u_choice=u_choice, sign=sign, u=u, energy=energy, phi=phi)


def level_energy(N: int | sympy.Expr) -> sympy.Expr:
    """E_N = q^2 (N + 2)(N + 2k + 1)."""
    return Q_SYM**2 * (N + 2) * (N + 2 * K_SYM + 1)


@dataclass(frozen=True)
class PhysicalLevel:
    N: int
    energy: sympy.Expr
    rejected_energy: sympy.Expr
    rejected_matches_level: bool


def select_physical(p: int, u_choice: str) -> PhysicalLevel:
    """Keep the sign whose energy is E_N for the level N fixed by (p, u).

    u = k/2 pairs with N = 2p and u = (k+1)/2 with N = 2p + 1. Only the upper sign
    reproduces E_N; the lower sign is reported as rejected.
    """
    upper = representation(p, u_choice, 1)
    lower = representation(p, u_choice, -1)
    target = sympy.expand(level_energy(upper.N))
    if sympy.expand(upper.energy - target) != 0:
        raise InvalidBranch(f"upper-sign energy {upper.energy} differs from E_{upper.N}")
    lower_matches = sympy.expand(lower.energy - target) == 0
    if lower_matches:
        log.warning("lower_branch_matches_level", p=p, u=u_choice)
    return PhysicalLevel(
        N=upper.N,
        energy=upper.energy,
        rejected_energy=lower.energy,
        rejected_matches_level=lower_matches,
    )


def _numeric(expr: sympy.Expr, k: float, q: float) -> float:
    value = sympy.cancel(expr).subs({K_SYM: exact(k), Q_SYM: exact(q)})
    if value.has(sympy.zoo, sympy.nan, sympy.oo):
        raise PoleInSigma(f"non-removable pole at k = {k}")
    return float(value)


def realization_matrices(
    rep: ParafermionRep, k: float, q: float, constants: StructureConstants | None = None
) -> tuple[np.ndarray, np.ndarray]:
    """(p+1) x (p+1) matrices of A and B in the parafermionic Fock basis."""
    c = (constants or printed_constants()).as_exprs(rep.energy)
    size = rep.dimension
    a_mat = np.zeros((size, size))
    b_mat = np.zeros((size, size))
    for m in range(size):
        w = m + rep.u
        a_mat[m, m] = _numeric(realization_a(w, c), k, q)
        b_mat[m, m] = _numeric(realization_sigma(w, c), k, q)
        if m + 1 < size:
            rho = np.sqrt(_numeric(realization_rho_sq(w, c), k, q))
            off = rho * np.sqrt(_numeric(rep.phi[m + 1], k, q))
            b_mat[m, m + 1] = b_mat[m + 1, m] = off
    return a_mat, b_mat


def realization_residuals(
    rep: ParafermionRep, k: float, q: float, constants: StructureConstants | None = None
) -> dict[str, float]:
    """Relative residuals of both defining relations on the Fock matrices at H = E."""
    consts = constants or printed_constants()
    a_mat, b_mat = realization_matrices(rep, k, q, consts)
    c = {name: _numeric(v, k, q) for name, v in consts.as_exprs(rep.energy).items()}
    eye = np.eye(rep.dimension)
    c_mat = a_mat @ b_mat - b_mat @ a_mat
    a2, b2 = a_mat @ a_mat, b_mat @ b_mat
    ab = a_mat @ b_mat + b_mat @ a_mat
    rhs_ac = [
        c["alpha"] * a2,
        c["gamma"] * ab,
        c["delta"] * a_mat,
        c["epsilon"] * b_mat,
        c["zeta"] * eye,
    ]
    rhs_bc = [
        c["a"] * a2,
        -c["gamma"] * b2,
        -c["alpha"] * ab,
        c["d"] * a_mat,
        -c["delta"] * b_mat,
        c["z"] * eye,
    ]
    out = {}
    for name, lhs, parts in (
        ("AC_relation", a_mat @ c_mat - c_mat @ a_mat, rhs_ac),
        ("BC_relation", b_mat @ c_mat - c_mat @ b_mat, rhs_bc),
    ):
        scale = max([float(np.max(np.abs(lhs)))] + [float(np.max(np.abs(t))) for t in parts])
        residual = float(np.max(np.abs(lhs - sum(parts))))
        out[name] = residual / scale if scale else residual
    log.debug("realization_checked", p=rep.p, u=rep.u_choice, k=k, **out)
    return out
