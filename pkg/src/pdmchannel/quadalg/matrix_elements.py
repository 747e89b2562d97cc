"""Matrix elements of L in the basis where H and R are diagonal.

L Psi_{N,N-nu} = sigma_nu Psi_{N,N-nu} + tau_nu Psi_{N,N-nu+2} + tau_{nu+2} Psi_{N,N-nu-2},
with tau_nu = s_nu rho_{nu-2} sqrt(Phi_nu). Blocks are indexed by nu = N mod 2, ..., N.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

import numpy as np
import structlog
import sympy

from pdmchannel.errors import InvalidParam, PhaseMismatch, PoleInSigma
from pdmchannel.model2d.catalog import build_catalog
from pdmchannel.models.report import CheckResult
from pdmchannel.quadalg.constants import K_SYM, Q_SYM, printed_constants
from pdmchannel.quadalg.parafermion import realization_rho_sq
from pdmchannel.wavefn.basis import OperatorImage, second_basis
from pdmchannel.wavefn.fields import check_params, exact
from pdmchannel.wavefn.integrate import inner_products

log = structlog.get_logger(__name__)

MATRIX_TOL = 1e-8


def _check_nu(N: int, nu: int) -> None:
    if N < 0:
        raise InvalidParam(f"N must be >= 0, got {N}")
    if not 0 <= nu <= N or (N - nu) % 2:
        raise InvalidParam(f"need 0 <= nu <= N with nu = N mod 2, got N={N}, nu={nu}")


def _substitute(expr: sympy.Expr, k: Any, q: Any, what: str) -> sympy.Expr:
    """Cancel in (q, k) first so removable poles disappear, then substitute."""
    expr = sympy.cancel(sympy.together(expr))
    subs = {}
    if k is not None:
        subs[K_SYM] = exact(k)
    if q is not None:
        subs[Q_SYM] = exact(q)
    if not subs:
        return expr
    _, den = sympy.fraction(expr)
    if den.subs(subs) == 0:
        raise PoleInSigma(f"{what} has a pole at k = {k}")
    return expr.subs(subs)


def phi_nu(N: int, nu: int, k: Any = None, q: Any = None) -> sympy.Expr:
    """3 2^30 q^20 nu(nu-1)(nu+2k-1)(nu+2k-2)(N+nu+2k)(N+nu+2k+1)(N-nu+2)(N-nu+3)."""
    _check_nu(N, nu)
    kk, qq = K_SYM, Q_SYM
    expr = (
        3
        * 2**30
        * qq**20
        * nu
        * (nu - 1)
        * (nu + 2 * kk - 1)
        * (nu + 2 * kk - 2)
        * (N + nu + 2 * kk)
        * (N + nu + 2 * kk + 1)
        * (N - nu + 2)
        * (N - nu + 3)
    )
    return _substitute(expr, k, q, "Phi_nu")


def sigma_nu(N: int, nu: int, k: Any = None, q: Any = None) -> sympy.Expr:
    """Diagonal element <Psi_{N,N-nu}, L Psi_{N,N-nu}>."""
    _check_nu(N, nu)
    kk, qq = K_SYM, Q_SYM
    lo, hi = nu + kk - 1, nu + kk + 1
    bracket = (
        -(lo**2) * hi**2
        + (N**2 + (2 * kk + 3) * N + 2 * kk**2 + 2 * kk + 1) * lo * hi
        - kk * (kk - 1) * (N + kk + 1) * (N + kk + 2)
    )
    return _substitute(qq**2 * bracket / (2 * lo * hi), k, q, "sigma_nu")


def tau_sq_nu(N: int, nu: int, k: Any = None, q: Any = None) -> sympy.Expr:
    """Square of the coupling between Psi_{N,N-nu} and Psi_{N,N-nu+2}."""
    _check_nu(N, nu)
    kk, qq = K_SYM, Q_SYM
    num = (
        nu
        * (nu - 1)
        * (nu + 2 * kk - 1)
        * (nu + 2 * kk - 2)
        * (N - nu + 2)
        * (N - nu + 3)
        * (N + nu + 2 * kk)
        * (N + nu + 2 * kk + 1)
    )
    den = 16 * (nu + kk - 2) * (nu + kk - 1) ** 2 * (nu + kk)
    return _substitute(qq**4 * num / den, k, q, "tau_nu")


def rho_sq_nu(nu: int) -> sympy.Expr:
    """rho^2 at m + u = (nu + k - 2)/2, the factor pairing with Phi_nu."""
    constants = printed_constants().as_exprs()
    return realization_rho_sq((nu + K_SYM - 2) / 2, constants)


def tau_scale_consistent(N: int, nu: int) -> bool:
    """rho_{nu-2}^2 Phi_nu == tau_nu^2 exactly, so the printed overall constants agree."""
    _check_nu(N, nu)
    if nu < 2:
        return phi_nu(N, nu) == 0 and tau_sq_nu(N, nu) == 0
    return sympy.cancel(rho_sq_nu(nu) * phi_nu(N, nu) - tau_sq_nu(N, nu)) == 0


def n4_block_printed() -> dict[str, dict[int, sympy.Expr]]:
    """The N = 4 block in closed form: diagonal sigma and squared couplings by nu."""
    kk, qq = K_SYM, Q_SYM
    return {
        "sigma": {
            0: 5 * qq**2 * (kk + 3) / (kk + 1),
            2: qq**2 * (17 * kk**2 + 76 * kk + 39) / ((kk + 1) * (kk + 3)),
            4: qq**2 * (13 * kk + 21) / (kk + 3),
        },
        "tau_sq": {
            2: 10 * qq**4 * (kk + 3) * (2 * kk + 1) * (2 * kk + 7) / ((kk + 1) ** 2 * (kk + 2)),
            4: 18 * qq**4 * (kk + 1) * (2 * kk + 3) * (2 * kk + 9) / ((kk + 2) * (kk + 3) ** 2),
        },
    }


def verify_printed_n4() -> list[CheckResult]:
    printed = n4_block_printed()
    out = []
    for nu, expr in printed["sigma"].items():
        holds = sympy.cancel(sigma_nu(4, nu) - expr) == 0
        out.append(CheckResult.exact(f"n4_sigma_{nu}", holds))
    for nu, expr in printed["tau_sq"].items():
        holds = sympy.cancel(tau_sq_nu(4, nu) - expr) == 0
        out.append(CheckResult.exact(f"n4_tau_sq_{nu}", holds))
    return out


@dataclass(frozen=True)
class LMatrixBlock:
    N: int
    k: float
    q: float
    nus: tuple[int, ...]
    sigma: tuple[float, ...]
    tau: tuple[float, ...]
    phases: tuple[int, ...] = field(default=())

    def matrix(self) -> np.ndarray:
        size = len(self.nus)
        out = np.diag(np.asarray(self.sigma, dtype=float))
        signs = self.phases or (1,) * (size - 1)
        for i in range(1, size):
            out[i - 1, i] = out[i, i - 1] = signs[i - 1] * self.tau[i - 1]
        return out

    @property
    def trace(self) -> float:
        return float(sum(self.sigma))

    def eigenvalues(self) -> np.ndarray:
        return np.linalg.eigvalsh(self.matrix())

    def expected_eigenvalues(self) -> np.ndarray:
        """(l + 1)^2 q^2 for l = N - 2n >= 0, ascending."""
        ls = range(self.N % 2, self.N + 1, 2)
        return np.array(sorted((l + 1) ** 2 * self.q**2 for l in ls))


def l_matrix(N: int, k: float, q: float, phases: tuple[int, ...] = ()) -> LMatrixBlock:
    """Analytic block; tau entries are the non-negative roots unless phases are given."""
    check_params(k, q)
    if N < 0:
        raise InvalidParam(f"N must be >= 0, got {N}")
    nus = tuple(range(N % 2, N + 1, 2))
    if phases and len(phases) != len(nus) - 1:
        raise InvalidParam(f"expected {len(nus) - 1} phases, got {len(phases)}")
    sigma = tuple(float(sigma_nu(N, nu, k, q)) for nu in nus)
    tau = tuple(float(sympy.sqrt(tau_sq_nu(N, nu, k, q))) for nu in nus[1:])
    return LMatrixBlock(N=N, k=k, q=q, nus=nus, sigma=sigma, tau=tau, phases=phases)


@dataclass(frozen=True)
class LMatrixCheck:
    block: LMatrixBlock
    quadrature: np.ndarray
    diag_rel_err: float
    offdiag_rel_err: float
    band_leak: float
    induced_phases: tuple[int, ...]

    @property
    def magnitudes_ok(self) -> bool:
        return self.offdiag_rel_err <= MATRIX_TOL and self.band_leak <= MATRIX_TOL

    @property
    def passed(self) -> bool:
        return self.diag_rel_err <= MATRIX_TOL and self.magnitudes_ok

    def checks(self) -> list[CheckResult]:
        n = self.block.N
        out = []
        for i, nu in enumerate(self.block.nus):
            out.append(
                CheckResult.compare(
                    f"L_sigma_N{n}_nu{nu}", self.quadrature[i, i], self.block.sigma[i], MATRIX_TOL
                )
            )
        for i, nu in enumerate(self.block.nus[1:], start=1):
            out.append(
                CheckResult.compare(
                    f"L_tau_N{n}_nu{nu}",
                    abs(self.quadrature[i - 1, i]),
                    self.block.tau[i - 1],
                    MATRIX_TOL,
                )
            )
        return out


def verify_l_matrix(
    N: int,
    k: float,
    q: float,
    *,
    strict: bool = True,
    t_nodes: int = 96,
    y_nodes: int = 64,
    rel_tol: float = 1e-8,
) -> LMatrixCheck:
    """Compare <Psi_{N,N-nu'}, L Psi_{N,N-nu}> by quadrature against the analytic block.

    Diagonal entries must agree with sign; off-diagonal entries in magnitude only, and
    the signs found are returned as induced phases. Entries beyond the tridiagonal band
    must vanish. With ``strict`` a magnitude disagreement raises PhaseMismatch.
    """
    block = l_matrix(N, k, q)
    states = second_basis(N, k, q, t_nodes=t_nodes, y_nodes=y_nodes, rel_tol=rel_tol)
    fields = [s.field for s in states]
    images = [OperatorImage(build_catalog().L, f, q=q, k=k) for f in fields]
    quad = inner_products(
        fields, images, q=q, t_nodes=t_nodes, y_nodes=y_nodes, rel_tol=rel_tol
    ).value

    scale = max(max(abs(s) for s in block.sigma), q**2)
    sigma = np.asarray(block.sigma)
    diag_err = float(np.max(np.abs(np.diag(quad) - sigma) / np.maximum(np.abs(sigma), q**2)))
    off_err = 0.0
    induced = []
    for i in range(1, len(block.nus)):
        value = 0.5 * (quad[i - 1, i] + quad[i, i - 1])
        expected = block.tau[i - 1]
        off_err = max(off_err, abs(abs(value) - expected) / max(expected, q**2))
        induced.append(1 if value >= 0 else -1)
    leak = 0.0
    for i in range(len(block.nus)):
        for j in range(len(block.nus)):
            if abs(i - j) > 1:
                leak = max(leak, abs(quad[i, j]) / scale)

    result = LMatrixCheck(
        block=block,
        quadrature=quad,
        diag_rel_err=diag_err,
        offdiag_rel_err=off_err,
        band_leak=leak,
        induced_phases=tuple(induced),
    )
    log.info(
        "l_matrix_verified",
        N=N,
        k=k,
        q=q,
        diag_rel_err=diag_err,
        offdiag_rel_err=off_err,
        band_leak=leak,
        phases=result.induced_phases,
    )
    if strict and not result.magnitudes_ok:
        raise PhaseMismatch(
            f"|<Psi, L Psi>| differs from the analytic block at N={N}: "
            f"off-diagonal error {off_err:.3e}, band leak {leak:.3e}"
        )
    return result

