"""Verification suites: run every check of one scope and collect CheckResults."""

from __future__ import annotations

import dataclasses
import math
from collections.abc import Callable
from dataclasses import dataclass

import numpy as np
import structlog
import sympy

from pdmchannel.classical import coefficient_map, printed_classical, verify_poisson_algebra
from pdmchannel.errors import InvalidParam, NoMatch
from pdmchannel.model2d.catalog import OperatorCatalog, build_catalog
from pdmchannel.model2d.identities import jacobi_residual, sl2_structure, verify_all
from pdmchannel.model3d import (
    box_degeneracy_scan,
    box_operators,
    check_box_state,
    check_cyl_state,
    commutator_residuals,
    cyl_operators,
    cyl_state,
    spectrum3d,
)
from pdmchannel.models.report import CheckResult, IdentityReport
from pdmchannel.numerics import bessel_zero, fd_cross_check, gauss_legendre, jacobi_P, log_gamma
from pdmchannel.quadalg.casimir import (
    casimir_commutators,
    casimir_on_field,
    casimir_residual,
    casimir_value,
)
from pdmchannel.quadalg.constants import (
    default_constants,
    printed_constants,
    relation_residuals,
)
from pdmchannel.quadalg.matrix_elements import (
    tau_scale_consistent,
    verify_l_matrix,
    verify_printed_n4,
)
from pdmchannel.quadalg.parafermion import (
    U_CHOICES,
    representation,
    realization_residuals,
    select_physical,
)
from pdmchannel.wavefn import (
    chain_alignment,
    check_boundary,
    eigen_residual,
    eta_annihilation_residual,
    omega_zero_mode,
    psi_nl,
    py_eigenfunction_check,
    second_basis,
    separable_branches,
)
from pdmchannel.wavefn.basis import basis_gram, multiplet_gram
from pdmchannel.wavefn.spectrum import energy_2d, multiplet, r_nu

log = structlog.get_logger(__name__)

SCOPES = ("algebra2d", "quadratic", "classical", "wavefn", "numerics", "model3d")
RESIDUAL_TOL = 1e-9
J01 = 2.404825557695773
FD_K_VALUES = (1.0, 2.0)
GRAM_LEVELS = 5


@dataclass(frozen=True)
class SuiteContext:
    """Parameters shared by every suite of one run."""

    k: float = 1.0
    q: float = 1.0
    R: float = 1.0
    t_nodes: int = 96
    y_nodes: int = 64
    rel_tol: float = 1e-8
    n_max: int = 6
    k_values: tuple[float, ...] = (0.5, 1.0, 2.5)
    q_values: tuple[float, ...] = (1.0, 2.0)
    residual_levels: int = 8
    fd_nodes: int = 399
    seed: int = 0

    @property
    def quad(self) -> dict:
        return {"t_nodes": self.t_nodes, "y_nodes": self.y_nodes, "rel_tol": self.rel_tol}


def _from_identity(report: IdentityReport) -> CheckResult:
    return CheckResult.exact(report.id, report.holds, report.residual_term_count)


def _residual(id: str, value: float, tol: float = RESIDUAL_TOL) -> CheckResult:
    return CheckResult.compare(id, value, 0.0, tol, relative=False)


def _exact_zero(id: str, expr: sympy.Expr) -> CheckResult:
    diff = sympy.expand(expr)
    return CheckResult.exact(id, diff == 0, len(sympy.Add.make_args(diff)) if diff != 0 else 0)


# suites


def algebra2d_suite(ctx: SuiteContext) -> list[CheckResult]:
    """Exact operator identities of the planar model and the two sl(2) closures."""
    checks = [_from_identity(r) for r in verify_all()]
    for dagger in (False, True):
        name = "sl2_dagger_closes" if dagger else "sl2_closes"
        try:
            sl2_structure(dagger=dagger)
        except NoMatch:
            checks.append(CheckResult.exact(name, False))
        else:
            checks.append(CheckResult.exact(name, True))
    return checks


def quadratic_suite(ctx: SuiteContext) -> list[CheckResult]:
    """Structure constants, Casimir, representations and the L matrix elements."""
    checks = []
    extracted, printed = default_constants(), printed_constants()
    for f in dataclasses.fields(printed):
        same = getattr(extracted, f.name) == getattr(printed, f.name)
        checks.append(CheckResult.exact(f"constant_{f.name}", same))
    for name, op in relation_residuals(extracted).items():
        checks.append(CheckResult.exact(name, op.is_zero, op.term_count()))
    cat = build_catalog()
    jac = jacobi_residual(cat.A, cat.B, cat.C)
    checks.append(CheckResult.exact("jacobi_ABC", jac.is_zero, jac.term_count()))
    res = casimir_residual()
    checks.append(CheckResult.exact("casimir_printed", res.is_zero, res.term_count()))
    for name, op in casimir_commutators().items():
        checks.append(CheckResult.exact(name, op.is_zero, op.term_count()))

    psi00 = psi_nl(0, 0, ctx.k, ctx.q, t_nodes=ctx.t_nodes)
    ratio = casimir_on_field(psi00, k=ctx.k, q=ctx.q, seed=ctx.seed)
    expected = casimir_value(energy_2d(0, ctx.k, ctx.q), ctx.k, ctx.q)
    checks.append(CheckResult.compare("casimir_psi00", float(np.median(ratio)), expected, 1e-8))

    checks.extend(verify_printed_n4())
    for N in range(2, 7):
        for nu in range(N % 2, N + 1, 2):
            holds = tau_scale_consistent(N, nu)
            checks.append(CheckResult.exact(f"tau_scale_N{N}_nu{nu}", holds))
    for p in range(6):
        for u_choice in U_CHOICES:
            level = select_physical(p, u_choice)
            tag = f"p{p}_u{u_choice}"
            checks.append(
                CheckResult.exact(f"lower_branch_rejected_{tag}", not level.rejected_matches_level)
            )
            rep = representation(p, u_choice)
            for name, value in realization_residuals(rep, ctx.k, ctx.q).items():
                checks.append(_residual(f"{name}_{tag}_N{level.N}", value, 1e-10))
    for k in ctx.k_values:
        for N in range(2, ctx.n_max + 1):
            result = verify_l_matrix(N, k, ctx.q, strict=False, **ctx.quad)
            suffix = f"_k{k:g}"
            checks.extend(c.model_copy(update={"id": c.id + suffix}) for c in result.checks())
            block = result.block
            pairs = zip(block.eigenvalues(), block.expected_eigenvalues(), strict=True)
            for i, (value, exact) in enumerate(pairs):
                checks.append(CheckResult.compare(f"L_eig_N{N}_{i}{suffix}", value, exact, 1e-8))
    return checks


def classical_suite(ctx: SuiteContext) -> list[CheckResult]:
    """Poisson-algebra identities plus the leading-order map of the quantum constants."""
    checks = [_from_identity(r) for r in verify_poisson_algebra()]
    derived, printed = coefficient_map(), printed_classical()
    for name in printed:
        checks.append(_exact_zero(f"classical_{name}", derived[name] - printed[name]))
    return checks


def _psi_sweep(cat: OperatorCatalog, ctx: SuiteContext, k: float, q: float) -> list[CheckResult]:
    """H and L residuals plus the wall check of every psi_{n,l} up to the sweep level."""
    opts = {"q": q, "k": k, "seed": ctx.seed}
    suffix = f"_k{k:g}_q{q:g}"
    checks = []
    for N in range(ctx.residual_levels + 1):
        E = energy_2d(N, k, q)
        for n, l in multiplet(N):
            psi = psi_nl(n, l, k, q, t_nodes=ctx.t_nodes, rel_tol=ctx.rel_tol)
            tag = f"n{n}_l{l}{suffix}"
            checks.append(_residual(f"H_psi_{tag}", eigen_residual(cat.H, psi, E, **opts)))
            checks.append(
                _residual(f"L_psi_{tag}", eigen_residual(cat.L, psi, (l + 1) ** 2 * q**2, **opts))
            )
            boundary = check_boundary(psi, q).vanishes
            checks.append(CheckResult.exact(f"boundary_psi_{tag}", boundary))
    return checks


def wavefn_suite(ctx: SuiteContext) -> list[CheckResult]:
    """Eigenfunctions of both bases, boundary behaviour and the zero modes."""
    k, q = ctx.k, ctx.q
    cat = build_catalog()
    opts = {"q": q, "k": k, "seed": ctx.seed}
    checks = []
    for sweep_k in ctx.k_values:
        for sweep_q in ctx.q_values:
            checks.extend(_psi_sweep(cat, ctx, sweep_k, sweep_q))

    gram = basis_gram(GRAM_LEVELS, GRAM_LEVELS, k, q, **ctx.quad)
    off = float(np.max(np.abs(gram - np.eye(len(gram)))))
    checks.append(_residual(f"gram_n{GRAM_LEVELS}_l{GRAM_LEVELS}", off, 1e-10))
    for N in range(ctx.n_max + 1):
        gram = multiplet_gram(N, k, q, **ctx.quad)
        off = float(np.max(np.abs(gram - np.eye(len(gram)))))
        checks.append(_residual(f"gram_N{N}", off, 1e-8))
        E = energy_2d(N, k, q)
        for state in second_basis(N, k, q, **ctx.quad):
            tag = f"N{N}_nu{state.nu}"
            checks.append(_residual(f"H_Psi_{tag}", eigen_residual(cat.H, state.field, E, **opts)))
            r = r_nu(state.nu, k, q)
            checks.append(_residual(f"R_Psi_{tag}", eigen_residual(cat.R, state.field, r, **opts)))
        if N <= 3:
            cosine = chain_alignment(N, k, q, **ctx.quad)
            checks.append(CheckResult.compare(f"eta_dag_chain_N{N}", cosine, 1.0, 1e-8))
        if N % 2 == 0:
            value = eta_annihilation_residual(N, k, q, seed=ctx.seed, t_nodes=ctx.t_nodes)
            checks.append(_residual(f"eta_annihilates_N{N}", value))

    for l in range(3):
        branches = separable_branches(l, k, q)
        passing = [(b.x_solution, b.y_solution) for b in branches if b.passes]
        only_regular = passing == [("regular", "chi")]
        checks.append(CheckResult.exact(f"separable_branches_l{l}", only_regular))
    for m in (1, 2, 3):
        rejected = not py_eigenfunction_check(m, q).complex_ok
        checks.append(CheckResult.exact(f"py_rejected_m{m}", rejected))
    for kind, s in (("eta", 1), ("eta", 2), ("etabar", 1)):
        report = check_boundary(omega_zero_mode(kind, s, k, q), q)
        checks.append(CheckResult.exact(f"zero_mode_{kind}_{s}", report.consistent))
    return checks


def numerics_suite(ctx: SuiteContext) -> list[CheckResult]:
    """Finite differences against the closed-form channel energies, plus special functions."""
    k, q = ctx.k, ctx.q
    checks = []
    for fd_k in FD_K_VALUES:
        for l in (0, 1):
            fd = fd_cross_check(k=fd_k, q=q, l=l, nodes=ctx.fd_nodes, count=2)
            tag = f"k{fd_k:g}_l{l}"
            for i, (value, exact) in enumerate(zip(fd.extrapolated, fd.analytic, strict=True)):
                checks.append(CheckResult.compare(f"fd_{tag}_n{i}", value, exact, 1e-3))
            checks.append(
                CheckResult.compare(
                    f"fd_order_{tag}", fd.convergence_order, 2.0, 0.4, relative=False
                )
            )
    checks.append(CheckResult.compare("bessel_zero_j01", bessel_zero(0, 1), J01, 1e-13))
    for n in range(6):
        value = jacobi_P(n, k - 0.5, 1.5, 1.0)
        expected = math.exp(log_gamma(n + k + 0.5) - log_gamma(k + 0.5) - math.lgamma(n + 1))
        checks.append(CheckResult.compare(f"jacobi_at_one_n{n}", value, expected, 1e-12))
    rule = gauss_legendre(20)
    moment = rule.integrate(rule.nodes**38)
    checks.append(CheckResult.compare("gauss_legendre_x38", moment, 2 / 39, 1e-13))
    return checks


def model3d_suite(ctx: SuiteContext) -> list[CheckResult]:
    """Box and cylinder states, commuting integrals and the degeneracy pattern of the box."""
    k, q, R = ctx.k, ctx.q, ctx.R
    checks = []
    for n, l, m in ((0, 0, 0), (1, 0, 1), (0, 2, 1), (2, 1, 3)):
        res = check_box_state(n, l, m, k, q, seed=ctx.seed)
        tag = f"{n}_{l}_{m}"
        checks.append(
            CheckResult.compare(f"box_norm_{tag}", res.norm_quadrature, res.state.norm, 1e-10)
        )
        checks.append(_residual(f"box_boundary_{tag}", res.boundary_max, 1e-12))
        checks.append(_residual(f"box_H_{tag}", res.h_residual))
        checks.append(_residual(f"box_L_{tag}", res.l_residual))
        checks.append(_residual(f"box_M_{tag}", res.m_residual))
    for n, m, s in ((0, 0, 1), (1, 1, 2), (0, -2, 1)):
        res = check_cyl_state(n, m, s, k, q, R, seed=ctx.seed)
        tag = f"{n}_{m}_{s}"
        checks.append(_residual(f"cyl_radial_norm_{tag}", res.radial_norm_err, 1e-10))
        checks.append(_residual(f"cyl_orthogonality_{tag}", res.orthogonality_max))
        checks.append(_residual(f"cyl_wall_{tag}", res.wall_max, 1e-12))
        checks.append(CheckResult.exact(f"cyl_periodic_{tag}", res.periodic))
        checks.append(_residual(f"cyl_H_{tag}", res.h_residual))
        checks.append(_residual(f"cyl_L_{tag}", res.l_residual))
        checks.append(_residual(f"cyl_M_{tag}", res.m_residual))
    for ops in (box_operators(k, q), cyl_operators(k, q)):
        for name, value in commutator_residuals(ops, R=R, seed=ctx.seed).items():
            checks.append(_residual(f"{ops.model}_{name}", value))

    ground = spectrum3d("box", 1, k=k, q=q)[0]
    expected = q**2 * (1 + math.sqrt(2)) * (2 * k + math.sqrt(2))
    checks.append(CheckResult.compare("box_ground_energy", ground.E, expected, 1e-14))
    fd = fd_cross_check(k=k, q=q, delta=math.sqrt(2), nodes=ctx.fd_nodes, count=1)
    checks.append(CheckResult.compare("box_ground_energy_fd", fd.extrapolated[0], expected, 1e-3))
    j01 = cyl_state(0, 0, 1, k, q, R).j_ms
    checks.append(CheckResult.compare("cyl_j01", j01, J01, 1e-12, relative=False))
    e_max = box_degeneracy_scan_energy(k, q)
    groups = box_degeneracy_scan(e_max, k, q)
    accidental = next(g for g in groups if g.key == "n=0,delta_sq=85")
    checks.append(
        CheckResult.exact(
            "box_accidental_85",
            {(0, 1, 8), (0, 5, 6)} <= set(accidental.members) and accidental.kind == "accidental",
        )
    )
    return checks


def box_degeneracy_scan_energy(k: float, q: float) -> float:
    """Energy just above the n = 0, delta^2 = 85 box level."""
    delta = math.sqrt(85)
    return q**2 * (1 + delta) * (2 * k + delta) * (1 + 1e-9)


SUITES: dict[str, Callable[[SuiteContext], list[CheckResult]]] = {
    "algebra2d": algebra2d_suite,
    "quadratic": quadratic_suite,
    "classical": classical_suite,
    "wavefn": wavefn_suite,
    "numerics": numerics_suite,
    "model3d": model3d_suite,
}


def run_scope(scope: str, ctx: SuiteContext | None = None) -> list[CheckResult]:
    """Checks of one scope, or of every scope for ``all``, in a fixed order."""
    ctx = ctx or SuiteContext()
    if scope != "all" and scope not in SUITES:
        raise InvalidParam(f"scope must be one of {(*SCOPES, 'all')}, got {scope!r}")
    names = SCOPES if scope == "all" else (scope,)
    checks: list[CheckResult] = []
    for name in names:
        suite = SUITES[name](ctx)
        passed = sum(c.passed for c in suite)
        log.info("suite_finished", scope=name, total=len(suite), passed=passed)
        checks.extend(suite)
    return checks
