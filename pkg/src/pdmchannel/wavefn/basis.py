"""Second basis of each energy level: simultaneous eigenfunctions of H and R.

Built by diagonalizing the quadrature representation of R on the separable multiplet
{psi_{n,l} : 2n + l = N}. The eta-dagger chain is kept as an independent cross-check of the
nu = N state.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

import numpy as np
import structlog
import sympy
from scipy.linalg import eigh

from pdmchannel.algebra.coeffring import Y
from pdmchannel.algebra.diffalg import DiffOp
from pdmchannel.errors import DegenerateGram, InvalidParam
from pdmchannel.model2d.catalog import build_catalog
from pdmchannel.wavefn.fields import (
    SmoothField,
    check_params,
    exact,
    interior_points,
    phi_expr,
    psi_nl,
)
from pdmchannel.wavefn.integrate import inner_products
from pdmchannel.wavefn.spectrum import multiplet, r_nu

log = structlog.get_logger(__name__)

GRAM_COND_MAX = 1e8
PHASE_EPS = 1e-10


class OperatorImage:
    """Callable (x, y) -> (op field)(x, y), so operator images can be integrated."""

    def __init__(self, op: DiffOp, field: SmoothField, *, q: float, k: float):
        self.op = op
        self.field = field
        self.q = q
        self.k = k

    def __call__(self, x: Any, y: Any) -> np.ndarray:
        return np.asarray(self.op.apply(self.field, x, y, q=self.q, k=self.k), dtype=float)


@dataclass(frozen=True)
class SecondBasisState:
    N: int
    nu: int
    r: float
    r_exact: float
    coefficients: np.ndarray
    field: SmoothField

    @property
    def label(self) -> str:
        return f"Psi_{self.N},{self.N - self.nu}"


def multiplet_fields(N: int, k: float, q: float, *, t_nodes: int = 96) -> list[SmoothField]:
    return [psi_nl(n, l, k, q, t_nodes=t_nodes) for n, l in multiplet(N)]


def multiplet_gram(
    N: int, k: float, q: float, *, t_nodes: int = 96, y_nodes: int = 64, rel_tol: float = 1e-8
) -> np.ndarray:
    fields = multiplet_fields(N, k, q, t_nodes=t_nodes)
    opts = {"q": q, "t_nodes": t_nodes, "y_nodes": y_nodes, "rel_tol": rel_tol}
    return inner_products(fields, fields, **opts).value


def basis_gram(
    n_max: int,
    l_max: int,
    k: float,
    q: float,
    *,
    t_nodes: int = 96,
    y_nodes: int = 64,
    rel_tol: float = 1e-8,
) -> np.ndarray:
    """Gram matrix of psi_{n,l} over every n <= n_max, l <= l_max, ordered by (n, l)."""
    fields = [
        psi_nl(n, l, k, q, t_nodes=t_nodes)
        for n in range(n_max + 1)
        for l in range(l_max + 1)
    ]
    opts = {"q": q, "t_nodes": t_nodes, "y_nodes": y_nodes, "rel_tol": rel_tol}
    return inner_products(fields, fields, **opts).value


def second_basis(
    N: int,
    k: float,
    q: float,
    *,
    t_nodes: int = 96,
    y_nodes: int = 64,
    rel_tol: float = 1e-8,
) -> list[SecondBasisState]:
    """floor(N/2)+1 orthonormal states with R Psi = q^2 nu (nu+2k) Psi, nu ascending.

    Phase: each state has a positive overlap with the first psi_{n,l} (n ascending) it
    overlaps with.
    """
    check_params(k, q)
    if N < 0:
        raise InvalidParam(f"N must be >= 0, got {N}")
    cat = build_catalog()
    psis = multiplet_fields(N, k, q, t_nodes=t_nodes)
    images = [OperatorImage(cat.R, f, q=q, k=k) for f in psis]
    opts = {"q": q, "t_nodes": t_nodes, "y_nodes": y_nodes, "rel_tol": rel_tol}
    gram = inner_products(psis, psis, **opts).value
    r_matrix = inner_products(psis, images, **opts).value
    r_matrix = 0.5 * (r_matrix + r_matrix.T)

    cond = float(np.linalg.cond(gram))
    if cond > GRAM_COND_MAX:
        raise DegenerateGram(f"Gram matrix of level N={N} has condition number {cond:.3e}")
    values, vectors = eigh(r_matrix, gram)

    states = []
    for idx, nu in enumerate(range(N % 2, N + 1, 2)):
        c = vectors[:, idx]
        overlaps = gram @ c
        lead = next(i for i, v in enumerate(overlaps) if abs(v) > PHASE_EPS)
        if overlaps[lead] < 0:
            c = -c
        field = SmoothField.combination(zip(c, psis, strict=True), label=f"Psi_{N},{N - nu}")
        expected = r_nu(nu, k, q)
        if abs(values[idx] - expected) > 1e-6 * max(expected, q**2):
            log.warning(
                "r_eigenvalue_mismatch", N=N, nu=nu, numeric=float(values[idx]), exact=expected
            )
        states.append(
            SecondBasisState(
                N=N, nu=nu, r=float(values[idx]), r_exact=expected, coefficients=c, field=field
            )
        )
    log.info("second_basis_built", N=N, k=k, q=q, r=[s.r for s in states], gram_cond=cond)
    return states


def eta_dagger_chain(N: int, k: float, q: float) -> SmoothField:
    """eta^(k)dag eta^(k+1)dag ... eta^(k+N-1)dag psi^(k+N)_{0,0}, unnormalized."""
    check_params(k, q)
    if N < 0:
        raise InvalidParam(f"N must be >= 0, got {N}")
    cat = build_catalog()
    ke, qe = exact(k), exact(q)
    expr = phi_expr(0, 1, ke + N, qe) * sympy.cos(qe * Y)
    for j in reversed(range(N)):
        expr = cat.eta_dag.shift_k(j).apply_expr(expr, q=qe, k=ke)
    return SmoothField(expr, label=f"eta_dag_chain_{N}")


def chain_alignment(
    N: int, k: float, q: float, *, t_nodes: int = 96, y_nodes: int = 64, rel_tol: float = 1e-8
) -> float:
    """|cos angle| between the eta-dagger chain and the nu = N state of second_basis."""
    chain = eta_dagger_chain(N, k, q)
    target = second_basis(N, k, q, t_nodes=t_nodes, y_nodes=y_nodes, rel_tol=rel_tol)[-1].field
    g = inner_products(
        [chain, target], [chain, target], q=q, t_nodes=t_nodes, y_nodes=y_nodes, rel_tol=rel_tol
    ).value
    cosine = abs(g[0, 1]) / float(np.sqrt(g[0, 0] * g[1, 1]))
    log.debug("eta_dag_chain_alignment", N=N, k=k, q=q, cosine=cosine)
    return cosine


def eta_annihilation_residual(
    N: int, k: float, q: float, *, points: int = 20, seed: int = 0, t_nodes: int = 96
) -> float:
    """max |eta Psi| / max |Psi| at random interior points for the nu = 0 state (N even)."""
    if N % 2:
        raise InvalidParam(f"nu = 0 occurs only for even N, got {N}")
    state = second_basis(N, k, q, t_nodes=t_nodes)[0]
    x, y = interior_points(q, points, seed)
    eta_psi = build_catalog().eta.apply(state.field, x, y, q=q, k=k)
    scale = float(np.max(np.abs(state.field(x, y))))
    return float(np.max(np.abs(eta_psi))) / (q * scale)


def eigen_residual(
    op: DiffOp,
    field: SmoothField,
    value: float,
    *,
    q: float,
    k: float,
    points: int = 20,
    seed: int = 0,
) -> float:
    """max |op f - value f| / (max(|value|, q^2) max |f|) at random interior points."""
    x, y = interior_points(q, points, seed)
    f = field(x, y)
    res = np.asarray(op.apply(field, x, y, q=q, k=k)) - value * f
    return float(np.max(np.abs(res))) / (max(abs(value), q**2) * float(np.max(np.abs(f))))
