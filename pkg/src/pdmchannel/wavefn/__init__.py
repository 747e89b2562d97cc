"""Eigenfunctions of the planar model, both bases, zero modes and quadrature oracles."""

from pdmchannel.wavefn.basis import (
    OperatorImage,
    SecondBasisState,
    basis_gram,
    chain_alignment,
    eigen_residual,
    eta_annihilation_residual,
    eta_dagger_chain,
    multiplet_gram,
    second_basis,
)
from pdmchannel.wavefn.branches import (
    BoundaryReport,
    SeparableBranch,
    check_boundary,
    py_eigenfunction_check,
    separable_branches,
)
from pdmchannel.wavefn.fields import (
    SmoothField,
    chi_l,
    chibar_l,
    interior_points,
    omega_zero_mode,
    phi_expr,
    psi_nl,
)
from pdmchannel.wavefn.integrate import (
    IntegralEstimate,
    inner_products,
    integrate_line,
    integrate_strip,
)
from pdmchannel.wavefn.spectrum import energy_2d, multiplet, r_nu, spectrum2d

__all__ = [
    "OperatorImage",
    "SecondBasisState",
    "basis_gram",
    "chain_alignment",
    "eigen_residual",
    "eta_annihilation_residual",
    "eta_dagger_chain",
    "multiplet_gram",
    "second_basis",
    "BoundaryReport",
    "SeparableBranch",
    "check_boundary",
    "py_eigenfunction_check",
    "separable_branches",
    "SmoothField",
    "chi_l",
    "chibar_l",
    "interior_points",
    "omega_zero_mode",
    "phi_expr",
    "psi_nl",
    "IntegralEstimate",
    "inner_products",
    "integrate_line",
    "integrate_strip",
    "energy_2d",
    "multiplet",
    "r_nu",
    "spectrum2d",
]
