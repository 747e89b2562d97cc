"""Tests for the quadratic algebra: constants, Casimir, representations and L elements."""

import dataclasses

import numpy as np
import pytest
import sympy

from pdmchannel.errors import InvalidParam, PoleInSigma
from pdmchannel.quadalg import (
    casimir_residual,
    casimir_value,
    default_constants,
    l_matrix,
    printed_casimir,
    printed_constants,
    realization_residuals,
    relation_residuals,
    representation,
    select_physical,
    sigma_nu,
    structure_function_factorized,
    structure_function_general,
    tau_sq_nu,
    verify_l_matrix,
    verify_printed_n4,
)
from pdmchannel.quadalg.casimir import casimir_on_field
from pdmchannel.quadalg.constants import H_SYM, K_SYM, Q_SYM
from pdmchannel.quadalg.matrix_elements import tau_scale_consistent
from pdmchannel.quadalg.parafermion import (
    E_SYM,
    U_CHOICES,
    X_SYM,
    branch_energy,
    branch_structure_function,
    level_energy,
)
from pdmchannel.wavefn import psi_nl


@pytest.mark.slow
def test_extracted_constants_match_printed():
    extracted, printed = default_constants(), printed_constants()
    for f in dataclasses.fields(printed):
        assert getattr(extracted, f.name) == getattr(printed, f.name), f.name


@pytest.mark.slow
def test_relations_hold_exactly():
    for name, op in relation_residuals(printed_constants()).items():
        assert op.is_zero, name


@pytest.mark.slow
def test_casimir_is_printed_polynomial_in_h():
    assert casimir_residual().is_zero


def test_casimir_value_on_ground_level():
    assert casimir_value(6.0, 1.0, 1.0) == -256.0
    expr = printed_casimir().as_expr().subs({K_SYM: 1, Q_SYM: 1, H_SYM: 6})
    assert expr == -256


@pytest.mark.slow
def test_casimir_acts_as_scalar_on_psi00():
    ratio = casimir_on_field(psi_nl(0, 0, 1.0, 1.0), k=1.0, q=1.0)
    assert float(np.median(ratio)) == pytest.approx(-256.0, rel=1e-8)


@pytest.mark.slow
def test_casimir_on_field_uses_the_given_catalog(catalog):
    ratio = casimir_on_field(psi_nl(0, 0, 1.0, 1.0), k=1.0, q=1.0, catalog=catalog)
    assert float(np.median(ratio)) == pytest.approx(-256.0, rel=1e-8)


@pytest.mark.parametrize("u_choice", list(U_CHOICES))
@pytest.mark.parametrize("sign", [1, -1])
def test_branch_factorization(u_choice, sign):
    for p in range(3):
        energy = branch_energy(p, u_choice, sign)
        factorized = structure_function_factorized(U_CHOICES[u_choice], energy, x=X_SYM)
        branch = branch_structure_function(X_SYM, p, u_choice, sign)
        assert sympy.expand(factorized - branch) == 0


def test_general_structure_function_matches_factorized():
    casimir = printed_casimir().as_expr().subs(H_SYM, E_SYM)
    u = sympy.Symbol("u")
    general = structure_function_general(printed_constants(), u, casimir)
    factorized = structure_function_factorized(u)
    assert sympy.expand(general - factorized) == 0


@pytest.mark.parametrize("p", [0, 1, 2, 3])
def test_upper_branch_is_physical(p):
    for u_choice in U_CHOICES:
        level = select_physical(p, u_choice)
        assert level.N == (2 * p if u_choice == "k/2" else 2 * p + 1)
        assert sympy.expand(level.energy - level_energy(level.N)) == 0
        assert not level.rejected_matches_level


def test_lower_branch_sits_one_level_down():
    level = select_physical(2, "k/2")
    assert sympy.expand(level.rejected_energy - level_energy(3)) == 0


def test_representation_truncates():
    rep = representation(2, "(k+1)/2")
    assert rep.dimension == 3
    assert rep.N == 5
    assert rep.phi[0] == 0
    assert rep.phi[3] == 0
    with pytest.raises(InvalidParam):
        representation(1, "k")
    with pytest.raises(InvalidParam):
        representation(1, "k/2", sign=0)


@pytest.mark.parametrize(("k", "q"), [(1.0, 1.0), (2.5, 0.5)])
def test_fock_matrices_satisfy_relations(k, q):
    rep = representation(2, "k/2")
    residuals = realization_residuals(rep, k, q)
    assert set(residuals) == {"AC_relation", "BC_relation"}
    assert max(residuals.values()) < 1e-10


def test_printed_n4_block():
    assert all(c.passed for c in verify_printed_n4())


def test_tau_scale_consistency():
    assert tau_scale_consistent(4, 2)
    assert tau_scale_consistent(5, 3)


def test_l_block_spectrum_is_transverse():
    block = l_matrix(4, 1.0, 1.0)
    assert block.nus == (0, 2, 4)
    assert block.trace == pytest.approx(35.0)
    assert block.eigenvalues() == pytest.approx(block.expected_eigenvalues(), rel=1e-12)
    assert list(block.expected_eigenvalues()) == [1.0, 9.0, 25.0]
    assert block.tau[0] ** 2 == pytest.approx(90.0)


def test_l_block_rejects_bad_input():
    with pytest.raises(InvalidParam):
        l_matrix(4, 1.0, 1.0, phases=(1,))
    with pytest.raises(InvalidParam):
        sigma_nu(4, 1)
    with pytest.raises(PoleInSigma):
        sigma_nu(4, 0, k=-1, q=1)


def test_tau_vanishes_at_bottom():
    assert tau_sq_nu(3, 1) == 0


def test_l_block_against_quadrature():
    check = verify_l_matrix(2, 1.0, 1.0)
    assert check.passed
    assert len(check.induced_phases) == 1
    assert all(c.passed for c in check.checks())


@pytest.mark.slow
@pytest.mark.parametrize("k", [0.5, 1.0, 2.5])
@pytest.mark.parametrize("N", [4, 6])
def test_l_block_against_quadrature_up_to_level_six(N, k):
    check = verify_l_matrix(N, k, 1.0, strict=False)
    assert check.passed
    assert [c.id for c in check.checks() if not c.passed] == []
    block = check.block
    assert block.eigenvalues() == pytest.approx(block.expected_eigenvalues(), rel=1e-8)
