"""Tests for planar eigenfunctions, both bases and the boundary checks."""

import math

import numpy as np
import pytest
import sympy
from scipy.integrate import trapezoid

from pdmchannel.errors import InvalidParam
from pdmchannel.wavefn import (
    basis_gram,
    check_boundary,
    chi_l,
    chibar_l,
    eigen_residual,
    integrate_line,
    integrate_strip,
    interior_points,
    multiplet,
    multiplet_gram,
    omega_zero_mode,
    psi_nl,
    py_eigenfunction_check,
    r_nu,
    second_basis,
    separable_branches,
    spectrum2d,
)
from pdmchannel.wavefn.basis import chain_alignment, eta_annihilation_residual
from pdmchannel.wavefn.fields import jacobi_expr
from pdmchannel.wavefn.spectrum import degeneracy_2d, energy_2d


def test_energy_levels():
    assert energy_2d(0, 1.0, 1.0) == 6.0
    assert energy_2d(2, 1.0, 1.0) == 20.0
    assert energy_2d(1, 2.0, 0.5) == pytest.approx(0.25 * 3 * 6)
    assert degeneracy_2d(4) == 3


def test_multiplet_members():
    assert multiplet(4) == [(0, 4), (1, 2), (2, 0)]
    assert multiplet(3) == [(0, 3), (1, 1)]
    with pytest.raises(InvalidParam):
        multiplet(-1)


def test_spectrum2d_lowest_states():
    entries = spectrum2d(5, 1.0, 1.0)
    assert [e.E for e in entries] == [6.0, 12.0, 20.0, 20.0, 30.0]
    assert [(e.n, e.l) for e in entries] == [(0, 0), (0, 1), (0, 2), (1, 0), (0, 3)]
    assert entries[2].deg == 2
    assert entries[3].L_eig == 1.0


def test_spectrum2d_rejects_bad_params():
    with pytest.raises(InvalidParam):
        spectrum2d(0, 1.0, 1.0)
    with pytest.raises(InvalidParam):
        spectrum2d(3, -1.0, 1.0)


def test_r_eigenvalues():
    assert r_nu(0, 1.0, 1.0) == 0.0
    assert r_nu(2, 1.0, 1.0) == 8.0


def test_jacobi_expr_degree_one():
    t = sympy.Symbol("t")
    a, b = sympy.Rational(1, 2), sympy.sqrt(2)
    z = 1 - 2 * t**2
    expected = (a + 1) + (a + b + 2) * (z - 1) / 2
    assert sympy.simplify(jacobi_expr(1, a, b, t) - expected) == 0


def test_chi_normalized_and_vanishing_on_edges():
    chi = chi_l(1, 2.0)
    half = math.pi / 4.0
    ys = np.linspace(-half, half, 2001)
    assert trapezoid(chi(0.0, ys) ** 2, ys) == pytest.approx(1.0, abs=1e-6)
    assert abs(chi(0.0, half)) < 1e-14


def test_chibar_is_unphysical():
    assert not chibar_l(0, 1.0).physical
    report = check_boundary(chibar_l(0, 1.0), 1.0)
    assert report.violates


@pytest.mark.parametrize(("n", "l"), [(0, 0), (1, 0), (0, 2), (1, 1)])
def test_psi_is_normalized(n, l):
    psi = psi_nl(n, l, 1.0, 1.0)
    estimate = integrate_strip(psi, psi, q=1.0)
    assert estimate.value == pytest.approx(1.0, rel=1e-9)


@pytest.mark.parametrize(("n", "l", "k", "q"), [(0, 0, 1.0, 1.0), (1, 1, 2.5, 0.7)])
def test_psi_eigenvalues(catalog, n, l, k, q):
    psi = psi_nl(n, l, k, q)
    E = energy_2d(2 * n + l, k, q)
    assert eigen_residual(catalog.H, psi, E, q=q, k=k) < 1e-9
    assert eigen_residual(catalog.L, psi, (l + 1) ** 2 * q**2, q=q, k=k) < 1e-9


def test_psi_boundary():
    assert check_boundary(psi_nl(1, 2, 1.0, 1.0), 1.0).vanishes


def test_integrate_line_sech_squared():
    estimate = integrate_line(lambda x: 1.0 / np.cosh(x) ** 2, q=1.0)
    assert estimate.value == pytest.approx(1.0, rel=1e-12)


def test_multiplet_gram_is_identity():
    gram = multiplet_gram(2, 1.0, 1.0)
    assert np.max(np.abs(gram - np.eye(2))) < 1e-8


def test_second_basis_diagonalizes_r(catalog):
    states = second_basis(2, 1.0, 1.0)
    assert [s.nu for s in states] == [0, 2]
    for state in states:
        assert state.r == pytest.approx(state.r_exact, abs=1e-6)
        assert eigen_residual(catalog.R, state.field, state.r_exact, q=1.0, k=1.0) < 1e-9
        assert eigen_residual(catalog.H, state.field, 20.0, q=1.0, k=1.0) < 1e-9


def test_eta_dagger_chain_aligns_with_top_state():
    assert chain_alignment(2, 1.0, 1.0) == pytest.approx(1.0, abs=1e-8)


def test_eta_annihilates_lowest_r_state():
    assert eta_annihilation_residual(2, 1.0, 1.0) < 1e-9


def test_zero_modes(catalog):
    omega = omega_zero_mode("eta", 1, 1.0, 1.0)
    x, y = interior_points(1.0, 20, seed=3)
    assert np.max(np.abs(catalog.eta.apply(omega, x, y, q=1.0, k=1.0))) < 1e-10
    assert check_boundary(omega, 1.0).consistent
    bar = omega_zero_mode("etabar", 1, 1.0, 1.0)
    assert not bar.physical
    assert check_boundary(bar, 1.0).violates
    with pytest.raises(InvalidParam):
        omega_zero_mode("zeta", 1, 1.0, 1.0)


@pytest.mark.parametrize("l", [0, 1])
def test_only_regular_chi_branch_survives(l):
    branches = separable_branches(l, 1.0, 1.0)
    assert len(branches) == 4
    passing = [(b.x_solution, b.y_solution) for b in branches if b.passes]
    assert passing == [("regular", "chi")]


def test_py_eigenstates_fail_the_boundary():
    check = py_eigenfunction_check(1)
    assert check.real_ok and not check.imag_ok
    assert not check.complex_ok
    assert check.matching_chi == 0
    assert py_eigenfunction_check(2).imag_ok
    with pytest.raises(InvalidParam):
        py_eigenfunction_check(0)


@pytest.mark.slow
def test_full_basis_gram_is_identity():
    gram = basis_gram(5, 5, 1.0, 1.0)
    assert gram.shape == (36, 36)
    assert np.max(np.abs(gram - np.eye(36))) <= 1e-10


@pytest.mark.slow
@pytest.mark.parametrize("k", [0.5, 1.0, 2.5])
@pytest.mark.parametrize("q", [1.0, 2.0])
def test_top_level_eigen_residuals(catalog, k, q):
    E = energy_2d(8, k, q)
    for n, l in multiplet(8):
        psi = psi_nl(n, l, k, q)
        assert eigen_residual(catalog.H, psi, E, q=q, k=k) <= 1e-9
        assert eigen_residual(catalog.L, psi, (l + 1) ** 2 * q**2, q=q, k=k) <= 1e-9
