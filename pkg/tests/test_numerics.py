"""Tests for special functions, Gauss-Legendre rules and the finite-difference solver."""

import math
from fractions import Fraction

import numpy as np
import pytest
from scipy import special

from pdmchannel.errors import InvalidParam, TruncationTooSmall
from pdmchannel.numerics import (
    FDOperator1D,
    bessel_J,
    bessel_J_array,
    bessel_zero,
    channel_energies,
    fd_cross_check,
    gamma,
    gauss_legendre,
    jacobi_P,
    log_gamma,
    mcmahon_zero,
)
from pdmchannel.numerics.special import MCMAHON_WINDOW


def test_two_point_rule():
    rule = gauss_legendre(2)
    assert sorted(rule.nodes) == pytest.approx([-1 / math.sqrt(3), 1 / math.sqrt(3)], abs=1e-15)
    assert rule.weights.sum() == pytest.approx(2.0, abs=1e-13)


def test_rule_exactness():
    rule = gauss_legendre(5)
    assert abs(rule.integrate(rule.nodes**9)) < 1e-15
    unit = gauss_legendre(3).remap(0.0, 1.0)
    assert unit.integrate(unit.nodes**4) == pytest.approx(0.2, abs=1e-15)
    assert unit.interval == (0.0, 1.0)
    assert len(gauss_legendre(64)) == 64


def test_rule_size_limits():
    with pytest.raises(InvalidParam):
        gauss_legendre(0)
    with pytest.raises(InvalidParam):
        gauss_legendre(513)


def test_jacobi_low_degrees():
    assert jacobi_P(0, 0.3, 1.7, 0.4) == 1
    a, b, z = 0.5, 2.0, 0.3
    assert jacobi_P(1, a, b, z) == pytest.approx((a + 1) + (a + b + 2) * (z - 1) / 2)


@pytest.mark.parametrize("n", [2, 5, 10, 25])
def test_jacobi_against_scipy(n):
    z = np.linspace(-1.0, 1.0, 11)
    expected = special.eval_jacobi(n, 0.5, math.sqrt(2), z)
    assert jacobi_P(n, 0.5, math.sqrt(2), z) == pytest.approx(expected, rel=1e-12, abs=1e-12)


def test_jacobi_exact_with_fractions():
    exact = jacobi_P(3, Fraction(1, 2), Fraction(2), Fraction(3, 10))
    assert isinstance(exact, Fraction)
    assert float(exact) == pytest.approx(special.eval_jacobi(3, 0.5, 2.0, 0.3), rel=1e-14)


def test_jacobi_derivative_identity():
    n, a, b, z, h = 4, 0.5, 1.5, 0.2, 1e-5
    slope = (jacobi_P(n, a, b, z + h) - jacobi_P(n, a, b, z - h)) / (2 * h)
    expected = (n + a + b + 1) / 2 * jacobi_P(n - 1, a + 1, b + 1, z)
    assert slope == pytest.approx(expected, rel=1e-8)


def test_jacobi_rejects_bad_parameters():
    with pytest.raises(InvalidParam):
        jacobi_P(-1, 0.0, 0.0, 0.5)
    with pytest.raises(InvalidParam):
        jacobi_P(2, -1.5, 0.0, 0.5)


def test_bessel_at_origin():
    assert bessel_J(0, 0.0) == 1.0
    assert bessel_J(3, 0.0) == 0.0


@pytest.mark.parametrize("m", [0, 1, 2, 5, 12])
def test_bessel_against_scipy(m):
    z = np.linspace(0.05, 60.0, 97)
    assert bessel_J_array(m, z) == pytest.approx(special.jv(m, z), abs=1e-12)


def test_bessel_recurrence_and_negative_order():
    rng = np.random.default_rng(11)
    for z in rng.uniform(0.1, 50.0, size=10):
        lhs = bessel_J(2, z) + bessel_J(4, z)
        assert lhs == pytest.approx(6.0 / z * bessel_J(3, z), abs=1e-11)
    assert bessel_J(-3, 1.7) == pytest.approx(-bessel_J(3, 1.7))
    with pytest.raises(InvalidParam):
        bessel_J(1, -0.5)


def test_bessel_zeros():
    assert bessel_zero(0, 1) == pytest.approx(2.404825557695773, abs=1e-12)
    expected = special.jn_zeros(3, 4)
    assert [bessel_zero(3, s) for s in range(1, 5)] == pytest.approx(list(expected), abs=1e-12)
    assert abs(mcmahon_zero(0, 5) - bessel_zero(0, 5)) < 1e-3
    with pytest.raises(InvalidParam):
        bessel_zero(0, 0)


@pytest.mark.parametrize("m", [0, 1, 5, 12])
def test_bessel_zeros_from_mcmahon_and_scan_starts(m):
    found = [bessel_zero(m, s) for s in range(1, 9)]
    assert found == pytest.approx(list(special.jn_zeros(m, 8)), abs=1e-12)
    for s in range(max(m, 1), 9):
        assert abs(mcmahon_zero(m, s) - found[s - 1]) < MCMAHON_WINDOW


def test_gamma_known_values():
    assert gamma(1.0) == pytest.approx(1.0, rel=1e-14)
    assert gamma(5.0) == pytest.approx(24.0, rel=1e-13)
    assert gamma(0.5) == pytest.approx(1.7724538509055160, rel=1e-13)
    for x in (0.3, 1.7, 5.5, 12.25):
        assert gamma(x) == pytest.approx(math.gamma(x), rel=1e-13)


def test_gamma_functional_equation():
    rng = np.random.default_rng(5)
    for x in rng.uniform(0.1, 30.0, size=20):
        assert math.exp(log_gamma(x + 1) - log_gamma(x)) == pytest.approx(x, rel=1e-12)
    with pytest.raises(InvalidParam):
        log_gamma(0.0)


def test_fd_matrix_is_symmetric_tridiagonal():
    op = FDOperator1D.build(1.0, 2.0, 1.0, 12.0, 200)
    assert len(op.diagonal) == 200
    assert len(op.off_diagonal) == 199
    assert np.all(op.off_diagonal < 0)
    assert op.step == pytest.approx(12.0 / 201)


@pytest.mark.parametrize(("k", "l"), [(1.0, 0), (1.0, 1), (2.0, 0), (2.0, 1)])
def test_fd_planar_channels(k, l):
    result = fd_cross_check(k=k, q=1.0, l=l, count=2)
    assert result.fine_nodes <= 800
    assert result.analytic == channel_energies(l + 1.0, k, 1.0, 2)
    assert max(result.rel_errors) <= 1e-3
    assert abs(result.convergence_order - 2.0) <= 0.4


def test_fd_planar_ground_channel():
    result = fd_cross_check(k=1.0, q=1.0, l=0)
    assert result.analytic[:2] == [6.0, 20.0]
    assert result.extrapolated[0] == pytest.approx(6.0, rel=1e-3)
    assert result.extrapolated[1] == pytest.approx(20.0, rel=1e-3)
    assert 1.8 < result.convergence_order < 2.2


def test_fd_with_centrifugal_term():
    result = fd_cross_check(k=2.0, q=1.0, l=0)
    assert result.extrapolated[0] == pytest.approx(10.0, rel=1e-3)


def test_fd_box_ground_channel():
    result = fd_cross_check(k=1.0, q=1.0, delta=math.sqrt(2))
    assert result.extrapolated[0] == pytest.approx(4 + 3 * math.sqrt(2), rel=1e-3)
    assert max(result.rel_errors) <= 1e-3


def test_channel_energies_closed_form():
    assert channel_energies(1.0, 1.0, 1.0, 2) == [6.0, 20.0]


def test_fd_argument_checks():
    with pytest.raises(InvalidParam):
        fd_cross_check(k=1.0, q=1.0, l=0, delta=2.0)
    with pytest.raises(InvalidParam):
        fd_cross_check(k=1.0, q=1.0, l=0, nodes=100)
    with pytest.raises(TruncationTooSmall):
        fd_cross_check(k=1.0, q=1.0, l=0, x_max=2.0)
