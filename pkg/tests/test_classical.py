"""Tests for the classical limit and the quadratic Poisson algebra."""

import math

import pytest
import sympy

from pdmchannel.algebra.coeffring import COSH, SIN, SINH, q
from pdmchannel.classical import (
    POISSON_IDENTITIES,
    PhaseFunction,
    classical_catalog,
    coefficient_map,
    poisson,
    poisson_jacobi,
    poisson_residual,
    printed_classical,
    verify_poisson_algebra,
)
from pdmchannel.classical.limit import QC, classical_coefficient
from pdmchannel.errors import NoMatch, UnknownIdentity
from pdmchannel.quadalg.constants import K_SYM, Q_SYM

PX = PhaseFunction.momentum(1, 0)
PY = PhaseFunction.momentum(0, 1)


def test_canonical_bracket():
    sinh = PhaseFunction.coordinate(SINH)
    assert poisson(sinh, PX) == PhaseFunction.coordinate(COSH * q)
    assert poisson(PX, sinh) == PhaseFunction.coordinate(COSH * (-q))
    assert poisson(PX, PY).is_zero


def test_bracket_jacobi_identity():
    f = PhaseFunction.coordinate(SINH * SIN) * PX
    g = PhaseFunction.coordinate(COSH) * PY**2
    h = PX * PY + PhaseFunction.coordinate(SIN)
    assert poisson_jacobi(f, g, h).is_zero


@pytest.mark.parametrize("name", POISSON_IDENTITIES)
def test_poisson_identity_holds(name):
    assert poisson_residual(name).is_zero, name


def test_verify_poisson_algebra_reports():
    reports = verify_poisson_algebra()
    assert [r.id for r in reports] == list(POISSON_IDENTITIES)
    assert all(r.holds for r in reports)


def test_unknown_poisson_identity():
    with pytest.raises(UnknownIdentity):
        poisson_residual("nope")


def test_catalog_shape():
    cat = classical_catalog()
    assert cat.H.degree == 2
    assert cat.L == PY**2
    assert cat.eta.conj().conj() == cat.eta
    assert not cat.eta.is_real


def test_hamiltonian_numeric_value():
    H = classical_catalog().H
    value = H.eval(1.5, 2.0, 0.5, 0.2, 0.3, -0.4)
    expected = math.cosh(0.75) ** 2 * (0.09 + 0.16) + 1.5**2 * 2.0**2 / math.sinh(0.75) ** 2
    assert value == pytest.approx(expected, rel=1e-13)


def test_coefficient_map_matches_printed():
    derived, printed = coefficient_map(), printed_classical()
    assert set(derived) == set(printed)
    for name, expr in printed.items():
        assert sympy.expand(derived[name] - expr) == 0, name


def test_leading_order_extraction():
    assert classical_coefficient(8 * Q_SYM**2) == -8 * QC**2
    with pytest.raises(NoMatch):
        classical_coefficient(K_SYM)
