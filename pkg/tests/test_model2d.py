"""Tests for the planar operator catalog and its identity suite."""

import pytest

from pdmchannel.algebra.coeffring import COS, CSCH, SCALARS, SIN, q
from pdmchannel.algebra.diffalg import commutator
from pdmchannel.errors import UnknownIdentity
from pdmchannel.model2d.identities import (
    IDENTITIES,
    jacobi_residual,
    residual,
    sl2_structure,
    verify_all,
    verify_identity,
)


@pytest.mark.parametrize("name", IDENTITIES)
def test_identity_holds(name, catalog):
    report = verify_identity(name, catalog)
    assert report.holds, f"{name}: {report.residual_term_count} residual terms"
    assert report.residual_term_count == 0


def test_verify_all_covers_every_identity(catalog):
    reports = verify_all(catalog)
    assert [r.id for r in reports] == list(IDENTITIES)


def test_unknown_identity():
    with pytest.raises(UnknownIdentity):
        verify_identity("H_flies")
    with pytest.raises(UnknownIdentity):
        residual("H_flies")


def test_catalog_aliases(catalog):
    assert catalog.A is catalog.R
    assert catalog.B is catalog.L
    assert catalog.H.order == 2
    assert catalog.eta.order == 1


def test_csch_coefficient_carries_k(catalog):
    # the only k-dependence of H sits in the centrifugal csch^2 term
    assert catalog.H.shift_k(1) != catalog.H
    assert catalog.L.shift_k(1) == catalog.L
    assert catalog.xi == CSCH * SIN
    assert catalog.xibar == CSCH * COS


def test_broken_identity_leaves_a_residual(catalog):
    wrong = commutator(catalog.dy, catalog.eta) - catalog.etabar.scale(2 * q)
    assert not wrong.is_zero


def test_sl2_structure_constants(catalog):
    table = sl2_structure(catalog=catalog)
    zero = SCALARS.zero
    assert table[("dy", "eta")] == {"dy": zero, "eta": zero, "etabar": q}
    assert table[("dy", "etabar")] == {"dy": zero, "eta": -q, "etabar": zero}
    assert table[("eta", "etabar")] == {"dy": q, "eta": zero, "etabar": zero}


def test_sl2_dagger_structure(catalog):
    table = sl2_structure(dagger=True, catalog=catalog)
    assert table[("dy", "eta_dag")]["etabar_dag"] == q
    assert table[("eta_dag", "etabar_dag")]["dy"] == q


def test_jacobi_identity_on_catalog(catalog):
    assert jacobi_residual(catalog.H, catalog.eta, catalog.L).is_zero
    assert jacobi_residual(catalog.dy, catalog.eta, catalog.etabar).is_zero
