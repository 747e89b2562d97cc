"""Tests for the box and cylinder channels."""

import math

import pytest
import sympy

from pdmchannel.algebra.coeffring import X
from pdmchannel.errors import InvalidParam
from pdmchannel.model3d import (
    box_delta_sq,
    box_degeneracy_scan,
    box_operators,
    box_state,
    channel_energy,
    channel_norm,
    channel_norm_quadrature,
    check_box_state,
    check_cyl_state,
    commutator_residuals,
    cyl_degeneracy_scan,
    cyl_operators,
    cyl_state,
    groups_for,
    quantum_numbers,
    radial_norm,
    radial_overlap,
    spectrum3d,
)
from pdmchannel.model3d.cylinder import angular_periodic, cyl_wall_max
from pdmchannel.model3d.operators import CYL_COORDS
from pdmchannel.verification.runner import box_degeneracy_scan_energy
from pdmchannel.wavefn.fields import SmoothField


def test_channel_energy_and_norm():
    assert channel_energy(0, 1.0, 1.0, 1.0) == 6.0
    assert channel_norm(0, 1.0, 1.0, 1.0) == pytest.approx(math.sqrt(7.5), rel=1e-13)
    for n, delta in [(0, math.sqrt(2)), (2, 2.5)]:
        assert channel_norm_quadrature(n, delta, 1.0, 1.0) == pytest.approx(
            channel_norm(n, delta, 1.0, 1.0), rel=1e-10
        )


def test_channel_norm_rejects_bad_input():
    with pytest.raises(InvalidParam):
        channel_norm(-1, 1.0, 1.0, 1.0)
    with pytest.raises(InvalidParam):
        channel_norm(0, 0.0, 1.0, 1.0)


def test_box_ground_state():
    state = box_state(0, 0, 0, 1.0, 1.0)
    assert state.delta_sq == 2
    assert state.E == pytest.approx(4 + 3 * math.sqrt(2), rel=1e-14)
    assert box_delta_sq(1, 8) == box_delta_sq(5, 6) == 85
    with pytest.raises(InvalidParam):
        box_delta_sq(-1, 0)
    with pytest.raises(InvalidParam):
        box_state(-1, 0, 0, 1.0, 1.0)


@pytest.mark.parametrize(("n", "l", "m"), [(0, 0, 0), (1, 0, 1)])
def test_box_state_checks_pass(n, l, m):
    check = check_box_state(n, l, m, 1.0, 1.0)
    assert check.passed, check


def test_box_spectrum_and_swap_groups():
    states = spectrum3d("box", 4, k=1.0, q=1.0)
    assert [quantum_numbers(s) for s in states] == [(0, 0, 0), (0, 0, 1), (0, 1, 0), (0, 1, 1)]
    groups = groups_for("box", states)
    assert [g.kind for g in groups] == ["single", "swap", "single"]
    assert groups[1].members == [(0, 0, 1), (0, 1, 0)]
    assert groups[1].key == "n=0,delta_sq=5"


def test_box_accidental_degeneracy():
    groups = box_degeneracy_scan(box_degeneracy_scan_energy(1.0, 1.0), 1.0, 1.0)
    accidental = next(g for g in groups if g.key == "n=0,delta_sq=85")
    assert accidental.kind == "accidental"
    assert accidental.members == [(0, 1, 8), (0, 5, 6), (0, 6, 5), (0, 8, 1)]
    assert [g.group_id for g in groups] == list(range(len(groups)))
    energies = [g.E for g in groups]
    assert energies == sorted(energies)


def test_scans_need_finite_energy():
    with pytest.raises(InvalidParam):
        box_degeneracy_scan(math.inf, 1.0, 1.0)
    with pytest.raises(InvalidParam):
        cyl_degeneracy_scan(math.nan, 1.0, 1.0, 1.0)


def test_spectrum3d_rejects_bad_input():
    with pytest.raises(InvalidParam):
        spectrum3d("sphere", 3, k=1.0, q=1.0)
    with pytest.raises(InvalidParam):
        spectrum3d("box", 0, k=1.0, q=1.0)


def test_cylinder_radial_normalization():
    assert radial_norm(0, 1, 1.0) == pytest.approx(2.72409, rel=1e-5)
    assert radial_overlap(1, 2, 2, 1.0) == pytest.approx(1.0, abs=1e-10)
    assert abs(radial_overlap(1, 1, 2, 1.0)) < 1e-9


def test_cylinder_state_energy():
    state = cyl_state(0, 0, 1, 1.0, 1.0, 1.0)
    assert state.j_ms == pytest.approx(2.404825557695773, abs=1e-12)
    assert state.E == pytest.approx(channel_energy(0, state.j_ms, 1.0, 1.0))
    wide = cyl_state(0, 0, 1, 1.0, 1.0, 2.0)
    assert wide.delta == pytest.approx(state.delta / 2)
    plus, minus = cyl_state(0, 1, 1, 1.0, 1.0, 1.0), cyl_state(0, -1, 1, 1.0, 1.0, 1.0)
    assert plus.E == minus.E
    with pytest.raises(InvalidParam):
        cyl_state(0, 0, 0, 1.0, 1.0, 1.0)
    with pytest.raises(InvalidParam):
        cyl_state(0, 0, 1, 1.0, 1.0, -1.0)


@pytest.mark.parametrize(("n", "m", "s"), [(0, 0, 1), (1, 1, 2)])
def test_cylinder_state_checks_pass(n, m, s):
    check = check_cyl_state(n, m, s, 1.0, 1.0, 1.0)
    assert check.passed, check


def test_angular_factor_is_single_valued():
    assert angular_periodic(0)
    assert angular_periodic(-3)


def test_cylinder_groups_pair_signs():
    states = spectrum3d("cyl", 3, k=1.0, q=1.0, R=1.0)
    assert [quantum_numbers(s) for s in states] == [(0, 0, 1), (0, -1, 1), (0, 1, 1)]
    groups = cyl_degeneracy_scan(30.0, 1.0, 1.0, 1.0)
    assert [g.kind for g in groups] == ["single", "sign"]
    assert groups[1].key == "n=0,abs_m=1,s=1"
    assert groups[1].members == [(0, -1, 1), (0, 1, 1)]


@pytest.mark.parametrize("build", [box_operators, cyl_operators])
def test_symmetry_operators_commute(build):
    residuals = commutator_residuals(build(1.0, 1.0), seed=4)
    assert set(residuals) == {"H_L_commute", "H_M_commute", "L_M_commute"}
    assert max(residuals.values()) < 1e-9


def test_cyl_wall_sampling_follows_the_length_scale():
    state = cyl_state(0, 0, 1, 1.0, 1.0, 1.0)
    values = []
    for qv in (1.0, 10.0):
        field = SmoothField(qv * X * sympy.exp(-qv * X), label="decay", coords=CYL_COORDS)
        values.append(cyl_wall_max(field, state, qv, seed=3))
    assert values[0] == pytest.approx(values[1], rel=1e-12)
    assert 0.0 < values[0] <= math.exp(-1)
    assert check_cyl_state(0, 0, 1, 1.0, 3.0, 1.0).wall_max <= 1e-12
