"""Verification suites run end to end."""

import pytest

from pdmchannel.errors import InvalidParam
from pdmchannel.verification.runner import SCOPES, SUITES, SuiteContext, run_scope


def test_every_scope_has_a_suite():
    assert set(SUITES) == set(SCOPES)


@pytest.mark.parametrize("scope", ["algebra2d", "classical", "numerics"])
def test_fast_scopes_pass(scope):
    checks = run_scope(scope, SuiteContext())
    assert checks
    failed = [c.id for c in checks if not c.passed]
    assert failed == []


def test_check_ids_are_unique():
    checks = run_scope("numerics", SuiteContext(k=2.0, q=0.5))
    ids = [c.id for c in checks]
    assert len(ids) == len(set(ids))
    assert all(c.passed for c in checks)


@pytest.mark.slow
@pytest.mark.parametrize("scope", ["wavefn", "quadratic", "model3d"])
def test_slow_scopes_pass(scope):
    checks = run_scope(scope, SuiteContext(n_max=2, residual_levels=3, seed=7))
    assert [c.id for c in checks if not c.passed] == []


def test_unknown_scope():
    with pytest.raises(InvalidParam):
        run_scope("everything")


def test_numerics_sweeps_fd_channels():
    ids = {c.id for c in run_scope("numerics", SuiteContext())}
    for tag in ("k1_l0", "k1_l1", "k2_l0", "k2_l1"):
        assert {f"fd_{tag}_n0", f"fd_{tag}_n1", f"fd_order_{tag}"} <= ids


@pytest.mark.slow
def test_wavefn_sweeps_every_k_and_q():
    ctx = SuiteContext(n_max=1, residual_levels=2, k_values=(0.5, 2.5), q_values=(1.0, 2.0))
    checks = {c.id: c for c in run_scope("wavefn", ctx)}
    for suffix in ("_k0.5_q1", "_k0.5_q2", "_k2.5_q1", "_k2.5_q2"):
        assert checks[f"H_psi_n1_l0{suffix}"].passed
        assert checks[f"L_psi_n0_l2{suffix}"].passed
    assert checks["gram_n5_l5"].passed
    assert checks["gram_n5_l5"].abs_err <= 1e-10
