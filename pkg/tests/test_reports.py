"""Report models, parameter validation and byte-stable rendering."""

import json
import math

import pytest
from pydantic import ValidationError

from pdmchannel.errors import OutputError
from pdmchannel.model3d import box_state, cyl_state
from pdmchannel.models.report import CheckResult, Report
from pdmchannel.models.run import RunConfig
from pdmchannel.models.spectrum import DegeneracyGroup, SpectrumEntry
from pdmchannel.storage.reports import (
    SPECTRUM_HEADER,
    field_rows,
    format_float,
    render_csv,
    render_json,
    spectrum2d_rows,
    spectrum3d_rows,
    write_text,
)


def test_compare_relative_and_absolute():
    ok = CheckResult.compare("x", 6.0 + 1e-12, 6.0, 1e-10)
    assert ok.passed
    assert ok.abs_err == pytest.approx(1e-12, rel=1e-3)
    bad = CheckResult.compare("y", 1e-3, 0.0, 1e-6, relative=False)
    assert not bad.passed
    assert bad.rel_err == bad.abs_err


def test_compare_with_nan_fails():
    check = CheckResult.compare("nan", math.nan, 1.0, 1e-6)
    assert not check.passed
    assert check.abs_err == math.inf


def test_report_summary_and_first_failure():
    checks = [
        CheckResult.exact("a", True),
        CheckResult.exact("b", False, residual_terms=3),
        CheckResult.compare("c", 2.0, 2.0, 1e-12),
    ]
    report = Report.build("verify", {"scope": "all"}, checks)
    assert report.summary.total == 3
    assert report.summary.passed == 2
    assert not report.ok
    assert report.first_failure().id == "b"
    assert report.first_failure().lhs == 3.0


def test_report_json_uses_pass_alias():
    report = Report.build("verify", {}, [CheckResult.exact("a", True)])
    data = json.loads(render_json(report))
    assert data["checks"][0]["pass"] is True
    assert "passed" not in data["checks"][0]
    assert data["command"] == "verify"


def test_render_json_is_stable():
    text = render_json({"b": 1.5, "a": [math.inf, 2]})
    assert text.endswith("}\n")
    assert text.index('"a"') < text.index('"b"')
    assert json.loads(text)["a"] == ["inf", 2]
    assert render_json({"b": 1.5, "a": [math.inf, 2]}) == text


def test_render_csv():
    text = render_csv(("x", "y"), [(0.1, 1), (1 / 3, "s")])
    assert text == "x,y\n0.1,1\n0.333333333333,s\n"
    assert format_float(20.0) == "20"


def test_write_text(tmp_path):
    path = write_text("hello\n", tmp_path / "nested" / "out.txt")
    assert path.read_text() == "hello\n"
    blocker = tmp_path / "file"
    blocker.write_text("")
    with pytest.raises(OutputError):
        write_text("x", blocker / "child.txt")


def test_spectrum_entry_checks_level():
    entry = SpectrumEntry(N=4, n=1, l=2, E=30.0, L_eig=9.0, deg=3)
    assert spectrum2d_rows([entry]) == [("2d", "1,2", 3.0, 30.0, 4)]
    with pytest.raises(ValidationError):
        SpectrumEntry(N=3, n=1, l=2, E=30.0, L_eig=9.0, deg=3)


def test_spectrum3d_rows_carry_group_ids():
    states = [box_state(0, 0, 1, 1.0, 1.0), box_state(0, 1, 0, 1.0, 1.0)]
    group = DegeneracyGroup(
        group_id=4, kind="swap", key="n=0,delta_sq=5", E=states[0].E, members=[(0, 0, 1), (0, 1, 0)]
    )
    rows = spectrum3d_rows("box", states, [group])
    assert [r[1] for r in rows] == ["0,0,1", "0,1,0"]
    assert {r[4] for r in rows} == {4}
    assert len(rows[0]) == len(SPECTRUM_HEADER)
    cyl = cyl_state(0, -1, 1, 1.0, 1.0, 1.0)
    single = DegeneracyGroup(group_id=0, kind="single", key="k", E=cyl.E, members=[(0, -1, 1)])
    assert spectrum3d_rows("cyl", [cyl], [single])[0][1] == "0,-1,1"


def test_degeneracy_kind_is_restricted():
    with pytest.raises(ValidationError):
        DegeneracyGroup(group_id=0, kind="other", key="k", E=1.0)


def test_field_rows():
    assert field_rows([0.0, 1.0], [2.0, 3.0], [0.5, 0.25]) == [(0.0, 2.0, 0.5), (1.0, 3.0, 0.25)]
    with pytest.raises(ValueError):
        field_rows([0.0], [1.0, 2.0], [0.5])


def test_run_config_defaults():
    cfg = RunConfig(command="export-field", grid="20x30")
    assert cfg.grid_shape == (20, 30)
    assert cfg.params("k", "q", "grid") == {"k": 1.0, "q": 1.0, "grid": "20x30"}


@pytest.mark.parametrize(
    "kwargs",
    [
        {"k": 0.0},
        {"q": math.inf},
        {"count": 0},
        {"grid": "50by50"},
        {"grid": "0x5"},
        {"scope": "everything"},
        {"model": "sphere"},
        {"delta": 0.5},
        {"colour": "red"},
    ],
)
def test_run_config_rejects(kwargs):
    with pytest.raises(ValidationError):
        RunConfig(command="spectrum", **kwargs)


def test_fdcheck_needs_exactly_one_channel():
    assert RunConfig(command="fdcheck", l=0).l == 0
    assert RunConfig(command="fdcheck", delta=2.0).delta == 2.0
    with pytest.raises(ValidationError):
        RunConfig(command="fdcheck")
    with pytest.raises(ValidationError):
        RunConfig(command="fdcheck", l=0, delta=2.0)
