"""Shared fixtures: the operator catalog and a throwaway config directory."""

from pathlib import Path

import pytest

from pdmchannel.model2d.catalog import build_catalog

DEFAULT_TOML = """\
[model]
k = 1.0
q = 1.0
R = 1.0

[quadrature]
t_nodes = 96
y_nodes = 64
rel_tol = 1e-8

[fd]
x_max_q = 12.0
nodes = 399

[verify]
n_max = 2
seed = 7

[report]
format = "json"

[logging]
level = "WARNING"
format = "json"
"""


@pytest.fixture(scope="session")
def catalog():
    return build_catalog()


@pytest.fixture
def config_dir(tmp_path: Path) -> Path:
    directory = tmp_path / "config"
    directory.mkdir()
    (directory / "default.toml").write_text(DEFAULT_TOML)
    (directory / "fast.toml").write_text("[model]\nk = 2.0\n\n[verify]\nn_max = 1\n")
    return directory
