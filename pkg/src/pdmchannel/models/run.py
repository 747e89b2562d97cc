"""RunConfig - validated CLI parameters."""

from __future__ import annotations

from pathlib import Path

from pydantic import BaseModel, ConfigDict, Field, model_validator

SCOPE_PATTERN = "^(algebra2d|quadratic|classical|wavefn|numerics|model3d|all)$"


class RunConfig(BaseModel):
    """Flags of one CLI invocation, validated before any computation."""

    model_config = ConfigDict(extra="forbid")

    command: str
    k: float = Field(1.0, gt=0, allow_inf_nan=False)
    q: float = Field(1.0, gt=0, allow_inf_nan=False)
    R: float = Field(1.0, gt=0, allow_inf_nan=False)
    count: int = Field(10, ge=1, le=2000)
    N: int | None = Field(None, ge=0, le=40)
    l: int | None = Field(None, ge=0)
    delta: float | None = Field(None, ge=1.0, allow_inf_nan=False)
    scope: str = Field("all", pattern=SCOPE_PATTERN)
    model: str = Field("2d", pattern="^(2d|box|cyl)$")
    e_max: float | None = Field(None, gt=0, allow_inf_nan=False)
    state: str | None = None
    grid: str = Field("50x50", pattern=r"^[1-9][0-9]*x[1-9][0-9]*$")
    t_nodes: int = Field(96, ge=8, le=256)
    y_nodes: int = Field(64, ge=8, le=256)
    x_max: float | None = Field(None, gt=0)
    nodes: int = Field(399, ge=200, le=20000)
    out: Path | None = None
    format: str = Field("json", pattern="^(json|csv)$")

    @model_validator(mode="after")
    def _one_channel(self) -> RunConfig:
        if self.command == "fdcheck" and (self.l is None) == (self.delta is None):
            raise ValueError("fdcheck needs exactly one of --l or --delta")
        return self

    @property
    def grid_shape(self) -> tuple[int, int]:
        nx, ny = self.grid.split("x")
        return int(nx), int(ny)

    def params(self, *names: str) -> dict:
        """Subset of parameters for the report header, in a fixed order."""
        data = self.model_dump(mode="json")
        return {name: data[name] for name in names}
