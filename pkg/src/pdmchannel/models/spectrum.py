"""SpectrumEntry, BoxState, CylState, DegeneracyGroup - bound-state records."""

from __future__ import annotations

from pydantic import BaseModel, Field, model_validator


class SpectrumEntry(BaseModel):
    """One bound state of the 2D layer in the separable (psi_{n,l}) basis."""

    N: int = Field(..., ge=0)
    n: int = Field(..., ge=0)
    l: int = Field(..., ge=0)
    E: float
    L_eig: float
    deg: int = Field(..., ge=1)

    @model_validator(mode="after")
    def _level(self) -> SpectrumEntry:
        if 2 * self.n + self.l != self.N:
            raise ValueError("N must equal 2n + l")
        return self


class BoxState(BaseModel):
    """Parallelepipedal channel state (n, l, m)."""

    n: int = Field(..., ge=0)
    l: int = Field(..., ge=0)
    m: int = Field(..., ge=0)
    delta_sq: int = Field(..., ge=2)
    delta: float
    E: float
    norm: float


class CylState(BaseModel):
    """Cylindrical channel state (n, m, s)."""

    n: int = Field(..., ge=0)
    m: int
    s: int = Field(..., ge=1)
    R: float = Field(..., gt=0)
    j_ms: float = Field(..., gt=0)
    delta: float
    E: float
    radial_norm: float
    norm: float


class DegeneracyGroup(BaseModel):
    """States sharing one exact energy."""

    group_id: int = Field(..., ge=0)
    kind: str = Field(..., pattern="^(single|swap|sign|accidental)$")
    key: str
    E: float
    members: list[tuple[int, ...]] = Field(default_factory=list)
