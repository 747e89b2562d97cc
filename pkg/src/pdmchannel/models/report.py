"""CheckResult, Report - machine-readable verification results."""

from __future__ import annotations

import math
from typing import Any

from pydantic import BaseModel, ConfigDict, Field


class IdentityReport(BaseModel):
    """Outcome of one exact operator identity."""

    id: str
    holds: bool
    residual_term_count: int = Field(..., ge=0)


class CheckResult(BaseModel):
    """One comparison of a computed value (lhs) against its reference (rhs)."""

    model_config = ConfigDict(populate_by_name=True)

    id: str
    passed: bool = Field(..., alias="pass")
    lhs: float
    rhs: float
    abs_err: float = Field(..., ge=0)
    rel_err: float = Field(..., ge=0)

    @classmethod
    def compare(cls, id: str, lhs: float, rhs: float, tol: float, *, relative: bool = True):
        """Pass iff |lhs - rhs| <= tol (scaled by |rhs| when relative and rhs != 0)."""
        lhs, rhs = float(lhs), float(rhs)
        abs_err = abs(lhs - rhs)
        if not math.isfinite(abs_err):
            abs_err = math.inf
        rel_err = abs_err / abs(rhs) if rhs != 0 else abs_err
        err = rel_err if relative else abs_err
        return cls(id=id, passed=err <= tol, lhs=lhs, rhs=rhs, abs_err=abs_err, rel_err=rel_err)

    @classmethod
    def exact(cls, id: str, holds: bool, residual_terms: int = 0):
        """An exact identity: lhs is the residual term count, rhs is 0."""
        n = float(residual_terms)
        return cls(id=id, passed=holds, lhs=n, rhs=0.0, abs_err=n, rel_err=n)


class ReportSummary(BaseModel):
    total: int = Field(..., ge=0)
    passed: int = Field(..., ge=0)


class Report(BaseModel):
    """Top-level JSON report; no timestamps so identical runs are byte-identical."""

    tool_version: str
    command: str
    params: dict[str, Any] = Field(default_factory=dict)
    checks: list[CheckResult] = Field(default_factory=list)
    summary: ReportSummary

    @classmethod
    def build(cls, command: str, params: dict[str, Any], checks: list[CheckResult]) -> Report:
        from pdmchannel import __version__

        return cls(
            tool_version=__version__,
            command=command,
            params=params,
            checks=checks,
            summary=ReportSummary(total=len(checks), passed=sum(c.passed for c in checks)),
        )

    @property
    def ok(self) -> bool:
        return self.summary.passed == self.summary.total

    def first_failure(self) -> CheckResult | None:
        return next((c for c in self.checks if not c.passed), None)
