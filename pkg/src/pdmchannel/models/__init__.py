"""Canonical records (Pydantic) - spectra, reports, run configuration."""

from pdmchannel.models.report import CheckResult, IdentityReport, Report, ReportSummary
from pdmchannel.models.run import RunConfig
from pdmchannel.models.spectrum import BoxState, CylState, DegeneracyGroup, SpectrumEntry

__all__ = [
    "CheckResult",
    "IdentityReport",
    "Report",
    "ReportSummary",
    "RunConfig",
    "SpectrumEntry",
    "BoxState",
    "CylState",
    "DegeneracyGroup",
]
