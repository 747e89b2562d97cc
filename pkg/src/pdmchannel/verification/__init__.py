"""Verification suites shared by the CLI and the test-suite."""

from pdmchannel.verification.runner import SCOPES, SUITES, SuiteContext, run_scope

__all__ = ["SCOPES", "SUITES", "SuiteContext", "run_scope"]
