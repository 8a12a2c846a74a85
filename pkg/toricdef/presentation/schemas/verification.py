"""Verification API schemas."""

from typing import Any

from pydantic import BaseModel

from toricdef.domain.entities.report import VerificationReport


class CheckResponse(BaseModel):
    name: str
    passed: bool
    details: dict[str, Any]


class VerificationResponse(BaseModel):
    """Outcome of the acceptance suite."""

    seed: int
    all_passed: bool
    checks: list[CheckResponse]

    @classmethod
    def from_domain(cls, report: VerificationReport) -> "VerificationResponse":
        return cls(
            seed=report.seed,
            all_passed=report.all_passed,
            checks=[
                CheckResponse(name=c.name, passed=c.passed, details=c.details)
                for c in report.checks
            ],
        )
