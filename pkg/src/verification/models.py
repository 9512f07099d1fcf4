"""
Report schema for identity checks.

Big integers are carried as decimal strings so that JSON consumers with
53-bit numbers cannot corrupt them.
"""

from enum import Enum
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field, field_validator

REPORT_VERSION = 1


class CheckStatus(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    SKIPPED = "skipped"


def _as_decimal(value: Any) -> Optional[str]:
    if value is None:
        return None
    return str(value)


class Witness(BaseModel):
    """Smallest counterexample found by a failed check."""

    n: int
    position: Optional[int] = None
    x_degree: Optional[int] = None
    expected: Optional[str] = None
    actual: Optional[str] = None
    detail: Optional[str] = None

    @field_validator("expected", "actual", mode="before")
    @classmethod
    def _stringify(cls, value: Any) -> Optional[str]:
        return _as_decimal(value)


class IdentityCheck(BaseModel):
    id: str
    params: Dict[str, int] = Field(default_factory=dict)
    status: CheckStatus
    witness: Optional[Witness] = None
    reason: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.status is CheckStatus.PASS

    @property
    def failed(self) -> bool:
        return self.status is CheckStatus.FAIL


class VerificationReport(BaseModel):
    version: int = REPORT_VERSION
    profile: Optional[str] = None
    checks: List[IdentityCheck] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        """True unless some check failed; skipped checks do not count against it."""
        return not any(check.failed for check in self.checks)

    def counts(self) -> Dict[str, int]:
        tally = {status.value: 0 for status in CheckStatus}
        for check in self.checks:
            tally[check.status.value] += 1
        return tally

    def to_text(self) -> str:
        lines = []
        for check in self.checks:
            params = " ".join(f"{key}={value}" for key, value in check.params.items())
            line = f"{check.id:<15} {check.status.value:<8} {params}".rstrip()
            if check.witness is not None:
                w = check.witness
                where = f"n={w.n}"
                if w.position is not None:
                    where += f" k={w.position}"
                if w.x_degree is not None:
                    where += f" x^{w.x_degree}"
                line += f"\n    witness {where}: expected {w.expected} got {w.actual}"
                if w.detail:
                    line += f" ({w.detail})"
            elif check.reason:
                line += f"\n    {check.reason}"
            lines.append(line)
        tally = self.counts()
        lines.append(f"{tally['pass']} passed, {tally['fail']} failed, {tally['skipped']} skipped")
        return "\n".join(lines)
