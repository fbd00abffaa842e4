"""
Verification reports for algebraic identities.

Every suite evaluates named identities as exact normal-form comparisons and
collects them into a VerificationResult. A check that raises an AlgebraError
counts as failed, with the error message as its witness.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Callable

from src.errors import AlgebraError

logger = logging.getLogger(__name__)


@dataclass
class VerificationCheck:
    """A single identity check."""
    check_id: str
    description: str
    formula: str
    passed: bool
    witness: str = ""      # first counterexample, empty when passed
    skipped: bool = False  # True if the check does not apply at these parameters

    def to_dict(self) -> dict:
        return {
            "check_id": self.check_id,
            "description": self.description,
            "formula": self.formula,
            "passed": self.passed,
            "witness": self.witness,
            "skipped": self.skipped,
        }


@dataclass
class VerificationResult:
    """Result of one verification suite."""
    suite: str
    parameters: dict[str, Any] = field(default_factory=dict)
    checks: list[VerificationCheck] = field(default_factory=list)
    tables: dict[str, list[list[str]]] = field(default_factory=dict)

    @property
    def pass_count(self) -> int:
        return sum(1 for c in self.checks if c.passed and not c.skipped)

    @property
    def fail_count(self) -> int:
        return sum(1 for c in self.checks if not c.passed and not c.skipped)

    @property
    def skip_count(self) -> int:
        return sum(1 for c in self.checks if c.skipped)

    @property
    def passed(self) -> bool:
        return self.fail_count == 0

    def failures(self) -> list[VerificationCheck]:
        return [c for c in self.checks if not c.passed and not c.skipped]

    def extend(self, other: "VerificationResult") -> None:
        self.checks.extend(other.checks)
        self.tables.update(other.tables)

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "parameters": self.parameters,
            "passed": self.passed,
            "checks": [c.to_dict() for c in self.checks],
            "tables": self.tables,
            "pass_count": self.pass_count,
            "fail_count": self.fail_count,
            "skip_count": self.skip_count,
        }


def _run_check(
    check_id: str,
    description: str,
    formula: str,
    compute: Callable[[], tuple[Any, Any]],
) -> VerificationCheck:
    """Evaluate compute() -> (lhs, rhs) and compare exactly."""
    try:
        lhs, rhs = compute()
    except AlgebraError as exc:
        logger.debug("check %s raised %s", check_id, exc)
        return VerificationCheck(
            check_id=check_id, description=description, formula=formula,
            passed=False, witness=f"{type(exc).__name__}: {exc}",
        )
    passed = lhs == rhs
    witness = "" if passed else f"lhs = {lhs}; rhs = {rhs}"
    return VerificationCheck(
        check_id=check_id, description=description, formula=formula,
        passed=passed, witness=witness,
    )


def _record(
    check_id: str,
    description: str,
    formula: str,
    passed: bool,
    witness: str = "",
) -> VerificationCheck:
    return VerificationCheck(
        check_id=check_id, description=description, formula=formula,
        passed=passed, witness="" if passed else witness,
    )


def _skipped(check_id: str, description: str, formula: str) -> VerificationCheck:
    return VerificationCheck(
        check_id=check_id, description=description, formula=formula,
        passed=True, skipped=True,
    )
