"""Structured pass/fail results shared by the verification routines."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass
class Check:
    name: str
    passed: bool
    counterexample: Any = None

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "status": "pass" if self.passed else "fail",
            "counterexample": self.counterexample,
        }


@dataclass
class VerificationReport:
    """A named list of checks; ``conjectural`` marks experiments that prove nothing."""

    name: str
    checks: list[Check] = field(default_factory=list)
    conjectural: bool = False
    data: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, passed: bool, counterexample: Any = None) -> bool:
        self.checks.append(Check(name, bool(passed), None if passed else counterexample))
        return bool(passed)

    def extend(self, other: VerificationReport) -> None:
        self.checks.extend(other.checks)
        self.conjectural |= other.conjectural

    def first_failure(self) -> Check | None:
        return next((c for c in self.checks if not c.passed), None)

    def __bool__(self) -> bool:
        return self.passed
