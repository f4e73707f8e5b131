"""Rule outcomes shared by the scheme checks and the restriction engine."""

from __future__ import annotations

import enum
from dataclasses import dataclass


class Outcome(str, enum.Enum):
    PASS = "pass"
    FAIL = "fail"
    NOT_APPLICABLE = "not-applicable"


@dataclass(frozen=True)
class RuleVerdict:
    rule_id: str
    outcome: Outcome
    detail: str = ""

    def __post_init__(self):
        if self.outcome is not Outcome.PASS and not self.detail:
            raise ValueError(f"{self.rule_id}: {self.outcome.value} verdict needs a detail")

    @property
    def passed(self) -> bool:
        return self.outcome is Outcome.PASS

    @property
    def failed(self) -> bool:
        return self.outcome is Outcome.FAIL

    @classmethod
    def ok(cls, rule_id: str, detail: str = "") -> "RuleVerdict":
        return cls(rule_id, Outcome.PASS, detail)

    @classmethod
    def fail(cls, rule_id: str, detail: str) -> "RuleVerdict":
        return cls(rule_id, Outcome.FAIL, detail)

    @classmethod
    def not_applicable(cls, rule_id: str, detail: str) -> "RuleVerdict":
        return cls(rule_id, Outcome.NOT_APPLICABLE, detail)
