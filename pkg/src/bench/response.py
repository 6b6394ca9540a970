from typing import Dict, List

from ninja import Schema
from pydantic import field_validator

from listcore.models import CostModel
from oracle.models import VerificationSummary


class ComparisonRow(Schema):
    file: str
    n: int
    list_size: int
    cost_model: CostModel
    costs: Dict[str, int]

    @field_validator("costs")
    @classmethod
    def non_negative_costs(cls, costs: Dict[str, int]):
        if not costs:
            raise ValueError("a row needs at least one algorithm cost")
        if any(cost < 0 for cost in costs.values()):
            raise ValueError("costs must be non-negative")
        return costs


class ComparisonListResponse(Schema):
    rows: List[ComparisonRow]


class PropertyViolationResponse(Schema):
    property: str
    instance: str
    detail: str


class VerificationResponse(Schema):
    passed: bool
    instances_checked: int
    list_size: int
    max_sequence_length: int
    cost_model: CostModel
    optimum: str
    violations: List[PropertyViolationResponse]

    @classmethod
    def build(cls, summary: VerificationSummary):
        return cls(
            passed=summary.passed,
            instances_checked=summary.instances_checked,
            list_size=summary.list_size,
            max_sequence_length=summary.max_sequence_length,
            cost_model=summary.cost_model,
            optimum=summary.optimum,
            violations=[
                PropertyViolationResponse(
                    property=violation.property,
                    instance=violation.instance,
                    detail=violation.detail,
                )
                for violation in summary.violations
            ],
        )
