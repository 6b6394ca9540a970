from typing import List

from ninja import Schema

from algorithms.models import AlgorithmKind, RunReport, VfcPolicy
from listcore.models import CostModel


class StepRecordResponse(Schema):
    request: int
    position_before: int
    cost_charged: int
    requests_consumed: int
    list_after: List[int] | None = None
    freq_after: List[int] | None = None


class RunReportResponse(Schema):
    algorithm: AlgorithmKind
    cost_model: CostModel
    vfc_policy: VfcPolicy | None
    n: int
    total_cost: int
    steps: int
    final_order: List[int]
    final_frequencies: List[int]
    trace: List[StepRecordResponse]

    @classmethod
    def build(cls, report: RunReport):
        return cls(
            algorithm=report.kind,
            cost_model=report.cost_model,
            vfc_policy=report.vfc_policy,
            n=report.n,
            total_cost=report.total_cost,
            steps=report.steps,
            final_order=list(report.final_order),
            final_frequencies=[report.final_freq[s] for s in report.final_order],
            trace=[
                StepRecordResponse(
                    request=record.request,
                    position_before=record.position_before,
                    cost_charged=record.cost_charged,
                    requests_consumed=record.requests_consumed,
                    list_after=record.list_after,
                    freq_after=record.freq_after,
                )
                for record in report.trace
            ],
        )
