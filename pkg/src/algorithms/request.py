from typing import List

from ninja import Schema

from algorithms.models import AlgorithmKind, VfcPolicy
from listcore.models import CostModel


class AlgorithmRunRequestBody(Schema):
    algorithm: AlgorithmKind
    list: List[int]
    sequence: List[int]
    frequencies: List[int] | None = None  # aligned with `list`, all zero when omitted
    cost_model: CostModel = CostModel.FULL
    vfc_policy: VfcPolicy = VfcPolicy.LITERAL
    snapshots: bool = False
