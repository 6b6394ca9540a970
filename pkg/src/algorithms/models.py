from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Tuple

from listcore.models import CostModel, ListState, StepRecord, Symbol


class AlgorithmKind(str, Enum):
    MTF = "mtf"
    TRANS = "trans"
    FC = "fc"
    VFC = "vfc"


class VfcPolicy(str, Enum):
    # LITERAL: batch when the request reappears anywhere in the window
    # STRICT_HOMOGENEOUS: batch only when the whole window repeats the request
    LITERAL = "literal"
    STRICT_HOMOGENEOUS = "strict"


@dataclass
class VfcRunState:
    list_state: ListState
    cursor: int = 0
    head_freq_cache: int = 0

    @classmethod
    def start(cls, list_state: ListState) -> "VfcRunState":
        head_freq = list_state.freq[list_state.head] if list_state.order else 0
        return cls(list_state=list_state, cursor=0, head_freq_cache=head_freq)


@dataclass
class RunReport:
    kind: AlgorithmKind
    cost_model: CostModel
    vfc_policy: VfcPolicy | None
    n: int
    total_cost: int = 0
    steps: int = 0
    trace: List[StepRecord] = field(default_factory=list)
    final_order: Tuple[Symbol, ...] = ()
    final_freq: Dict[Symbol, int] = field(default_factory=dict)

    @property
    def requests_consumed(self) -> int:
        return sum(record.requests_consumed for record in self.trace)
