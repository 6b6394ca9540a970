from dataclasses import dataclass, field
from typing import ClassVar, List

from listcore.models import CostModel, ListState, RequestSequence
from oracle.exceptions import InstanceTooLargeException


@dataclass(frozen=True)
class SmallInstance:
    MAX_LIST_SIZE: ClassVar[int] = 5
    MAX_SEQUENCE_LENGTH: ClassVar[int] = 10

    list_state: ListState
    sequence: RequestSequence
    cost_model: CostModel = CostModel.FULL

    def __post_init__(self):
        if len(self.list_state) > self.MAX_LIST_SIZE:
            raise InstanceTooLargeException(
                f"list size {len(self.list_state)} > {self.MAX_LIST_SIZE}"
            )
        if len(self.sequence) > self.MAX_SEQUENCE_LENGTH:
            raise InstanceTooLargeException(
                f"sequence length {len(self.sequence)} > {self.MAX_SEQUENCE_LENGTH}"
            )

    def describe(self) -> str:
        order = "".join(map(str, self.list_state.order))
        requests = "".join(map(str, self.sequence.symbols)) or "<empty>"
        return f"list={order} sigma={requests} model={self.cost_model.value}"


@dataclass(frozen=True)
class PropertyViolation:
    property: str
    instance: str
    detail: str


@dataclass
class VerificationSummary:
    cost_model: CostModel
    list_size: int
    max_sequence_length: int
    instances_checked: int = 0
    violations: List[PropertyViolation] = field(default_factory=list)
    # free-exchange optimum: an upper bound on the unrestricted offline optimum
    optimum: str = "free-exchange"

    @property
    def passed(self) -> bool:
        return not self.violations
