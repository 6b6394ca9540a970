from typing import Tuple

from listcore.models import CostModel, ListState, Symbol


class MoveToFrontService:
    @staticmethod
    def step(
        state: ListState, request: Symbol, model: CostModel
    ) -> Tuple[ListState, int]:
        position: int = state.position_of(request)
        cost: int = model.access_cost(position)
        state.move_forward(from_pos=position, to_pos=1)
        return state, cost


class TransposeService:
    @staticmethod
    def step(
        state: ListState, request: Symbol, model: CostModel
    ) -> Tuple[ListState, int]:
        position: int = state.position_of(request)
        cost: int = model.access_cost(position)
        # swapping with the predecessor is a free exchange of the accessed element
        if position > 1:
            state.move_forward(from_pos=position, to_pos=position - 1)
        return state, cost


move_to_front_service = MoveToFrontService()
transpose_service = TransposeService()
