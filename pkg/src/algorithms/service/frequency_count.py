from typing import Tuple

from listcore.models import CostModel, ListState, Symbol


class FrequencyCountService:
    @staticmethod
    def reorganize(
        state: ListState, accessed: Symbol, position: int | None = None
    ) -> ListState:
        """
        Move the accessed element (its counter already updated) in front of the
        first element i it beats: f > f_i, or f == f_i and f > f_(i+1).

        f_(i+1) may be the accessed element itself, which blocks the move.
        """
        j: int = position or state.position_of(accessed)
        order, freq = state.order, state.freq
        f: int = freq[accessed]

        for i in range(1, j):
            f_i: int = freq[order[i - 1]]
            if f > f_i:
                return state.move_forward(from_pos=j, to_pos=i)
            if f == f_i:
                # a missing successor counts as -inf
                if i >= len(order) or f > freq[order[i]]:
                    return state.move_forward(from_pos=j, to_pos=i)
        return state

    def step(
        self, state: ListState, request: Symbol, model: CostModel
    ) -> Tuple[ListState, int]:
        position: int = state.position_of(request)
        cost: int = model.access_cost(position)
        state.freq[request] += 1
        self.reorganize(state, request, position)
        return state, cost


frequency_count_service = FrequencyCountService()
