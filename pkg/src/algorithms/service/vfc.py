import logging
from typing import Sequence, Tuple

from algorithms.exceptions import CursorExhaustedException, InvariantBreachException
from algorithms.models import VfcPolicy, VfcRunState
from algorithms.service.frequency_count import frequency_count_service
from listcore.models import CostModel, RequestSequence, Symbol


logger = logging.getLogger(__name__)


class VariableFrequencyCountService:
    @staticmethod
    def lookahead_size(f_elem: int, f_head: int) -> int:
        return abs(f_elem - f_head) + 1

    @staticmethod
    def batch_triggered(
        request: Symbol, window: Sequence[Symbol], policy: VfcPolicy
    ) -> bool:
        if policy is VfcPolicy.STRICT_HOMOGENEOUS:
            return bool(window) and all(symbol == request for symbol in window)
        return request in window

    def step(
        self,
        run: VfcRunState,
        sequence: RequestSequence,
        model: CostModel,
        policy: VfcPolicy = VfcPolicy.LITERAL,
    ) -> Tuple[VfcRunState, int, int]:
        """
        Serve the request under the cursor and return (run, cost_delta, consumed).

        When the head's counter exceeds the request's, the next La - 1 requests are
        inspected; on a trigger the block of B = min(La, remaining) requests starting
        at the cursor is consumed at once, adding B to the counter and charging the
        access plus one unit per further request of the block.
        """
        remaining: int = len(sequence) - run.cursor
        if remaining <= 0:
            raise CursorExhaustedException(
                f"cursor={run.cursor}, sequence length={len(sequence)}"
            )

        state = run.list_state
        request: Symbol = sequence[run.cursor]
        position: int = state.position_of(request)
        f: int = state.freq[request]
        f_head: int = run.head_freq_cache

        consumed: int = 1
        lookahead: int = 1
        if f_head > f:
            lookahead = self.lookahead_size(f, f_head)
            window = sequence.window(run.cursor + 1, lookahead - 1)
            if self.batch_triggered(request, window, policy):
                consumed = min(lookahead, remaining)

        cost_delta: int = model.access_cost(position) + (consumed - 1)
        state.freq[request] += consumed
        frequency_count_service.reorganize(state, request, position)

        if consumed > 1 and consumed == lookahead and state.head != request:
            raise InvariantBreachException(
                f"batch of {consumed} for {request!r} left {state.head!r} at the head"
            )

        run.cursor += consumed
        run.head_freq_cache = state.freq[state.head]
        return run, cost_delta, consumed


vfc_service = VariableFrequencyCountService()
