from functools import lru_cache
from typing import List, Tuple

from listcore.models import CostModel, Symbol
from oracle.models import SmallInstance


class ReferenceService:
    @staticmethod
    def naive_fc_cost(instance: SmallInstance) -> int:
        """Frequency count replayed on [symbol, count] pairs, apart from the engines."""
        charge_offset = 1 if instance.cost_model is CostModel.FULL else 0
        entries: List[List[int]] = [
            [symbol, instance.list_state.freq[symbol]]
            for symbol in instance.list_state.order
        ]
        total = 0
        for request in instance.sequence:
            j = next(k for k, entry in enumerate(entries) if entry[0] == request)
            total += j + charge_offset
            entries[j][1] += 1
            count = entries[j][1]
            for k in range(j):
                ahead, after = entries[k][1], entries[k + 1][1]
                if count > ahead or (count == ahead and count > after):
                    entries.insert(k, entries.pop(j))
                    break
        return total

    @staticmethod
    def opt_free_exchange_cost(instance: SmallInstance) -> int:
        """
        Cheapest way to serve the sequence when, after each access, the accessed
        element may be moved anywhere closer to the front at no cost.

        Memoized over (order, request index); counters play no part.
        """
        requests: Tuple[Symbol, ...] = instance.sequence.symbols
        charge_offset = 1 if instance.cost_model is CostModel.FULL else 0

        @lru_cache(maxsize=None)
        def best(order: Tuple[Symbol, ...], index: int) -> int:
            if index == len(requests):
                return 0
            request = requests[index]
            j = order.index(request)
            rest = order[:j] + order[j + 1 :]
            return j + charge_offset + min(
                best(rest[:k] + (request,) + rest[k:], index + 1)
                for k in range(j + 1)
            )

        return best(instance.list_state.snapshot(), 0)


reference_service = ReferenceService()
