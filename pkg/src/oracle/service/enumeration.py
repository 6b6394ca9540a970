from itertools import product
from typing import Iterator

from listcore.models import CostModel, ListState, RequestSequence
from oracle.exceptions import BoundsExceededException
from oracle.models import SmallInstance


class EnumerationService:
    MAX_LIST_SIZE = 4
    MAX_SEQUENCE_LENGTH = 8

    def enumerate_instances(
        self, m: int, n_max: int, model: CostModel = CostModel.FULL
    ) -> Iterator[SmallInstance]:
        """Every sequence over symbols 1..m of length 0..n_max, on the identity list."""
        if not 1 <= m <= self.MAX_LIST_SIZE:
            raise BoundsExceededException(f"m={m} outside 1..{self.MAX_LIST_SIZE}")
        if not 0 <= n_max <= self.MAX_SEQUENCE_LENGTH:
            raise BoundsExceededException(
                f"n_max={n_max} outside 0..{self.MAX_SEQUENCE_LENGTH}"
            )

        return self._instances(m, n_max, model)

    @staticmethod
    def _instances(m: int, n_max: int, model: CostModel) -> Iterator[SmallInstance]:
        alphabet = range(1, m + 1)
        for length in range(n_max + 1):
            for requests in product(alphabet, repeat=length):
                yield SmallInstance(
                    list_state=ListState.from_symbols(alphabet),
                    sequence=RequestSequence.of(requests),
                    cost_model=model,
                )


enumeration_service = EnumerationService()
