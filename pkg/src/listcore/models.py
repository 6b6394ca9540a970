from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Iterable, List, Tuple

from listcore.exceptions import (
    BackwardMoveException,
    DuplicateSymbolException,
    NegativeFrequencyException,
    PositionOutOfRangeException,
    SymbolNotInListException,
)

# byte value for corpus runs, small integer for synthetic runs
Symbol = int


class CostModel(str, Enum):
    """
    Access cost of the element at 1-based position i.

    FULL charges i, PARTIAL charges i - 1 (the comparisons made before the hit).
    A paid exchange (swap of two adjacent elements) would cost one unit under
    either model; no engine in this project performs one.
    """

    FULL = "full"
    PARTIAL = "partial"

    def access_cost(self, position: int) -> int:
        if position < 1:
            raise PositionOutOfRangeException(f"position {position} < 1")
        if self is CostModel.FULL:
            return position
        return position - 1


@dataclass
class ListState:
    order: List[Symbol]
    freq: Dict[Symbol, int] = field(default_factory=dict)

    def __post_init__(self):
        if len(set(self.order)) != len(self.order):
            raise DuplicateSymbolException(f"order={self.order}")
        stray = set(self.freq).difference(self.order)
        if stray:
            raise SymbolNotInListException(
                f"counts for {sorted(stray)} outside the list"
            )
        self.freq = dict(self.freq)
        for symbol in self.order:
            if self.freq.setdefault(symbol, 0) < 0:
                raise NegativeFrequencyException(
                    f"freq({symbol!r})={self.freq[symbol]}"
                )

    @classmethod
    def from_symbols(
        cls, symbols: Iterable[Symbol], freq: Dict[Symbol, int] | None = None
    ) -> ListState:
        return cls(order=list(symbols), freq=dict(freq or {}))

    def __len__(self) -> int:
        return len(self.order)

    def __contains__(self, symbol: Symbol) -> bool:
        return symbol in self.order

    @property
    def head(self) -> Symbol:
        return self.order[0]

    def position_of(self, symbol: Symbol) -> int:
        try:
            return self.order.index(symbol) + 1
        except ValueError:
            raise SymbolNotInListException(f"symbol {symbol!r} not in list")

    def move_forward(self, from_pos: int, to_pos: int) -> ListState:
        """Free exchange: from_pos jumps to to_pos, the block in between shifts back."""
        size = len(self.order)
        if not (1 <= from_pos <= size and 1 <= to_pos <= size):
            raise PositionOutOfRangeException(
                f"from_pos={from_pos}, to_pos={to_pos}, list size={size}"
            )
        if to_pos > from_pos:
            raise BackwardMoveException(f"from_pos={from_pos}, to_pos={to_pos}")
        if to_pos != from_pos:
            symbol = self.order.pop(from_pos - 1)
            self.order.insert(to_pos - 1, symbol)
        return self

    def copy(self) -> ListState:
        return ListState(order=list(self.order), freq=dict(self.freq))

    def snapshot(self) -> Tuple[Symbol, ...]:
        return tuple(self.order)

    def freq_snapshot(self) -> Tuple[int, ...]:
        return tuple(self.freq[symbol] for symbol in self.order)


@dataclass(frozen=True)
class RequestSequence:
    symbols: Tuple[Symbol, ...]
    source_name: str = ""

    @classmethod
    def of(cls, symbols: Iterable[Symbol], source_name: str = "") -> RequestSequence:
        return cls(symbols=tuple(symbols), source_name=source_name)

    def __len__(self) -> int:
        return len(self.symbols)

    def __getitem__(self, index: int) -> Symbol:
        return self.symbols[index]

    def __iter__(self):
        return iter(self.symbols)

    def window(self, start: int, size: int) -> Tuple[Symbol, ...]:
        # clipped at the end of the sequence
        return self.symbols[start : start + max(size, 0)]

    def truncated(self, limit: int | None) -> RequestSequence:
        if limit is None or limit >= len(self.symbols):
            return self
        return RequestSequence(
            symbols=self.symbols[:limit], source_name=self.source_name
        )

    def alphabet(self) -> List[Symbol]:
        return list(dict.fromkeys(self.symbols))


@dataclass(frozen=True, slots=True)
class StepRecord:
    request: Symbol
    position_before: int
    cost_charged: int
    requests_consumed: int = 1
    list_after: Tuple[Symbol, ...] | None = None
    freq_after: Tuple[int, ...] | None = None
