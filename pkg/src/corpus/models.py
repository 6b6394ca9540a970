from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import FrozenSet, Tuple

from corpus.exceptions import CorpusUnreadableException
from listcore.models import Symbol

# "spaces and return key": space, carriage return, line feed
DEFAULT_STRIP_BYTES: FrozenSet[int] = frozenset({0x20, 0x0D, 0x0A})


@dataclass(frozen=True)
class CorpusText:
    data: bytes
    source_name: str = ""

    @classmethod
    def from_path(cls, path: str | Path) -> CorpusText:
        path = Path(path)
        try:
            return cls(data=path.read_bytes(), source_name=path.name)
        except OSError as e:
            raise CorpusUnreadableException(f"{path}: {e.strerror or e}")


class ListOrderPolicy(str, Enum):
    FIRST_OCCURRENCE = "first-occurrence"
    BYTE_VALUE_ASCENDING = "byte-value"


class SequenceDistribution(str, Enum):
    UNIFORM = "uniform"
    ZIPF = "zipf"  # parameter: exponent s >= 0
    RUN_LENGTHS = "runs"  # parameter: mean run length >= 1


@dataclass(frozen=True)
class GeneratorSpec:
    alphabet: Tuple[Symbol, ...]
    length: int
    distribution: SequenceDistribution = SequenceDistribution.UNIFORM
    parameter: float | None = None
    seed: int = 0

    @property
    def source_name(self) -> str:
        parameter = "" if self.parameter is None else f"-{self.parameter:g}"
        return (
            f"{self.distribution.value}{parameter}"
            f"-m{len(self.alphabet)}-n{self.length}-s{self.seed}"
        )
