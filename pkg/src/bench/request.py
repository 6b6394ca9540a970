from typing import List

from ninja import Field, Schema
from pydantic import field_validator, model_validator

from algorithms.models import AlgorithmKind, VfcPolicy
from corpus.models import DEFAULT_STRIP_BYTES, ListOrderPolicy, SequenceDistribution
from listcore.models import CostModel


class GeneratorRequest(Schema):
    distribution: SequenceDistribution = SequenceDistribution.UNIFORM
    alphabet_size: int = Field(8, ge=1, le=256)
    length: int = Field(1000, ge=0, le=1_000_000)
    parameter: float | None = None


class InlineTextRequest(Schema):
    name: str
    content: str


class ComparisonRequestBody(Schema):
    demo: bool = False
    generator: GeneratorRequest | None = None
    texts: List[InlineTextRequest] = []
    algorithms: List[AlgorithmKind] = [AlgorithmKind.FC, AlgorithmKind.VFC]
    cost_model: CostModel = CostModel.FULL
    vfc_policy: VfcPolicy = VfcPolicy.LITERAL
    list_order: ListOrderPolicy = ListOrderPolicy.FIRST_OCCURRENCE
    limit: int | None = Field(None, ge=1)
    strip_bytes: List[int] = sorted(DEFAULT_STRIP_BYTES)
    seed: int = 0

    @field_validator("algorithms")
    @classmethod
    def at_least_one_algorithm(cls, algorithms: List[AlgorithmKind]):
        if not algorithms:
            raise ValueError("select at least one algorithm")
        return list(dict.fromkeys(algorithms))

    @field_validator("strip_bytes")
    @classmethod
    def byte_values(cls, strip_bytes: List[int]):
        if any(not 0 <= value <= 0xFF for value in strip_bytes):
            raise ValueError("strip bytes must be in 0..255")
        return sorted(set(strip_bytes))

    @model_validator(mode="after")
    def single_input_source(self):
        sources = [bool(self.demo), self.generator is not None, bool(self.texts)]
        if sum(sources) != 1:
            raise ValueError("give exactly one input source (demo, generator, texts)")
        return self


class RunConfig(ComparisonRequestBody):
    paths: List[str] = []
    csv_path: str | None = None
    wide_csv_path: str | None = None
    chart_path: str | None = None
    trace: bool = False
    jobs: int = Field(1, ge=1)

    @model_validator(mode="after")
    def single_input_source(self):
        sources = [
            bool(self.paths),
            bool(self.demo),
            self.generator is not None,
            bool(self.texts),
        ]
        if sum(sources) != 1:
            raise ValueError(
                "give exactly one input source (paths, demo, generator, texts)"
            )
        return self
