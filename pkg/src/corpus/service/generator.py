import logging
import math
from typing import List

import numpy as np

from corpus.exceptions import EmptyAlphabetException, InvalidDistributionException
from corpus.models import GeneratorSpec, SequenceDistribution
from listcore.models import RequestSequence


logger = logging.getLogger(__name__)


class SequenceGeneratorService:
    @staticmethod
    def _zipf_probabilities(size: int, exponent: float) -> np.ndarray:
        weights = np.arange(1, size + 1, dtype=float) ** -exponent
        return weights / weights.sum()

    @staticmethod
    def _run_length_indices(
        rng: np.random.Generator, size: int, length: int, mean_run: float
    ) -> List[int]:
        indices: List[int] = []
        while len(indices) < length:
            # a run never outgrows the requests still missing
            run = min(int(rng.geometric(1.0 / mean_run)), length - len(indices))
            indices.extend([int(rng.integers(size))] * run)
        return indices[:length]

    def generate(self, spec: GeneratorSpec) -> RequestSequence:
        if not spec.alphabet:
            raise EmptyAlphabetException
        if spec.length < 0:
            raise InvalidDistributionException(f"length {spec.length} < 0")

        rng = np.random.default_rng(spec.seed)
        size = len(spec.alphabet)

        if spec.distribution is SequenceDistribution.UNIFORM:
            indices = rng.integers(0, size, size=spec.length).tolist()
        elif spec.distribution is SequenceDistribution.ZIPF:
            exponent = 1.0 if spec.parameter is None else spec.parameter
            if not math.isfinite(exponent) or exponent < 0:
                raise InvalidDistributionException(f"zipf exponent {exponent}")
            probabilities = self._zipf_probabilities(size, exponent)
            indices = rng.choice(size, size=spec.length, p=probabilities).tolist()
        else:
            mean_run = 4.0 if spec.parameter is None else spec.parameter
            if not math.isfinite(mean_run) or mean_run < 1:
                raise InvalidDistributionException(f"mean run length {mean_run}")
            indices = self._run_length_indices(rng, size, spec.length, mean_run)

        logger.debug("generated %s", spec.source_name)
        return RequestSequence.of(
            (spec.alphabet[index] for index in indices), source_name=spec.source_name
        )


sequence_generator_service = SequenceGeneratorService()
