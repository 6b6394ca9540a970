import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from algorithms.models import AlgorithmKind, VfcPolicy
from algorithms.service.runner import run_service
from bench.exceptions import CostLowerBoundViolationException
from bench.request import ComparisonRequestBody, RunConfig
from bench.response import ComparisonRow
from corpus.models import CorpusText, GeneratorSpec
from corpus.service.generator import sequence_generator_service
from corpus.service.preprocess import corpus_service
from listcore.models import CostModel, ListState, RequestSequence, StepRecord


logger = logging.getLogger(__name__)

DEMO_LIST: Tuple[int, ...] = (1, 2, 3)
DEMO_SEQUENCE: Tuple[int, ...] = (1, 2, 2, 3, 3, 3)


@dataclass(frozen=True)
class Workload:
    name: str
    list_state: ListState
    sequence: RequestSequence


@dataclass
class ComparisonResult:
    row: ComparisonRow
    traces: Dict[str, List[StepRecord]] = field(default_factory=dict)


def evaluate_workload(
    workload: Workload,
    algorithms: List[AlgorithmKind],
    model: CostModel,
    policy: VfcPolicy,
    trace: bool,
) -> ComparisonResult:
    costs: Dict[str, int] = {}
    traces: Dict[str, List[StepRecord]] = {}
    n = len(workload.sequence)
    for kind in algorithms:
        report = run_service.run_algorithm(
            kind,
            workload.list_state,
            workload.sequence,
            model=model,
            policy=policy,
            keep_trace=trace,
            snapshots=trace,
        )
        if model is CostModel.FULL and report.total_cost < n:
            raise CostLowerBoundViolationException(
                f"{kind.value} on {workload.name}: total {report.total_cost} < n={n}"
            )
        costs[kind.value] = report.total_cost
        if trace:
            traces[kind.value] = report.trace

    return ComparisonResult(
        row=ComparisonRow(
            file=workload.name,
            n=n,
            list_size=len(workload.list_state),
            cost_model=model,
            costs=costs,
        ),
        traces=traces,
    )


class ComparisonService:
    @staticmethod
    def build_workloads(config: ComparisonRequestBody) -> List[Workload]:
        if config.demo:
            sequence = RequestSequence.of(DEMO_SEQUENCE, source_name="demo")
            return [
                Workload(
                    name="demo",
                    list_state=ListState.from_symbols(DEMO_LIST),
                    sequence=sequence.truncated(config.limit),
                )
            ]

        if config.generator is not None:
            alphabet = tuple(range(1, config.generator.alphabet_size + 1))
            sequence = sequence_generator_service.generate(
                GeneratorSpec(
                    alphabet=alphabet,
                    length=config.generator.length,
                    distribution=config.generator.distribution,
                    parameter=config.generator.parameter,
                    seed=config.seed,
                )
            )
            return [
                Workload(
                    name=sequence.source_name,
                    list_state=ListState.from_symbols(alphabet),
                    sequence=sequence.truncated(config.limit),
                )
            ]

        if isinstance(config, RunConfig) and config.paths:
            texts = [CorpusText.from_path(path) for path in config.paths]
        else:
            texts = [
                CorpusText(data=text.content.encode("utf-8"), source_name=text.name)
                for text in config.texts
            ]

        workloads: List[Workload] = []
        for text in texts:
            sequence = corpus_service.preprocess(text, strip_bytes=config.strip_bytes)
            # the list holds every distinct character of the file, even under --limit
            list_state = corpus_service.derive_list(sequence, config.list_order)
            workloads.append(
                Workload(
                    name=text.source_name,
                    list_state=list_state,
                    sequence=sequence.truncated(config.limit),
                )
            )
        return workloads

    def compare(
        self, config: ComparisonRequestBody, jobs: int = 1, trace: bool = False
    ) -> List[ComparisonResult]:
        workloads = self.build_workloads(config)
        arguments = (config.algorithms, config.cost_model, config.vfc_policy, trace)

        if jobs > 1 and len(workloads) > 1:
            with ProcessPoolExecutor(max_workers=jobs) as executor:
                # map keeps input order
                results = list(
                    executor.map(
                        evaluate_workload,
                        workloads,
                        *([argument] * len(workloads) for argument in arguments),
                    )
                )
        else:
            results = [
                evaluate_workload(workload, *arguments) for workload in workloads
            ]

        for result in results:
            logger.info(
                "%s: n=%d m=%d %s",
                result.row.file,
                result.row.n,
                result.row.list_size,
                " ".join(f"{algo}={cost}" for algo, cost in result.row.costs.items()),
            )
        return results

    def run(self, config: RunConfig) -> List[ComparisonResult]:
        return self.compare(config, jobs=config.jobs, trace=config.trace)


comparison_service = ComparisonService()
