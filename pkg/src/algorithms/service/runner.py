import logging
from typing import Callable, Dict, Tuple

from algorithms.models import AlgorithmKind, RunReport, VfcPolicy, VfcRunState
from algorithms.service.baseline import move_to_front_service, transpose_service
from algorithms.service.frequency_count import frequency_count_service
from algorithms.service.vfc import vfc_service
from listcore.exceptions import SymbolNotInListException
from listcore.models import CostModel, ListState, RequestSequence, StepRecord, Symbol


logger = logging.getLogger(__name__)

StepEngine = Callable[[ListState, Symbol, CostModel], Tuple[ListState, int]]


class RunService:
    SINGLE_STEP_ENGINES: Dict[AlgorithmKind, StepEngine] = {
        AlgorithmKind.MTF: move_to_front_service.step,
        AlgorithmKind.TRANS: transpose_service.step,
        AlgorithmKind.FC: frequency_count_service.step,
    }

    @staticmethod
    def check_alphabet(state: ListState, sequence: RequestSequence) -> None:
        missing = set(sequence.symbols).difference(state.order)
        if not missing:
            return
        index, symbol = next(
            (index, symbol)
            for index, symbol in enumerate(sequence.symbols)
            if symbol in missing
        )
        raise SymbolNotInListException(
            f"request #{index + 1} ({symbol!r}) is not in the list"
        )

    def run_algorithm(
        self,
        kind: AlgorithmKind,
        list_state: ListState,
        sequence: RequestSequence,
        model: CostModel = CostModel.FULL,
        policy: VfcPolicy = VfcPolicy.LITERAL,
        keep_trace: bool = True,
        snapshots: bool = False,
    ) -> RunReport:
        self.check_alphabet(list_state, sequence)
        state: ListState = list_state.copy()
        report = RunReport(
            kind=kind,
            cost_model=model,
            vfc_policy=policy if kind is AlgorithmKind.VFC else None,
            n=len(sequence),
        )

        def record(request: Symbol, position: int, cost: int, consumed: int) -> None:
            report.total_cost += cost
            report.steps += 1
            logger.debug(
                "%s request=%r position=%d cost=%d consumed=%d",
                kind.value,
                request,
                position,
                cost,
                consumed,
            )
            if keep_trace:
                report.trace.append(
                    StepRecord(
                        request=request,
                        position_before=position,
                        cost_charged=cost,
                        requests_consumed=consumed,
                        list_after=state.snapshot() if snapshots else None,
                        freq_after=state.freq_snapshot() if snapshots else None,
                    )
                )

        if kind is AlgorithmKind.VFC:
            run = VfcRunState.start(state)
            while run.cursor < len(sequence):
                request: Symbol = sequence[run.cursor]
                position: int = state.position_of(request)
                run, cost, consumed = vfc_service.step(run, sequence, model, policy)
                record(request, position, cost, consumed)
        else:
            engine: StepEngine = self.SINGLE_STEP_ENGINES[kind]
            for request in sequence:
                position = state.position_of(request)
                state, cost = engine(state, request, model)
                record(request, position, cost, 1)

        report.final_order = state.snapshot()
        report.final_freq = dict(state.freq)
        logger.debug(
            "%s on %s: n=%d m=%d total=%d steps=%d",
            kind.value,
            sequence.source_name or "<sequence>",
            report.n,
            len(state),
            report.total_cost,
            report.steps,
        )
        return report


run_service = RunService()
