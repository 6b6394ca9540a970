import logging
from collections import Counter
from typing import Dict, Iterable, List

from algorithms.exceptions import InvariantBreachException
from algorithms.models import AlgorithmKind, RunReport, VfcPolicy
from algorithms.service.runner import run_service
from listcore.models import CostModel
from oracle.models import PropertyViolation, SmallInstance, VerificationSummary
from oracle.service.enumeration import enumeration_service
from oracle.service.reference import reference_service


logger = logging.getLogger(__name__)


class VerificationService:
    """Exhaustive cross-check of the engines against the oracle on small instances."""

    @staticmethod
    def _run_all(instance: SmallInstance) -> Dict[str, RunReport]:
        def run(
            kind: AlgorithmKind, policy: VfcPolicy = VfcPolicy.LITERAL
        ) -> RunReport:
            return run_service.run_algorithm(
                kind,
                instance.list_state,
                instance.sequence,
                model=instance.cost_model,
                policy=policy,
                snapshots=True,
            )

        return {
            "mtf": run(AlgorithmKind.MTF),
            "trans": run(AlgorithmKind.TRANS),
            "fc": run(AlgorithmKind.FC),
            "vfc-literal": run(AlgorithmKind.VFC, VfcPolicy.LITERAL),
            "vfc-strict": run(AlgorithmKind.VFC, VfcPolicy.STRICT_HOMOGENEOUS),
        }

    def check_instance(self, instance: SmallInstance) -> List[PropertyViolation]:
        violations: List[PropertyViolation] = []

        def fail(name: str, detail: str) -> None:
            violations.append(
                PropertyViolation(
                    property=name, instance=instance.describe(), detail=detail
                )
            )

        n = len(instance.sequence)
        full = instance.cost_model is CostModel.FULL
        try:
            reports = self._run_all(instance)
        except InvariantBreachException as e:
            fail("invariant-breach", e.detail or e.message)
            return violations
        totals = {name: report.total_cost for name, report in reports.items()}

        naive_fc = reference_service.naive_fc_cost(instance)
        if totals["fc"] != naive_fc:
            fail("fc-oracle-equivalence", f"engine={totals['fc']} oracle={naive_fc}")

        opt = reference_service.opt_free_exchange_cost(instance)
        # literal batches swallow foreign requests; the strict run is a real strategy
        for name in ("mtf", "trans", "fc", "vfc-strict"):
            if opt > totals[name]:
                fail("optimum-dominance", f"opt={opt} > {name}={totals[name]}")

        if full and totals["mtf"] > 2 * opt:
            fail("mtf-2-competitive", f"mtf={totals['mtf']} > 2*opt={2 * opt}")

        if full:
            for name, total in totals.items():
                if total < n:
                    fail("full-cost-lower-bound", f"{name}={total} < n={n}")

        initial = Counter(instance.list_state.order)
        for name in ("fc", "vfc-literal", "vfc-strict"):
            report = reports[name]
            freq_sum = sum(report.final_freq.values())
            if freq_sum != n:
                fail("frequency-sum", f"{name}: sum={freq_sum} n={n}")
            if Counter(report.final_order) != initial:
                fail("permutation", f"{name}: final order {report.final_order}")
            if report.requests_consumed != n:
                fail(
                    "consumption", f"{name}: consumed {report.requests_consumed} of {n}"
                )
            for number, record in enumerate(report.trace, start=1):
                counts = record.freq_after or ()
                if any(a < b for a, b in zip(counts, counts[1:])):
                    fail("sortedness", f"{name}: step {number} counts {counts}")
                    break

        counts = Counter(instance.sequence.symbols)
        fc_freq = reports["fc"].final_freq
        if any(fc_freq[s] != counts[s] for s in instance.list_state.order):
            fail("fc-frequency-counts", f"fc counters {fc_freq}")
        # strict batches only consume repeats of the served request
        strict_freq = reports["vfc-strict"].final_freq
        if any(strict_freq[s] != counts[s] for s in instance.list_state.order):
            fail("vfc-strict-frequency-counts", f"vfc-strict counters {strict_freq}")

        return violations

    def verify(
        self, instances: Iterable[SmallInstance], summary: VerificationSummary
    ) -> VerificationSummary:
        for instance in instances:
            summary.instances_checked += 1
            summary.violations.extend(self.check_instance(instance))
        logger.info(
            "verified %d instances (m=%d, n<=%d, %s): %d violations",
            summary.instances_checked,
            summary.list_size,
            summary.max_sequence_length,
            summary.cost_model.value,
            len(summary.violations),
        )
        return summary

    def verify_instances(
        self, m: int, n_max: int, model: CostModel = CostModel.FULL
    ) -> VerificationSummary:
        instances = enumeration_service.enumerate_instances(m, n_max, model)
        return self.verify(
            instances,
            VerificationSummary(
                cost_model=model, list_size=m, max_sequence_length=n_max
            ),
        )


verification_service = VerificationService()
