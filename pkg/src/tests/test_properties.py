from collections import Counter

from hypothesis import given, settings, strategies as st

from algorithms.models import AlgorithmKind, VfcPolicy
from algorithms.service.runner import run_service
from listcore.models import CostModel, ListState, RequestSequence
from oracle.models import SmallInstance
from oracle.service.reference import reference_service


@st.composite
def workloads(draw, max_list_size=8, max_length=40):
    m = draw(st.integers(min_value=1, max_value=max_list_size))
    order = draw(st.permutations(list(range(1, m + 1))))
    requests = draw(
        st.lists(st.integers(min_value=1, max_value=m), max_size=max_length)
    )
    return ListState.from_symbols(order), RequestSequence.of(requests)


Policies = st.sampled_from(list(VfcPolicy))
Kinds = st.sampled_from(list(AlgorithmKind))


def run(kind, workload, model=CostModel.FULL, policy=VfcPolicy.LITERAL):
    list_state, sequence = workload
    return run_service.run_algorithm(
        kind, list_state, sequence, model=model, policy=policy, snapshots=True
    )


@given(workloads())
def test_fc_counters_stay_sorted(workload):
    report = run(AlgorithmKind.FC, workload)
    for record in report.trace:
        counts = record.freq_after
        assert all(a >= b for a, b in zip(counts, counts[1:]))


@given(workloads(), Policies)
def test_vfc_counters_stay_sorted(workload, policy):
    report = run(AlgorithmKind.VFC, workload, policy=policy)
    for record in report.trace:
        counts = record.freq_after
        assert all(a >= b for a, b in zip(counts, counts[1:]))


@given(workloads())
def test_fc_counters_count_requests(workload):
    report = run(AlgorithmKind.FC, workload)
    counts = Counter(workload[1].symbols)
    assert all(report.final_freq[s] == counts[s] for s in workload[0].order)


@given(workloads(), Policies)
def test_vfc_consumes_every_request_once(workload, policy):
    _, sequence = workload
    report = run(AlgorithmKind.VFC, workload, policy=policy)

    assert report.requests_consumed == len(sequence)
    assert sum(report.final_freq.values()) == len(sequence)
    assert report.steps <= len(sequence)


@given(workloads(), Kinds, Policies)
def test_final_order_is_a_permutation(workload, kind, policy):
    list_state, _ = workload
    report = run(kind, workload, policy=policy)
    assert sorted(report.final_order) == sorted(list_state.order)


@given(workloads(), Kinds, Policies)
def test_input_list_is_untouched(workload, kind, policy):
    list_state, _ = workload
    before = (list_state.snapshot(), list_state.freq_snapshot())
    run(kind, workload, policy=policy)
    assert (list_state.snapshot(), list_state.freq_snapshot()) == before


@given(workloads(), Kinds, Policies)
def test_full_cost_exceeds_partial_cost_by_one_per_step(workload, kind, policy):
    full = run(kind, workload, CostModel.FULL, policy)
    partial = run(kind, workload, CostModel.PARTIAL, policy)

    assert full.steps == partial.steps
    assert full.total_cost - partial.total_cost == full.steps
    assert full.total_cost >= len(workload[1])


@settings(deadline=None, max_examples=60)
@given(workloads(max_list_size=4, max_length=8))
def test_mtf_is_two_competitive_against_free_exchange_optimum(workload):
    list_state, sequence = workload
    opt = reference_service.opt_free_exchange_cost(
        SmallInstance(list_state=list_state, sequence=sequence)
    )
    assert run(AlgorithmKind.MTF, workload).total_cost <= 2 * opt


@given(workloads())
def test_strict_vfc_counters_count_requests(workload):
    report = run(AlgorithmKind.VFC, workload, policy=VfcPolicy.STRICT_HOMOGENEOUS)
    counts = Counter(workload[1].symbols)
    assert all(report.final_freq[s] == counts[s] for s in workload[0].order)
