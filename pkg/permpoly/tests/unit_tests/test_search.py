import json

import numpy as np
import pytest

from permpoly.config import SearchConfig
from permpoly.engine.perm_check import is_permutation
from permpoly.families.known_examples import EXAMPLES, ExampleId
from permpoly.families.trace_family import gamma_condition_set
from permpoly.fields.galois_field import field_new
from permpoly.generators.report_generator import ReportGenerator
from permpoly.maps.trace_map import TraceMap
from permpoly.strategy.cosets import canonical_k, coset_leaders
from permpoly.strategy.family_tags import LINEAR_TAG, THEOREM_TAG, family_tag
from permpoly.strategy.trace_search import (
    SearchRecord,
    TraceSearch,
    brute_force_trace_pps,
    header_line,
    load_records,
    prefilter_gammas,
    reverify_records,
    run_trace_unit,
    search_fields,
    search_trace_pps,
)


@pytest.mark.parametrize(
    "k, q, n, expected",
    [(33, 9, 2, (33, [33, 57])), (1, 3, 3, (1, [1, 3, 9])), (10, 7, 2, (10, [10, 22])), (57, 9, 2, (33, [33, 57]))],
)
def test_canonical_k(k, q, n, expected):
    assert canonical_k(k, q, n) == expected


@pytest.mark.parametrize("q, n", [(3, 2), (3, 3), (4, 2), (7, 2)])
def test_canonical_k_is_idempotent(q, n):
    for k in range(1, q ** n - 1):
        leader, members = canonical_k(k, q, n)
        assert canonical_k(leader, q, n)[0] == leader
        assert k in members


@pytest.mark.parametrize("k", [0, 80])
def test_canonical_k_range(k):
    with pytest.raises(ValueError):
        canonical_k(k, 9, 2)


def test_coset_leaders():
    assert coset_leaders(3, 2) == [1, 2, 4, 5]


def test_search_fields():
    assert search_fields(81) == [
        (2, 1, 2),
        (2, 1, 3),
        (2, 1, 4),
        (2, 1, 5),
        (2, 1, 6),
        (2, 2, 2),
        (2, 2, 3),
        (2, 3, 2),
        (3, 1, 2),
        (3, 1, 3),
        (3, 1, 4),
        (3, 2, 2),
        (5, 1, 2),
        (7, 1, 2),
    ]


def test_family_tags():
    ctx81 = field_new(3, 4)
    for gamma in gamma_condition_set(2):
        assert family_tag(ctx81, 2, 2, 33, gamma) == THEOREM_TAG
    example = EXAMPLES[ExampleId.EX_5_1]
    assert family_tag(example.field, 1, 2, 10, example.gamma_set()[0]) == "example-5.1"
    example = EXAMPLES[ExampleId.EX_5_4]
    assert family_tag(example.field, 2, 3, 19, example.gamma_set()[0]) == "example-5.4"
    assert family_tag(field_new(3, 2), 1, 2, 1, 1) == LINEAR_TAG


def test_prefilter_keeps_permutations(f81):
    gammas = np.arange(1, f81.order, dtype=np.int64)
    survivors = set(prefilter_gammas(f81, 2, 33, gammas, 16).tolist())
    assert set(gamma_condition_set(2)) <= survivors
    exact = prefilter_gammas(f81, 2, 33, gammas, f81.order).tolist()
    values = f81.all_indices()
    for gamma in range(1, f81.order):
        injective = np.unique(TraceMap(f81, 2, 33, gamma).evaluate_many(values)).size == f81.order
        assert injective == (gamma in exact)


@pytest.mark.parametrize("unit", [(2, 1, 4, 3), (2, 2, 2, 3), (2, 1, 6, 5), (3, 1, 3, 2), (5, 1, 2, 2), (3, 2, 2, 33)])
def test_unit_matches_per_gamma_check(unit):
    p, j, n, k = unit
    ctx = field_new(p, j * n)
    expected = [gamma for gamma in range(1, ctx.order) if is_permutation(TraceMap(ctx, j, k, gamma), ctx).is_pp]
    for options in ({"early_abort": True, "prefilter": 8}, {"early_abort": False, "prefilter": 0}):
        assert [record.gamma for record in run_trace_unit(unit, options)] == expected


def test_records_stream_in_unit_order():
    cfg = SearchConfig(max_order=27, jobs=2, fields=[(2, 1, 3), (3, 1, 2), (3, 1, 3)])
    batches = []
    records = search_trace_pps(cfg, sink=batches.append)
    assert len(batches) == len(TraceSearch(cfg).work_units())
    assert [record for batch in batches for record in batch] == records


def test_search_rediscovers_q9_family():
    records = search_trace_pps(SearchConfig(max_order=81, jobs=1, fields=[(3, 2, 2)]))
    found = {record.gamma for record in records if record.k == 33}
    assert set(gamma_condition_set(2)) <= found
    assert [record.sort_key for record in records] == sorted(record.sort_key for record in records)
    assert all(record.k == min(record.k_coset) for record in records)


@pytest.mark.parametrize(
    "example_id, triple, tag",
    [(ExampleId.EX_5_3, (3, 3, 2), THEOREM_TAG), (ExampleId.EX_5_4, (3, 2, 3), "example-5.4")],
)
def test_search_rediscovers_q729_examples(example_id, triple, tag):
    example = EXAMPLES[example_id]
    records = search_trace_pps(SearchConfig(max_order=729, jobs=1, fields=[triple]))
    found = {(record.k, record.gamma): record for record in records}
    for k in example.ks:
        leader, _ = canonical_k(k, example.q, example.n)
        for gamma in example.gamma_set():
            assert (leader, gamma) in found
            assert found[(leader, gamma)].family_tag == tag


def test_optimized_search_matches_brute_force():
    optimized = search_trace_pps(SearchConfig(max_order=49, jobs=1, fields=[(7, 1, 2)]))
    brute = brute_force_trace_pps(7, 1, 2)
    assert {(r.k, r.gamma) for r in optimized} == {(canonical_k(r.k, 7, 2)[0], r.gamma) for r in brute}
    example = EXAMPLES[ExampleId.EX_5_1]
    assert {(10, gamma) for gamma in example.gamma_set()} <= {(r.k, r.gamma) for r in optimized}


def test_no_early_abort_gives_same_records():
    cfg = SearchConfig(max_order=25, jobs=1, fields=[(5, 1, 2)])
    assert search_trace_pps(cfg) == search_trace_pps(cfg.merged({"early_abort": False}))


def test_search_is_independent_of_worker_count():
    cfg = SearchConfig(max_order=27, jobs=1, fields=[(3, 1, 2), (3, 1, 3), (5, 1, 2)])
    serial = [record.to_dict() for record in search_trace_pps(cfg)]
    parallel = [record.to_dict() for record in search_trace_pps(cfg.merged({"jobs": 2}))]
    assert serial == parallel


def test_records_round_trip_and_reverify(tmp_path):
    cfg = SearchConfig(max_order=25, jobs=1, fields=[(5, 1, 2)], out=tmp_path / "records.jsonl")
    records = search_trace_pps(cfg)
    assert records
    ReportGenerator(out=cfg.out).write_jsonl((r.to_dict() for r in records), header=header_line(cfg))
    first = json.loads(cfg.out.read_text().splitlines()[0])
    assert "gamma = 0" in first["header"]["gamma"]
    assert load_records(cfg.out) == records
    results = reverify_records(cfg.out)
    assert len(results) == len(records)
    assert all(report.is_pp for _, report in results)


def test_record_stream_flushes_each_batch(tmp_path):
    cfg = SearchConfig(max_order=25, jobs=1, fields=[(5, 1, 2)])
    generator = ReportGenerator(out=tmp_path / "records.jsonl", csv_path=tmp_path / "records.csv")
    lines_on_disk = []
    with generator.record_stream(header=header_line(cfg)) as sink:

        def checking_sink(batch):
            sink(batch)
            lines_on_disk.append(len(generator.out.read_text().splitlines()))

        records = search_trace_pps(cfg, sink=checking_sink)
    assert lines_on_disk == sorted(lines_on_disk)
    assert lines_on_disk[-1] == len(records) + 1
    assert load_records(generator.out) == records
    assert len(generator.csv_path.read_text().splitlines()) == len(records) + 1


def test_record_schema():
    record = SearchRecord(3, 2, 2, (2, 2, 0, 0, 1), 33, (33, 57), 5, True, THEOREM_TAG)
    assert record.to_dict() == {
        "field": {"p": 3, "j": 2, "n": 2, "modulus": [2, 2, 0, 0, 1]},
        "k": 33,
        "k_coset": [33, 57],
        "gamma": 5,
        "is_pp": True,
        "family_tag": THEOREM_TAG,
    }
    assert SearchRecord.from_dict(record.to_dict()) == record


def test_config_from_yaml(test_data):
    cfg = SearchConfig.from_yaml(test_data / "search_config.yaml")
    assert cfg.max_order == 81
    assert cfg.fields == [(3, 2, 2)]
    assert cfg.prefilter == 64
    assert cfg.allows(3, 2, 2) and not cfg.allows(3, 1, 4)
    merged = cfg.merged({"max_order": 49, "jobs": None})
    assert merged.max_order == 49 and merged.jobs == 1


def test_config_rejects_unknown_keys(tmp_path):
    path = tmp_path / "bad.yaml"
    path.write_text("max_order: 81\nthreads: 4\n")
    with pytest.raises(ValueError):
        SearchConfig.from_yaml(path)


def test_config_jobs_from_environment(monkeypatch):
    monkeypatch.setenv("PERMPOLY_JOBS", "3")
    assert SearchConfig().jobs == 3
