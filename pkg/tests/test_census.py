import json

import pytest

from rdisconnect import census as cm
from rdisconnect.census import (
    FAIL,
    PASS,
    SKIPPED,
    eg_formulas,
    run_census,
    table_to_json,
    tables_to_csv,
    verify_relations,
)
from rdisconnect.errors import KOutOfRange, OrderTooLarge
from rdisconnect.graph import complete_graph
from rdisconnect.rainbow import rd_exact


@pytest.fixture(scope="module")
def tables():
    return {n: run_census(n, workers=1) for n in (2, 3, 4, 5, 6)}


def test_formulas_examples():
    f = eg_formulas(5, 2)
    assert (f.g, f.f, f.t, f.s) == (5, 5, 5, 6)
    assert eg_formulas(6, 3).s == 10
    for n in range(2, 10):
        f = eg_formulas(n, 1)
        assert f.g == f.t == n - 1


def test_formulas_out_of_range():
    with pytest.raises(KOutOfRange):
        eg_formulas(5, 5)
    with pytest.raises(KOutOfRange):
        eg_formulas(5, 0)


def test_census_order_cap():
    with pytest.raises(OrderTooLarge):
        run_census(8)


def test_census_totals(tables):
    assert [len(tables[n].records) for n in (4, 5, 6)] == [6, 21, 112]


def test_census_n4_t(tables):
    assert [tables[4].row(k).t_observed for k in (1, 2, 3)] == [3, 4, 5]


def test_census_n5_s2(tables):
    assert tables[5].row(2).s_observed == 6


def test_census_n6_s5_is_k6(tables):
    row = tables[6].row(5)
    assert row.s_observed == 15
    assert tables[6].witness(row.s_witness) == complete_graph(6)


def test_census_all_rows_pass(tables):
    for t in tables.values():
        assert t.ok, [r for r in t.rows if r.status != PASS]


def test_witnesses_revalidate(tables):
    for t in tables.values():
        for r in t.rows:
            assert rd_exact(t.witness(r.t_witness)).rd >= r.k
            assert rd_exact(t.witness(r.s_witness)).rd <= r.k


def test_relations_n5(tables):
    checks = {(c.kind, c.k): c for c in verify_relations(tables[5])}
    g2 = checks[("g", 2)]
    assert (g2.formula, g2.derived, g2.status) == (5, 5, PASS)
    assert checks[("g", 4)].status == SKIPPED
    assert checks[("f", 1)].status == SKIPPED


def test_relations_direct_values_agree(tables):
    for t in tables.values():
        for c in verify_relations(t):
            assert c.status in (PASS, SKIPPED)
            if c.status == PASS:
                assert c.direct == c.derived == c.formula


def test_finite_budget_never_fails_spuriously():
    t = run_census(6, workers=1, edge_budget=0)
    statuses = {r.status for r in t.rows}
    assert FAIL not in statuses
    assert any(not r.exact for r in t.records)


def test_parallel_matches_serial(tables):
    assert run_census(6, workers=2) == tables[6]


def test_cache_roundtrip(tmp_path, tables, monkeypatch):
    first = run_census(5, workers=1, cache_dir=tmp_path)
    assert first == tables[5]
    files = list(tmp_path.iterdir())
    assert len(files) == 1 and f"v{cm.SOLVER_VERSION}" in files[0].name

    def boom(*a, **k):
        raise AssertionError("cache not used")

    monkeypatch.setattr(cm, "_compute_records", boom)
    assert run_census(5, cache_dir=tmp_path) == first


def test_csv_layout(tables):
    text = tables_to_csv([tables[4]])
    lines = text.splitlines()
    assert lines[0] == "n,k,t_formula,t_observed,s_formula,s_observed,g,f,status"
    assert lines[3] == "4,3,5,5,6,6,5,5,PASS"


def test_json_embeds_witness_graphs(tables):
    obj = json.loads(json.dumps(table_to_json(tables[5])))
    assert obj["graphs"] == 21
    row = obj["rows"][1]
    assert row["s_witness"]["n"] == 5 and len(row["s_witness"]["edges"]) == 6
    assert {r["status"] for r in obj["relations"]} <= {PASS, SKIPPED}
