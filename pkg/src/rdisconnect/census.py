"""Erdős–Gallai-type thresholds for rd: closed formulas and their exhaustive
verification over all connected graphs of small order.

For order ``n`` and level ``k``:

* ``t(n, k)``: fewest edges of a connected graph with ``rd >= k``;
* ``s(n, k)``: most edges of a connected graph with ``rd <= k``;
* ``g(n, k) = t(n, k+1) - 1``: every graph with at most ``g`` edges has ``rd <= k``;
* ``f(n, k) = s(n, k-1) + 1``: every graph with at least ``f`` edges has ``rd >= k``.
"""

from __future__ import annotations

import csv
import io
import json
import logging
import os
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Any

from .errors import KOutOfRange, OrderTooLarge
from .graph import Graph, canonical_code, enumerate_connected, graph_from_code
from .io import graph_to_json
from .rainbow import rd_exact

log = logging.getLogger(__name__)

MAX_CENSUS_ORDER = 7
SOLVER_VERSION = "1"

PASS = "PASS"
FAIL = "FAIL"
UNDETERMINED = "UNDETERMINED"
SKIPPED = "SKIPPED-BOUNDARY"


@dataclass(frozen=True)
class EGFormulas:
    g: int
    f: int
    t: int
    s: int


def eg_formulas(n: int, k: int) -> EGFormulas:
    if not 1 <= k <= n - 1:
        raise KOutOfRange(f"k must lie in 1..{n - 1}, got {k}")
    return EGFormulas(
        g=n + k - 2,
        f=k * (n - 1) // 2 + 1,
        t=n + k - 2,
        s=(k + 1) * (n - 1) // 2,
    )


@dataclass(frozen=True)
class GraphRecord:
    """rd of one census graph, as an interval when the search was skipped."""

    code: str
    m: int
    lo: int
    hi: int
    method: str | None

    @property
    def exact(self) -> bool:
        return self.lo == self.hi


@dataclass(frozen=True)
class CensusRow:
    k: int
    t_formula: int
    t_observed: int | None
    t_witness: str | None
    t_status: str
    s_formula: int
    s_observed: int | None
    s_witness: str | None
    s_status: str
    g: int
    f: int

    @property
    def status(self) -> str:
        statuses = {self.t_status, self.s_status}
        if FAIL in statuses:
            return FAIL
        if UNDETERMINED in statuses:
            return UNDETERMINED
        return PASS


@dataclass(frozen=True)
class CensusTable:
    n: int
    records: tuple[GraphRecord, ...]
    rows: tuple[CensusRow, ...]

    def row(self, k: int) -> CensusRow:
        return self.rows[k - 1]

    @property
    def ok(self) -> bool:
        return all(r.status == PASS for r in self.rows)

    def witness(self, code: str) -> Graph:
        return graph_from_code(self.n, code)


def _record(args: tuple[int, str, int | None]) -> GraphRecord:
    n, code, budget = args
    g = graph_from_code(n, code)
    report = rd_exact(g, edge_budget=g.m if budget is None else budget)
    return GraphRecord(code, g.m, report.lower, report.upper, report.method)


def _compute_records(n: int, graphs: list[Graph], budget: int | None, workers: int | None) -> list[GraphRecord]:
    jobs = [(n, canonical_code(g), budget) for g in graphs]
    if workers is None:
        workers = os.cpu_count() or 1
    if workers <= 1 or len(jobs) < 100:
        return [_record(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        # map preserves input order, so the merge is deterministic
        return list(pool.map(_record, jobs, chunksize=16))


def _cache_path(cache_dir: Path, n: int, budget: int | None) -> Path:
    tag = "all" if budget is None else str(budget)
    return cache_dir / f"census-n{n}-v{SOLVER_VERSION}-b{tag}.json"


def _observe(n: int, records: tuple[GraphRecord, ...]) -> tuple[CensusRow, ...]:
    rows = []
    for k in range(1, n):
        form = eg_formulas(n, k)

        sure = [r for r in records if r.lo >= k]
        t_best = min(sure, key=lambda r: (r.m, r.code), default=None)
        t_obs = t_best.m if t_best else None
        # an unresolved graph with fewer edges could still attain rd >= k
        t_open = any(r.lo < k <= r.hi and (t_obs is None or r.m < t_obs) for r in records)
        if t_open:
            t_status = UNDETERMINED
        else:
            t_status = PASS if t_obs == form.t else FAIL

        below = [r for r in records if r.hi <= k]
        s_best = max(below, key=lambda r: (r.m, r.code), default=None)
        s_obs = s_best.m if s_best else None
        s_open = any(r.lo <= k < r.hi and (s_obs is None or r.m > s_obs) for r in records)
        if s_open:
            s_status = UNDETERMINED
        else:
            s_status = PASS if s_obs == form.s else FAIL

        rows.append(CensusRow(
            k=k,
            t_formula=form.t, t_observed=t_obs, t_witness=t_best.code if t_best else None, t_status=t_status,
            s_formula=form.s, s_observed=s_obs, s_witness=s_best.code if s_best else None, s_status=s_status,
            g=form.g, f=form.f,
        ))
    return tuple(rows)


def run_census(
    n: int,
    workers: int | None = None,
    edge_budget: int | None = None,
    cache_dir: str | Path | None = None,
) -> CensusTable:
    """Compute rd for every connected graph of order ``n`` and tabulate t and s.

    ``edge_budget=None`` lets the exact search run on every graph; a finite
    budget leaves some rd values as intervals and the affected rows
    UNDETERMINED.  Results are cached under ``cache_dir`` when given.
    """
    if n > MAX_CENSUS_ORDER:
        raise OrderTooLarge(f"census is capped at order {MAX_CENSUS_ORDER}, got {n}")
    if n < 1:
        raise KOutOfRange(f"order must be positive, got {n}")
    if n == MAX_CENSUS_ORDER:
        warnings.warn(f"census at order {n} covers 853 graphs and may take a while", stacklevel=2)

    path = None
    if cache_dir is not None:
        path = _cache_path(Path(cache_dir), n, edge_budget)
        if path.exists():
            log.info("loading census for n=%d from %s", n, path)
            data = json.loads(path.read_text())
            records = tuple(GraphRecord(**r) for r in data["records"])
            return CensusTable(n, records, _observe(n, records))

    graphs = [g for g in enumerate_connected(n) if g.n >= 2]
    records = tuple(_compute_records(n, graphs, edge_budget, workers))
    if path is not None:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps({"n": n, "solver": SOLVER_VERSION, "records": [asdict(r) for r in records]}))
    return CensusTable(n, records, _observe(n, records))


@dataclass(frozen=True)
class RelationCheck:
    kind: str  # "g" or "f"
    k: int
    formula: int
    derived: int | None  # through t(n, k+1) - 1 or s(n, k-1) + 1
    direct: int | None  # straight from the definition, over the census size range
    status: str


def _direct_g(table: CensusTable, k: int) -> int:
    above = [r.m for r in table.records if r.lo > k]
    return min(above) - 1 if above else max(r.m for r in table.records)


def _direct_f(table: CensusTable, k: int) -> int:
    below = [r.m for r in table.records if r.hi < k]
    return max(below) + 1 if below else min(r.m for r in table.records)


def verify_relations(table: CensusTable) -> list[RelationCheck]:
    """Check ``g = t(n,k+1) - 1`` and ``f = s(n,k-1) + 1`` against the formulas.

    ``g(n, n-1)`` would need ``t(n, n)`` and ``f(n, 1)`` would need
    ``s(n, 0)``; both are vacuous, so those entries are SKIPPED-BOUNDARY
    and only report the census-range value.
    """
    n = table.n
    out = []
    for k in range(1, n):
        form = eg_formulas(n, k)
        direct = _direct_g(table, k) if table.records else None
        if k + 1 > n - 1:
            out.append(RelationCheck("g", k, form.g, None, direct, SKIPPED))
        else:
            row = table.row(k + 1)
            derived = None if row.t_observed is None else row.t_observed - 1
            status = UNDETERMINED if row.t_status == UNDETERMINED else (PASS if derived == form.g else FAIL)
            out.append(RelationCheck("g", k, form.g, derived, direct, status))
    for k in range(1, n):
        form = eg_formulas(n, k)
        direct = _direct_f(table, k) if table.records else None
        if k - 1 < 1:
            out.append(RelationCheck("f", k, form.f, None, direct, SKIPPED))
        else:
            row = table.row(k - 1)
            derived = None if row.s_observed is None else row.s_observed + 1
            status = UNDETERMINED if row.s_status == UNDETERMINED else (PASS if derived == form.f else FAIL)
            out.append(RelationCheck("f", k, form.f, derived, direct, status))
    return out


CSV_FIELDS = ("n", "k", "t_formula", "t_observed", "s_formula", "s_observed", "g", "f", "status")


def tables_to_csv(tables: list[CensusTable]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_FIELDS)
    for table in tables:
        for r in table.rows:
            writer.writerow([table.n, r.k, r.t_formula, r.t_observed, r.s_formula, r.s_observed, r.g, r.f, r.status])
    return buf.getvalue()


def table_to_json(table: CensusTable) -> dict[str, Any]:
    def witness(code: str | None) -> dict | None:
        return None if code is None else graph_to_json(table.witness(code))

    rows = []
    for r in table.rows:
        rows.append({
            "k": r.k,
            "t_formula": r.t_formula, "t_observed": r.t_observed, "t_status": r.t_status,
            "t_witness": witness(r.t_witness),
            "s_formula": r.s_formula, "s_observed": r.s_observed, "s_status": r.s_status,
            "s_witness": witness(r.s_witness),
            "g": r.g, "f": r.f, "status": r.status,
        })
    relations = [asdict(c) for c in verify_relations(table)]
    return {"n": table.n, "graphs": len(table.records), "rows": rows, "relations": relations}
