"""Render experiment records and cost-model rows as table, CSV or JSON.

CSV and JSON are versioned (``SCHEMA_VERSION``) and stable-ordered: datasets
in the order given, algorithms BF, A1-A4, then model rows M1-M8.  Nothing but
the wall-time columns depends on the machine, so a run without timing is
byte-for-byte reproducible.
"""

from __future__ import annotations

import csv
import io
import json
import statistics
import warnings
from enum import Enum
from typing import Optional, Sequence

from .algorithms import AlgoConfig, Algorithm
from .cost_models import CostInputs, CostMethod, predicted_ops
from .experiment import CostModelRow, ExperimentRecord, RunRecord
from .metrics import Basis, approximation, assumed_accuracy, efficiency

SCHEMA_VERSION = 1

CSV_COLUMNS = (
    "schema_version", "kind", "dataset", "n", "d", "algorithm", "runs", "oracle",
    "value_min", "value_mean", "value_max", "approximation", "accuracy",
    "iterations_min", "iterations_mean", "iterations_max", "distance_evals_mean",
    "ops", "time_ms", "basis", "efficiency", "epsilon",
)


class ReportFormat(str, Enum):
    HUMAN_TABLE = "table"
    CSV = "csv"
    JSON = "json"


_BASIS_ALIASES = {"time": Basis.WALL_TIME, "ops": Basis.OP_COUNT}


def parse_basis(basis) -> Basis:
    if isinstance(basis, Basis):
        return basis
    return _BASIS_ALIASES.get(basis) or Basis(basis)


def _mean(xs):
    return statistics.fmean(xs) if xs else None


def _run_cost(run: RunRecord, basis: Basis):
    return run.predicted_ops if basis is Basis.OP_COUNT else run.wall_time


def algorithm_rows(rec: ExperimentRecord, basis) -> list[dict]:
    """One summary dict per algorithm in ``rec`` with CSV_COLUMNS keys."""
    basis = parse_basis(basis)
    bf_runs = rec.per_algorithm.get(Algorithm.BF)
    bf_cost = None
    if bf_runs:
        costs = [_run_cost(r, basis) for r in bf_runs]
        bf_cost = None if None in costs else _mean(costs)
    out = []
    for alg, runs in rec.per_algorithm.items():
        stats = rec.statistics(alg)
        acc = eff = gap = None
        if rec.oracle_value is not None and rec.oracle_value > 0:
            gaps = [approximation(rec.oracle_value, r.value)[0] for r in runs]
            accs = [1.0 - g / rec.oracle_value for g in gaps]
            gap, acc = _mean(gaps), _mean(accs)
            costs = [_run_cost(r, basis) for r in runs]
            if bf_cost and None not in costs and all(c > 0 for c in costs):
                eff = _mean([efficiency(a, c, bf_cost) for a, c in zip(accs, costs)])
        times = [r.wall_time for r in runs]
        out.append({
            "schema_version": SCHEMA_VERSION, "kind": "run", "dataset": rec.dataset,
            "n": rec.n, "d": rec.d, "algorithm": alg.value, "runs": len(runs),
            "oracle": rec.oracle_value, **stats, "approximation": gap, "accuracy": acc,
            "distance_evals_mean": _mean([r.distance_evals for r in runs]),
            "ops": _mean([r.predicted_ops for r in runs]),
            "time_ms": None if None in times else 1000.0 * _mean(times),
            "basis": basis.value, "efficiency": eff, "epsilon": None,
        })
    return out


def model_rows(rows: Sequence[CostModelRow], records: Sequence[ExperimentRecord]) -> list[dict]:
    """Cost rows, scored on the op-count basis with an ``epsilon`` absolute gap for M1-M8."""
    oracles = {r.dataset: r.oracle_value for r in records}
    observed = {r.dataset: r for r in records}
    bf_ops = {row.dataset: predicted_ops(CostMethod.BF, CostInputs(row.n, row.d)) for row in rows}
    out = []
    for row in rows:
        acc = None
        actual = oracles.get(row.dataset)
        if actual:
            if row.method.startswith("M"):
                with warnings.catch_warnings():
                    warnings.simplefilter("ignore")
                    acc = assumed_accuracy(actual, row.epsilon)
            else:
                rec = observed[row.dataset]
                runs = rec.per_algorithm.get(Algorithm(row.method))
                if runs:
                    acc = _mean([1.0 - approximation(actual, r.value)[0] / actual for r in runs])
        eff = None
        if acc is not None and row.dataset in bf_ops:
            eff = efficiency(acc, row.ops, bf_ops[row.dataset])
        out.append({
            "schema_version": SCHEMA_VERSION, "kind": "model", "dataset": row.dataset,
            "n": row.n, "d": row.d, "algorithm": row.method, "runs": None, "oracle": actual,
            "value_min": None, "value_mean": None, "value_max": None, "approximation": None,
            "accuracy": acc, "iterations_min": row.iterations, "iterations_mean": row.iterations,
            "iterations_max": row.iterations, "distance_evals_mean": None, "ops": row.ops,
            "time_ms": None, "basis": Basis.OP_COUNT.value, "efficiency": eff,
            "epsilon": row.epsilon,
        })
    return out


def _cell(v):
    if v is None:
        return ""
    if isinstance(v, float):
        return repr(v)
    return str(v)


def _render_csv(table: list[dict]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for row in table:
        w.writerow([_cell(row[c]) for c in CSV_COLUMNS])
    return buf.getvalue()


def _sci(v):
    return "-" if v is None else f"{v:.2E}"


def _fix(v, places=3):
    return "-" if v is None else f"{v:.{places}f}"


def _num(v):
    # diameters: fixed point unless the magnitude makes that unreadable
    if v is None:
        return "-"
    return f"{v:.4f}" if 1e-3 <= abs(v) < 1e6 or v == 0 else f"{v:.4E}"


def _iters(v):
    return f"{v:.0f}" if float(v).is_integer() else f"{v:.2f}"


def _render_table(runs: list[dict], models: list[dict], basis: Basis) -> str:
    lines = []
    if runs:
        unit = "ops" if basis is Basis.OP_COUNT else "time"
        head = (f"{'dataset':<16}{'alg':<5}{'n':>8}{'d':>5}{'diameter':>11}{'approx':>10}"
                f"{'accuracy':>10}{'iters':>11}{'ops':>11}{'time ms':>10}{'eff(' + unit + ')':>11}")
        lines += [head, "-" * len(head)]
        for r in runs:
            lines.append(
                f"{r['dataset'][:15]:<16}{r['algorithm']:<5}{r['n']:>8}{r['d']:>5}"
                f"{_num(r['value_mean']):>11}{_fix(r['approximation'], 2):>10}"
                f"{_fix(r['accuracy']):>10}{_iters(r['iterations_mean']):>11}{_sci(r['ops']):>11}"
                f"{_fix(r['time_ms'], 2):>10}{_fix(r['efficiency']):>11}")
    if models:
        if lines:
            lines.append("")
        names = list(dict.fromkeys(m["dataset"] for m in models))
        methods = list(dict.fromkeys(m["algorithm"] for m in models))
        cell = {(m["algorithm"], m["dataset"]): m for m in models}
        for title, key, fmt in (("operations", "ops", _sci), ("efficiency (op count)", "efficiency", _fix)):
            if key == "efficiency" and all(m["efficiency"] is None for m in models):
                continue
            head = f"{title:<24}" + "".join(f"{nm[:11]:>12}" for nm in names)
            lines += [head, "-" * len(head)]
            for meth in methods:
                vals = [cell.get((meth, nm), {}).get(key) for nm in names]
                lines.append(f"{meth:<24}" + "".join(f"{fmt(v):>12}" for v in vals))
            lines.append("")
        while lines and lines[-1] == "":
            lines.pop()
    return "\n".join(lines) + "\n"


def record_to_dict(rec: ExperimentRecord) -> dict:
    return {
        "dataset": rec.dataset, "n": rec.n, "d": rec.d, "oracle_value": rec.oracle_value,
        "seeds_used": list(rec.seeds_used),
        "config": {"k": rec.config.k, "beam_width": rec.config.beam_width,
                   "tie_tolerance": rec.config.tie_tolerance, "seed": rec.config.seed},
        "algorithms": {
            alg.value: {
                "runs": [{"value": r.value, "pair": list(r.pair), "iterations": r.iterations,
                          "distance_evals": r.distance_evals, "predicted_ops": r.predicted_ops,
                          "seed": r.seed, "wall_time_s": r.wall_time} for r in runs],
                "statistics": rec.statistics(alg),
            }
            for alg, runs in rec.per_algorithm.items()
        },
    }


def record_from_dict(doc: dict) -> ExperimentRecord:
    per = {}
    for name, body in doc["algorithms"].items():
        per[Algorithm(name)] = [
            RunRecord(r["value"], tuple(r["pair"]), r["iterations"], r["distance_evals"],
                      r["predicted_ops"], r["seed"], r["wall_time_s"])
            for r in body["runs"]
        ]
    return ExperimentRecord(doc["dataset"], doc["n"], doc["d"], per, list(doc["seeds_used"]),
                            doc["oracle_value"], AlgoConfig(**doc["config"]))


def report_document(records, rows=(), basis=Basis.OP_COUNT) -> dict:
    basis = parse_basis(basis)
    return {
        "schema_version": SCHEMA_VERSION,
        "basis": basis.value,
        "records": [record_to_dict(r) for r in records],
        "summary": [row for r in records for row in algorithm_rows(r, basis)],
        "cost_models": model_rows(rows, records),
    }


def render_report(records: Sequence[ExperimentRecord], rows: Sequence[CostModelRow] = (),
                  fmt=ReportFormat.HUMAN_TABLE, basis=Basis.OP_COUNT) -> str:
    fmt = ReportFormat(fmt)
    basis = parse_basis(basis)
    runs = [row for r in records for row in algorithm_rows(r, basis)]
    models = model_rows(rows, records)
    if fmt is ReportFormat.CSV:
        return _render_csv(runs + models)
    if fmt is ReportFormat.JSON:
        return json.dumps(report_document(records, rows, basis), indent=1, allow_nan=False) + "\n"
    return _render_table(runs, models, basis)


def load_report(text: str) -> tuple[list[ExperimentRecord], dict]:
    """Parse a JSON report back into records (plus the raw document)."""
    doc = json.loads(text)
    if doc.get("schema_version") != SCHEMA_VERSION:
        raise ValueError(f"unsupported report schema {doc.get('schema_version')!r}")
    return [record_from_dict(r) for r in doc["records"]], doc
