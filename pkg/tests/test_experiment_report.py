import csv
import io
import json

import jsonschema
import numpy as np
import pytest

from furthest_pair.algorithms import AlgoConfig, Algorithm
from furthest_pair.datasets import bundled_dir, iris
from furthest_pair.errors import InvalidConfig, InvalidInput, MissingOracle
from furthest_pair.experiment import compare_cost_models, run_experiment
from furthest_pair.geometry import Dataset
from furthest_pair.report import (CSV_COLUMNS, SCHEMA_VERSION, algorithm_rows, load_report,
                                  render_report, report_document)
from oracles import naive_diameter
from published import EFFICIENCY, OPS, OPS_DIMS

IRIS_BF = 7.085195833567341


@pytest.fixture(scope="module")
def iris_record():
    return run_experiment(iris(), AlgoConfig(), repeats=30, timing=False)


def by_alg(rows):
    return {r["algorithm"]: r for r in rows}


def test_iris_experiment(iris_record):
    rec = iris_record
    assert rec.oracle_value == pytest.approx(7.09, abs=0.005)
    assert rec.seeds_used == [AlgoConfig().seed + i for i in range(30)]
    assert len(rec.per_algorithm[Algorithm.BF]) == 1
    assert len(rec.per_algorithm[Algorithm.A1]) == 1
    for alg in (Algorithm.A2, Algorithm.A3, Algorithm.A4):
        assert len(rec.per_algorithm[alg]) == 30
        assert rec.exact_fraction(alg) == 1.0
        stats = rec.statistics(alg)
        its = [r.iterations for r in rec.per_algorithm[alg]]
        assert (stats["iterations_min"], stats["iterations_max"]) == (min(its), max(its))
        assert stats["iterations_mean"] == pytest.approx(sum(its) / 30)
    assert all(r.wall_time is None for runs in rec.per_algorithm.values() for r in runs)


def test_two_points_every_algorithm_agrees():
    ds = Dataset("two", [[0.0, 1.0], [3.0, 5.0]])
    rec = run_experiment(ds, repeats=5, timing=False)
    assert {r.value for runs in rec.per_algorithm.values() for r in runs} == {5.0}


def test_random_64x8_lower_bounds_and_frequencies():
    ds = Dataset("r", np.random.default_rng(4).uniform(-1, 1, size=(64, 8)))
    rec = run_experiment(ds, repeats=100, timing=False)
    assert rec.oracle_value == naive_diameter(ds.points)
    for alg, runs in rec.per_algorithm.items():
        assert all(r.value <= rec.oracle_value * (1 + 1e-9) for r in runs)
        assert 0.0 <= rec.exact_fraction(alg) <= 1.0
    assert rec.exact_fraction(Algorithm.BF) == 1.0


def test_wall_time_is_measured():
    rec = run_experiment(iris(), algorithms=["bf", "hc"], repeats=2)
    assert all(r.wall_time > 0 for runs in rec.per_algorithm.values() for r in runs)


def test_missing_oracle():
    with pytest.raises(MissingOracle):
        run_experiment(iris(), algorithms=["hc"], repeats=1, timing=False, require_oracle=True)
    rec = run_experiment(iris(), algorithms=["hc"], repeats=1, timing=False,
                         require_oracle=True, oracle=IRIS_BF)
    assert rec.exact_fraction("hc") == 1.0
    rec = run_experiment(iris(), algorithms=["hc"], repeats=1, timing=False)
    with pytest.raises(MissingOracle):
        rec.exact_fraction("hc")


def test_bad_repeats():
    with pytest.raises(InvalidConfig):
        run_experiment(iris(), repeats=0)


# cost model comparison

def ops_of(rows, method):
    return next(r.ops for r in rows if r.method == method)


def test_compare_d1():
    rows = compare_cost_models([("D1", 150, 4)])
    assert ops_of(rows, "M1") == pytest.approx(1.54e2, rel=0.01)
    assert ops_of(rows, "M7") == pytest.approx(1.73e2, rel=0.01)
    assert [r.method for r in rows] == [f"M{i}" for i in range(1, 9)] + ["BF", "A1"]
    assert next(r.m for r in rows if r.method == "M4") == 75


def test_compare_d16():
    assert ops_of(compare_cost_models([("D16", 208, 60)]), "M7") == pytest.approx(4.38e26, rel=0.01)


def test_compare_epsilon_one():
    assert ops_of(compare_cost_models([("D1", 150, 4)], epsilon=1.0), "M1") == 151


def test_compare_observed_iterations_reproduce_greedy_cells():
    # the single published run's iteration counts reproduce its A2-A4 op counts
    its = {"D1": {"A2": 4, "A3": 4, "A4": 25}, "D25": {"A2": 4, "A3": 4, "A4": 31}}
    rows = compare_cost_models([d for d in OPS_DIMS if d[0] in its], observed_iterations=its)
    for name, col in (("D1", 0), ("D25", 3)):
        for alg in ("A2", "A3", "A4"):
            got = next(r.ops for r in rows if r.dataset == name and r.method == alg)
            assert got == pytest.approx(OPS[alg][col], rel=0.01)


@pytest.mark.parametrize("dims, eps", [([], 0.5), ([("x", 10, 2)], 0.0), ([("x", 10, 2)], 2.0)])
def test_compare_invalid(dims, eps):
    with pytest.raises(InvalidInput):
        compare_cost_models(dims, eps)


# reports

def test_iris_op_count_efficiency(iris_record):
    # the default seed reproduces the published 4-iteration A2 run
    rec = run_experiment(iris(), AlgoConfig(), repeats=1, timing=False)
    assert rec.per_algorithm[Algorithm.A2][0].iterations == 4
    rows = by_alg(algorithm_rows(rec, "ops"))
    assert rows["A2"]["efficiency"] == pytest.approx(0.949, abs=0.0005)
    assert rows["BF"]["efficiency"] == 0.5
    assert rows["A1"]["efficiency"] == pytest.approx(EFFICIENCY["A1"][0], abs=0.0005)


def test_iris_seed_averaged_efficiency(iris_record):
    rows = by_alg(algorithm_rows(iris_record, "ops"))
    for alg in ("A1", "A4"):
        assert rows[alg]["efficiency"] == pytest.approx(EFFICIENCY[alg][0], abs=0.01)
    # most seeds need 3 scans rather than the published run's 4, so the
    # average sits about 0.011 above that single draw; the draw itself is in the spread
    bf_ops = 44700.0
    for alg in (Algorithm.A2, Algorithm.A3):
        effs = {round(1.0 / (1.0 + r.predicted_ops / bf_ops), 3) for r in iris_record.per_algorithm[alg]}
        assert EFFICIENCY[alg.value][0] in effs
        assert rows[alg.value]["efficiency"] == pytest.approx(EFFICIENCY[alg.value][0], abs=0.015)


def test_model_rows_reproduce_d1_column(iris_record):
    rows = compare_cost_models([("iris", 150, 4)])
    doc = report_document([iris_record], rows)
    got = {r["algorithm"]: r["efficiency"] for r in doc["cost_models"]}
    for m in [f"M{i}" for i in range(1, 9)]:
        assert got[m] == pytest.approx(EFFICIENCY[m][0], abs=0.005), m


def test_json_round_trip(iris_record):
    text = render_report([iris_record], fmt="json")
    back, doc = load_report(text)
    assert doc["schema_version"] == SCHEMA_VERSION
    (rec,) = back
    assert rec.dataset == iris_record.dataset and rec.oracle_value == iris_record.oracle_value
    assert rec.seeds_used == iris_record.seeds_used
    assert rec.config == iris_record.config
    assert rec.per_algorithm == iris_record.per_algorithm
    assert render_report(back, fmt="json") == text


def test_json_validates_against_shipped_schema(iris_record):
    schema = json.loads((bundled_dir() / "report.schema.json").read_text())
    rows = compare_cost_models([("iris", 150, 4)])
    jsonschema.validate(json.loads(render_report([iris_record], rows, fmt="json")), schema)
    timed = run_experiment(iris(), algorithms=["bf", "tabu"], repeats=2)
    jsonschema.validate(json.loads(render_report([timed], fmt="json", basis="time")), schema)


def test_csv_columns_fixed(iris_record):
    rows = compare_cost_models([("iris", 150, 4)])
    text = render_report([iris_record], rows, fmt="csv")
    table = list(csv.reader(io.StringIO(text)))
    assert tuple(table[0]) == CSV_COLUMNS
    assert all(len(r) == len(CSV_COLUMNS) for r in table)
    assert [r[5] for r in table[1:]] == ["BF", "A1", "A2", "A3", "A4"] + [f"M{i}" for i in range(1, 9)] + ["BF", "A1"]
    # floats are written at full precision
    bf = dict(zip(table[0], table[1]))
    assert float(bf["value_mean"]) == IRIS_BF


def test_time_basis(iris_record):
    rec = run_experiment(iris(), algorithms=["bf", "hc"], repeats=3)
    rows = by_alg(algorithm_rows(rec, "time"))
    assert rows["BF"]["efficiency"] == pytest.approx(0.5)
    assert 0 < rows["A2"]["efficiency"] <= 1
    # without wall times there is nothing to score on that basis
    assert all(r["efficiency"] is None for r in algorithm_rows(iris_record, "time"))


def test_human_table_mentions_everything(iris_record):
    text = render_report([iris_record], compare_cost_models([("iris", 150, 4)]))
    for word in ("iris", "BF", "A4", "M8", "eff(ops)"):
        assert word in text
