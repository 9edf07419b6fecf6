"""Run algorithm suites over a dataset and evaluate literature cost models."""

from __future__ import annotations

import statistics
import time
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional, Sequence

from . import algorithms as algos
from .algorithms import AlgoConfig, Algorithm
from .cost_models import LITERATURE, CostInputs, CostMethod, predicted_ops
from .errors import InvalidConfig, InvalidInput, MissingOracle
from .geometry import Dataset

ALL_ALGORITHMS = tuple(Algorithm)


@dataclass(frozen=True)
class RunRecord:
    value: float
    pair: tuple[int, int]
    iterations: int
    distance_evals: int
    predicted_ops: float
    seed: Optional[int] = None
    wall_time: Optional[float] = None  # seconds


@dataclass
class ExperimentRecord:
    dataset: str
    n: int
    d: int
    per_algorithm: dict[Algorithm, list[RunRecord]]
    seeds_used: list[int]
    oracle_value: Optional[float] = None
    config: AlgoConfig = field(default_factory=AlgoConfig)

    def statistics(self, alg) -> dict[str, float]:
        runs = self.per_algorithm[algos.parse_algorithm(alg)]
        vals = [r.value for r in runs]
        its = [r.iterations for r in runs]
        return {
            "value_min": min(vals), "value_mean": statistics.fmean(vals), "value_max": max(vals),
            "iterations_min": min(its), "iterations_mean": statistics.fmean(its),
            "iterations_max": max(its),
        }

    def exact_fraction(self, alg) -> float:
        """Share of runs that hit the oracle value exactly."""
        if self.oracle_value is None:
            raise MissingOracle(f"{self.dataset}: no brute-force value recorded")
        runs = self.per_algorithm[algos.parse_algorithm(alg)]
        return sum(r.value == self.oracle_value for r in runs) / len(runs)


def ops_for(alg: Algorithm, n: int, d: int, iterations: int) -> float:
    """Operation count of one run, as used for the op-count efficiency basis."""
    if alg is Algorithm.BF:
        return predicted_ops(CostMethod.BF, CostInputs(n, d))
    if alg is Algorithm.A1:
        return predicted_ops(CostMethod.A1, CostInputs(n, d))
    return predicted_ops(CostMethod.GREEDY, CostInputs(n, d, iterations=iterations))


def run_experiment(ds: Dataset, cfg: AlgoConfig = AlgoConfig(), algorithms: Iterable = ALL_ALGORITHMS,
                   repeats: int = 30, *, timing: bool = True, oracle: Optional[float] = None,
                   require_oracle: bool = False) -> ExperimentRecord:
    """Run every requested algorithm on ``ds``.

    Randomized algorithms run ``repeats`` times with seeds ``cfg.seed + i``;
    BF and A1 run once.  With ``timing`` each algorithm gets one untimed
    warm-up call before its measured runs.
    """
    if repeats < 1:
        raise InvalidConfig(f"repeats must be >= 1, got {repeats}")
    chosen = sorted({algos.parse_algorithm(a) for a in algorithms}, key=ALL_ALGORITHMS.index)
    if not chosen:
        raise InvalidConfig("no algorithms selected")
    if require_oracle and Algorithm.BF not in chosen and oracle is None:
        raise MissingOracle(f"{ds.name}: efficiency needs BF in the run or a cached oracle value")
    seeds = [cfg.seed + i for i in range(repeats)]

    per = {}
    for alg in chosen:
        run_seeds = seeds if alg.randomized else [None]
        if timing:
            algos.run(alg, ds, cfg)
        runs = []
        for s in run_seeds:
            c = cfg if s is None else cfg.with_seed(s)
            t0 = time.perf_counter()
            res = algos.run(alg, ds, c)
            elapsed = time.perf_counter() - t0 if timing else None
            runs.append(RunRecord(res.value, res.pair, res.iterations, res.distance_evals,
                                  ops_for(alg, ds.n, ds.d, res.iterations), res.seed, elapsed))
        per[alg] = runs

    if Algorithm.BF in per:
        oracle = per[Algorithm.BF][0].value
    return ExperimentRecord(ds.name, ds.n, ds.d, per, seeds, oracle, cfg)


@dataclass(frozen=True)
class CostModelRow:
    dataset: str
    method: str  # M1..M8, BF, A1, A2, A3, A4
    n: int
    d: int
    epsilon: float
    m: Optional[int]
    iterations: Optional[int]
    ops: float


def compare_cost_models(dims: Sequence[tuple[str, int, int]], epsilon: float = 0.5,
                        observed_iterations: Optional[Mapping[str, Mapping]] = None) -> list[CostModelRow]:
    """Operation counts for M1-M8, BF and A1 on each ``(name, n, d)``.

    ``observed_iterations`` maps a dataset name to ``{algorithm: iterations}``
    and adds rows for the greedy searches (A2-A4) that were actually run.
    """
    if not dims:
        raise InvalidInput("no datasets to compare")
    rows = []
    for name, n, d in dims:
        base = CostInputs(n, d, epsilon)
        for method in LITERATURE:
            m = base.m_resolved if method is CostMethod.M4 else None
            rows.append(CostModelRow(name, method.value, n, d, epsilon, m, None,
                                     predicted_ops(method, base)))
        for method in (CostMethod.BF, CostMethod.A1):
            rows.append(CostModelRow(name, method.value, n, d, epsilon, None, None,
                                     predicted_ops(method, base)))
        observed = (observed_iterations or {}).get(name, {})
        for alg in (Algorithm.A2, Algorithm.A3, Algorithm.A4):
            its = observed.get(alg, observed.get(alg.value))
            if its is not None:
                ops = predicted_ops(CostMethod.GREEDY, CostInputs(n, d, epsilon, iterations=int(its)))
                rows.append(CostModelRow(name, alg.value, n, d, epsilon, None, int(its), ops))
    return rows
