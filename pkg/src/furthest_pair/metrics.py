"""Accuracy and efficiency scores.

``accuracy = 1 - (actual - output) / actual`` and
``efficiency = accuracy / (1 + cost / cost_bf)``, where the costs are either
wall-clock times or operation counts (never mixed).  Brute force therefore
always scores 0.5 and a free exact algorithm would score 1.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from enum import Enum

from .errors import InvalidActual, InvalidTime


class Basis(str, Enum):
    WALL_TIME = "wall_time"
    OP_COUNT = "op_count"


class MetricWarning(UserWarning):
    pass


def _check_actual(actual):
    if not actual > 0 or math.isinf(actual):
        raise InvalidActual(f"actual diameter must be a positive finite number, got {actual!r}")


def approximation(actual: float, output: float) -> tuple[float, list[str]]:
    """Absolute gap ``actual - output``, clamped at 0, plus any diagnostics."""
    _check_actual(actual)
    gap = actual - output
    if gap < 0:
        return 0.0, [f"output {output!r} exceeds actual {actual!r} by {-gap:.3g}; gap clamped to 0"]
    return gap, []


def accuracy(actual: float, output: float) -> float:
    gap, notes = approximation(actual, output)
    for note in notes:
        warnings.warn(note, MetricWarning, stacklevel=2)
    return 1.0 - gap / actual


def efficiency(acc: float, t_algorithm: float, t_bf: float) -> float:
    if not t_algorithm > 0 or not t_bf > 0:
        raise InvalidTime(f"costs must be positive, got t_algorithm={t_algorithm!r}, t_bf={t_bf!r}")
    return acc / (1.0 + t_algorithm / t_bf)


def assumed_accuracy(actual: float, epsilon: float = 0.5) -> float:
    """Accuracy credited to a method whose output is assumed ``epsilon`` short.

    ``epsilon`` is read as an absolute gap, which is how the literature
    methods were scored in the comparison this package reproduces.  The
    result goes negative when ``actual < epsilon``; that is reported, not
    hidden.
    """
    _check_actual(actual)
    if not epsilon > 0:
        raise InvalidActual(f"epsilon must be positive, got {epsilon!r}")
    acc = 1.0 - epsilon / actual
    if acc < 0:
        warnings.warn(f"assumed accuracy {acc:.3g} < 0: actual diameter {actual!r} is below "
                      f"epsilon {epsilon!r}", MetricWarning, stacklevel=2)
    return acc


@dataclass(frozen=True)
class Evaluation:
    actual_diameter: float
    output_diameter: float
    approximation: float
    accuracy: float
    t_algorithm: float
    t_bf: float
    efficiency: float
    basis: Basis
    diagnostics: tuple[str, ...] = field(default=())


def evaluate(actual: float, output: float, t_algorithm: float, t_bf: float,
             basis=Basis.OP_COUNT) -> Evaluation:
    gap, notes = approximation(actual, output)
    acc = 1.0 - gap / actual
    return Evaluation(
        actual_diameter=actual,
        output_diameter=output,
        approximation=gap,
        accuracy=acc,
        t_algorithm=t_algorithm,
        t_bf=t_bf,
        efficiency=efficiency(acc, t_algorithm, t_bf),
        basis=Basis(basis),
        diagnostics=tuple(notes),
    )
