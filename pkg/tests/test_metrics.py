import pytest
from hypothesis import given
from hypothesis import strategies as st

from furthest_pair.errors import InvalidActual, InvalidTime
from furthest_pair.metrics import (Basis, MetricWarning, accuracy, assumed_accuracy, efficiency,
                                   evaluate)
from published import DIAMETERS, EFFICIENCY, OPS, OPS_DIMS


def test_accuracy_exact():
    assert accuracy(7.09, 7.09) == 1.0


@pytest.mark.parametrize("actual, output, want", [(34.5, 26.1, 0.755), (3.46, 2.00, 0.577)])
def test_accuracy_published_within_rounding(actual, output, want):
    # published diameters carry 3 significant figures; the published accuracy
    # came from the unrounded values, so only the rounding interval is checkable
    half = 0.05 if actual >= 10 else 0.005
    lo = accuracy(actual + half, output - half)
    hi = accuracy(actual - half, output + half)
    assert lo <= want <= hi
    assert accuracy(actual, output) == pytest.approx(output / actual, rel=1e-14)


def test_accuracy_overshoot_clamps_with_warning():
    with pytest.warns(MetricWarning):
        assert accuracy(1.0, 1.0 + 1e-15) == 1.0
    ev = evaluate(1.0, 1.0 + 1e-15, 1, 2)
    assert ev.approximation == 0 and ev.diagnostics


@pytest.mark.parametrize("actual", [0.0, -1.0, float("nan"), float("inf")])
def test_accuracy_rejects_actual(actual):
    with pytest.raises(InvalidActual):
        accuracy(actual, 0.0)


def test_efficiency_bf_is_half():
    assert efficiency(1.0, 44700, 44700) == 0.5
    assert efficiency(1.0, 1e-3, 1e-3) == 0.5


def test_efficiency_published_a2():
    assert efficiency(1.0, 2400, 44700) == pytest.approx(0.949, abs=0.0005)


def test_efficiency_limit():
    assert efficiency(0.9, 1e-300, 1.0) == pytest.approx(0.9)


@pytest.mark.parametrize("t_a, t_bf", [(0, 1), (1, 0), (-1, 1)])
def test_efficiency_rejects_times(t_a, t_bf):
    with pytest.raises(InvalidTime):
        efficiency(1.0, t_a, t_bf)


def test_assumed_accuracy():
    acc = assumed_accuracy(7.09, 0.5)
    assert acc == pytest.approx(0.9295, abs=5e-5)
    assert efficiency(acc, 154, 44700) == pytest.approx(0.926, abs=0.0005)
    assert assumed_accuracy(33.4, 0.5) == pytest.approx(0.985, abs=0.0005)
    assert assumed_accuracy(0.5, 0.5) == 0.0


def test_assumed_accuracy_negative_is_reported():
    with pytest.warns(MetricWarning):
        assert assumed_accuracy(0.25, 0.5) == -1.0


def test_evaluate_record():
    ev = evaluate(34.5, 26.1, 10.0, 20.0, basis="wall_time")
    assert ev.basis is Basis.WALL_TIME
    assert ev.approximation == pytest.approx(8.4)
    assert ev.accuracy == pytest.approx(26.1 / 34.5)
    assert ev.efficiency == pytest.approx(ev.accuracy / 1.5)


def test_published_chain_reproduces_efficiency_table():
    for j, (name, n, d) in enumerate(OPS_DIMS):
        actual = DIAMETERS[name][0]
        for i, alg in enumerate(("BF", "A1", "A2", "A3", "A4")):
            eff = efficiency(accuracy(actual, DIAMETERS[name][i]), OPS[alg][j], OPS["BF"][j])
            assert eff == pytest.approx(EFFICIENCY[alg][j], abs=0.005), (name, alg)


positive = st.floats(1e-6, 1e6)


@given(positive, st.floats(0, 1), st.floats(1e-3, 1e3))
def test_accuracy_scale_invariant(actual, frac, c):
    output = actual * frac
    assert accuracy(c * actual, c * output) == pytest.approx(accuracy(actual, output), abs=1e-12)


@given(st.floats(0.01, 1), positive, positive, st.floats(1.01, 10))
def test_efficiency_monotone(acc, t_a, t_bf, factor):
    e = efficiency(acc, t_a, t_bf)
    assert e <= acc
    assert efficiency(acc, t_a * factor, t_bf) < e
    assert efficiency(min(1.0, acc * factor), t_a, t_bf) >= e
