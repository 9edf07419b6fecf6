import collections

import pytest

from furthest_pair.rng import RandomSource


def test_splitmix64_reference_stream():
    # first outputs for seed 0, from the published C reference implementation
    r = RandomSource(0)
    assert [r.next_u64() for _ in range(3)] == [
        0xE220A8397B1DCDAF, 0x6E789E6AA1B965F4, 0x06C45D188009454F,
    ]


def test_same_seed_same_stream():
    a, b = RandomSource(42), RandomSource(42)
    assert [a.uniform_index(1000) for _ in range(50)] == [b.uniform_index(1000) for _ in range(50)]
    assert [RandomSource(43).uniform_index(1000) for _ in range(5)] != \
        [RandomSource(42).uniform_index(1000) for _ in range(5)]


def test_uniform_index_range_and_balance():
    r = RandomSource(7)
    counts = collections.Counter(r.uniform_index(6) for _ in range(60000))
    assert set(counts) == set(range(6))
    for c in counts.values():
        assert abs(c - 10000) < 400  # > 4 standard deviations


def test_uniform_in_unit_interval():
    r = RandomSource(3)
    xs = [r.uniform() for _ in range(10000)]
    assert 0.0 <= min(xs) and max(xs) < 1.0
    assert abs(sum(xs) / len(xs) - 0.5) < 0.02


def test_distinct_indices():
    r = RandomSource(5)
    got = r.distinct_indices(10, 10)
    assert sorted(got) == list(range(10))
    assert len(set(r.distinct_indices(1000, 20))) == 20
    with pytest.raises(ValueError):
        r.distinct_indices(3, 4)


def test_uniform_index_rejects_empty_range():
    with pytest.raises(ValueError):
        RandomSource(1).uniform_index(0)
