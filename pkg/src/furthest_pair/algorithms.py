"""Exact and greedy furthest-pair algorithms.

``brute_force`` is the oracle.  The four greedy methods return a pair that
actually exists in the data, so their value is always a lower bound on the
true diameter:

* ``minmax_norms`` (A1) -- compare the k smallest-norm against the k
  largest-norm points of the min-shifted data.
* ``hill_climbing`` (A2) -- jump to the furthest point until that stops
  improving.
* ``tabu_search`` (A3) -- follow every point tied at the current maximum,
  never scanning from (or to) a visited point twice.
* ``beam_search`` (A4) -- B random starts sharing one queue, one visited
  set and one global best.

Every comparison is on squared distances; the square root is taken once when
the result is built.  Scans run in ascending row order and only a strictly
larger value replaces the current best, so ties go to the lowest index.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Optional, Union

import numpy as np

from .errors import DegenerateDataset, InvalidConfig
from .geometry import Dataset, DistanceKernel, min_shift
from .rng import DEFAULT_SEED, RandomSource


class Algorithm(str, Enum):
    BF = "BF"
    A1 = "A1"
    A2 = "A2"
    A3 = "A3"
    A4 = "A4"

    @property
    def randomized(self) -> bool:
        return self in (Algorithm.A2, Algorithm.A3, Algorithm.A4)


# CLI spellings
ALIASES = {
    "bf": Algorithm.BF,
    "norms": Algorithm.A1,
    "hc": Algorithm.A2,
    "tabu": Algorithm.A3,
    "beam": Algorithm.A4,
}


@dataclass(frozen=True)
class AlgoConfig:
    k: Union[int, str] = "auto"
    beam_width: int = 20
    tie_tolerance: float = 0.0
    seed: int = DEFAULT_SEED

    def __post_init__(self):
        if self.k != "auto":
            if isinstance(self.k, bool) or not isinstance(self.k, (int, np.integer)) or self.k < 1:
                raise InvalidConfig(f"k must be a positive integer or 'auto', got {self.k!r}")
        if isinstance(self.beam_width, bool) or not isinstance(self.beam_width, (int, np.integer)):
            raise InvalidConfig(f"beam_width must be an integer, got {self.beam_width!r}")
        if self.beam_width < 1:
            raise InvalidConfig(f"beam_width must be >= 1, got {self.beam_width}")
        if not (self.tie_tolerance >= 0) or math.isinf(self.tie_tolerance):
            raise InvalidConfig(f"tie_tolerance must be a finite value >= 0, got {self.tie_tolerance!r}")

    def with_seed(self, seed: int) -> "AlgoConfig":
        return AlgoConfig(self.k, self.beam_width, self.tie_tolerance, seed)


@dataclass(frozen=True)
class DiameterResult:
    """Outcome of one algorithm run.

    ``iterations`` is the pair count for BF, a constant 2 for A1, full scans
    for A2, and initial scan(s) plus dequeue passes for A3/A4.  ``trace``
    holds the best distance known after each scan (for A2 it is the maximum
    *of* each scan, so only its last entry may fail to increase).
    """

    value: float
    pair: tuple[int, int]
    iterations: int
    distance_evals: int
    algorithm: Algorithm
    seed: Optional[int] = None
    passes: int = 0
    trace: tuple[float, ...] = field(default=(), repr=False)


KernelFactory = Callable[[Dataset], DistanceKernel]


def resolve_k(n: int, cfg: AlgoConfig) -> int:
    if n < 1:
        raise DegenerateDataset(f"resolve_k needs n >= 1, got {n}")
    if cfg.k == "auto":
        # (n - 1).bit_length() == ceil(log2(n)) for n >= 1, without float rounding
        return min(max((n - 1).bit_length(), 1), n)
    return min(int(cfg.k), n)


def _require_pairs(ds: Dataset):
    if ds.n < 2:
        raise DegenerateDataset(f"{ds.name}: the diameter needs at least 2 points, got {ds.n}")


def _kernel(ds, kernel):
    return DistanceKernel(ds) if kernel is None else kernel(ds)


def _result(best_sq, pair, n, **kw) -> DiameterResult:
    a, b = int(pair[0]), int(pair[1])
    if a == b:
        # only reachable when every scanned distance was zero, i.e. all points coincide
        b = (a + 1) % n
    return DiameterResult(value=math.sqrt(best_sq), pair=(a, b), **kw)


def brute_force(ds: Dataset, *, kernel: KernelFactory | None = None) -> DiameterResult:
    _require_pairs(ds)
    K = _kernel(ds, kernel)
    n = ds.n
    best, pair = -1.0, (0, 1)
    for i in range(n - 1):
        sq = K.scan(i, slice(i + 1, n))
        j = int(np.argmax(sq))
        if sq[j] > best:
            best, pair = float(sq[j]), (i, i + 1 + j)
    pairs = n * (n - 1) // 2
    return _result(best, pair, n, iterations=pairs, distance_evals=K.evals,
                   algorithm=Algorithm.BF)


def minmax_norms(ds: Dataset, cfg: AlgoConfig = AlgoConfig(), *,
                 kernel: KernelFactory | None = None) -> DiameterResult:
    _require_pairs(ds)
    K = _kernel(ds, kernel)
    n = ds.n
    k = resolve_k(n, cfg)
    # norms only mean something once every coordinate is non-negative
    norms = K.sq_norms(min_shift(ds).points)
    order = np.argsort(norms, kind="stable")
    smallest = order[:k]
    largest = order[::-1][:k]
    # translation leaves distances unchanged, so compare on the original rows
    # and the reported pair re-measures exactly
    block = K.block(smallest, largest)
    r, c = np.unravel_index(int(np.argmax(block)), block.shape)
    best = float(block[r, c])
    return _result(best, (smallest[r], largest[c]), n, iterations=2,
                   distance_evals=K.evals, algorithm=Algorithm.A1,
                   trace=(math.sqrt(best),))


def hill_climbing(ds: Dataset, cfg: AlgoConfig = AlgoConfig(), *,
                  kernel: KernelFactory | None = None) -> DiameterResult:
    _require_pairs(ds)
    K = _kernel(ds, kernel)
    rng = RandomSource(cfg.seed)
    p1 = rng.uniform_index(ds.n)
    sq = K.scan(p1)
    p2 = int(np.argmax(sq))
    best = float(sq[p2])
    trace = [math.sqrt(best)]
    while True:
        sq = K.scan(p2)
        p3 = int(np.argmax(sq))
        trace.append(math.sqrt(sq[p3]))
        if sq[p3] > best:
            p1, p2, best = p2, p3, float(sq[p3])
        else:
            break
    return _result(best, (p1, p2), ds.n, iterations=len(trace), distance_evals=K.evals,
                   algorithm=Algorithm.A2, seed=cfg.seed, trace=tuple(trace))


def _ties(sq: np.ndarray, best_sq: float, tol: float) -> np.ndarray:
    """Mask of entries whose distance equals the current maximum distance."""
    dist = np.sqrt(sq)
    top = math.sqrt(best_sq)
    if tol == 0:
        return dist == top
    return np.abs(dist - top) <= tol * max(1.0, top)


def tabu_search(ds: Dataset, cfg: AlgoConfig = AlgoConfig(), *,
                kernel: KernelFactory | None = None) -> DiameterResult:
    _require_pairs(ds)
    K = _kernel(ds, kernel)
    n = ds.n
    rng = RandomSource(cfg.seed)
    p1 = rng.uniform_index(n)
    sq = K.scan(p1)
    j = int(np.argmax(sq))
    best, pair = float(sq[j]), (p1, j)
    trace = [math.sqrt(best)]
    queue = deque(np.flatnonzero(_ties(sq, best, cfg.tie_tolerance)).tolist())
    visited = np.zeros(n, dtype=bool)
    passes = 0
    while queue:
        p3 = queue.popleft()
        if visited[p3]:
            continue
        visited[p3] = True
        passes += 1
        targets = np.flatnonzero(~visited)
        sq = K.scan(p3, targets)
        if sq.size:
            j = int(np.argmax(sq))
            if sq[j] > best:
                best, pair = float(sq[j]), (p3, int(targets[j]))
            queue.extend(targets[_ties(sq, best, cfg.tie_tolerance)].tolist())
        trace.append(math.sqrt(best))
    return _result(best, pair, n, iterations=1 + passes, distance_evals=K.evals,
                   algorithm=Algorithm.A3, seed=cfg.seed, passes=passes, trace=tuple(trace))


def beam_seeds(n: int, beam_width: int, seed: int) -> list[int]:
    """Starting points for beam search: distinct while B <= n, then with replacement."""
    rng = RandomSource(seed)
    starts = rng.distinct_indices(n, min(beam_width, n))
    starts += [rng.uniform_index(n) for _ in range(beam_width - len(starts))]
    return starts


def beam_search(ds: Dataset, cfg: AlgoConfig = AlgoConfig(), *,
                kernel: KernelFactory | None = None) -> DiameterResult:
    _require_pairs(ds)
    K = _kernel(ds, kernel)
    n = ds.n
    best, pair = -1.0, (0, 0)
    trace = []
    queue = deque()
    for p1 in beam_seeds(n, cfg.beam_width, cfg.seed):
        sq = K.scan(p1)
        j = int(np.argmax(sq))
        queue.append(j)
        # one best across all beams; it is never reset per beam
        if sq[j] > best:
            best, pair = float(sq[j]), (p1, j)
        trace.append(math.sqrt(best))
    visited = np.zeros(n, dtype=bool)
    passes = 0
    while queue:
        p3 = queue.popleft()
        if visited[p3]:
            continue
        visited[p3] = True
        passes += 1
        targets = np.flatnonzero(~visited)
        sq = K.scan(p3, targets)
        if sq.size:
            j = int(np.argmax(sq))
            if sq[j] > best:
                best, pair = float(sq[j]), (p3, int(targets[j]))
                queue.append(int(targets[j]))
        trace.append(math.sqrt(best))
    return _result(best, pair, n, iterations=cfg.beam_width + passes,
                   distance_evals=K.evals, algorithm=Algorithm.A4, seed=cfg.seed,
                   passes=passes, trace=tuple(trace))


def run(algorithm, ds: Dataset, cfg: AlgoConfig = AlgoConfig(), *,
        kernel: KernelFactory | None = None) -> DiameterResult:
    """Dispatch by :class:`Algorithm` (or its value / CLI alias)."""
    alg = parse_algorithm(algorithm)
    if alg is Algorithm.BF:
        return brute_force(ds, kernel=kernel)
    fn = {Algorithm.A1: minmax_norms, Algorithm.A2: hill_climbing,
          Algorithm.A3: tabu_search, Algorithm.A4: beam_search}[alg]
    return fn(ds, cfg, kernel=kernel)


def parse_algorithm(name) -> Algorithm:
    if isinstance(name, Algorithm):
        return name
    key = str(name)
    if key.lower() in ALIASES:
        return ALIASES[key.lower()]
    try:
        return Algorithm(key.upper())
    except ValueError:
        raise InvalidConfig(f"unknown algorithm {name!r}") from None
