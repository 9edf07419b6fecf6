"""Euclidean primitives over an immutable point matrix.

All squared distances are accumulated left to right over the dimensions
(``np.cumsum`` is a sequential scan, unlike ``np.sum`` which switches to
pairwise summation).  That keeps every path -- scalar, vectorised scan,
brute force -- bit-identical to a plain Python loop, so a pair reported by
an algorithm always re-measures to exactly the same value.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, Mapping

import numpy as np

from .errors import ValidationError

# Row index into a Dataset.
PointRef = int


@dataclass(frozen=True, eq=False)
class Dataset:
    """An ``n x d`` matrix of finite reals with a name.

    The points array is copied on construction and flagged read-only, so a
    Dataset can be shared freely between threads.
    """

    name: str
    points: np.ndarray
    metadata: Mapping[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        try:
            pts = np.array(self.points, dtype=np.float64, copy=True)
        except (TypeError, ValueError) as exc:
            raise ValidationError(f"{self.name}: points are not a numeric matrix: {exc}") from None
        if pts.ndim != 2:
            raise ValidationError(f"{self.name}: expected a 2-D matrix, got shape {pts.shape}")
        n, d = pts.shape
        if n < 1 or d < 1:
            raise ValidationError(f"{self.name}: need n >= 1 and d >= 1, got {n} x {d}")
        if not np.isfinite(pts).all():
            bad = np.argwhere(~np.isfinite(pts))[0]
            raise ValidationError(
                f"{self.name}: non-finite value at row {bad[0]}, column {bad[1]}"
            )
        pts.flags.writeable = False
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "metadata", dict(self.metadata))

    @property
    def n(self) -> int:
        return self.points.shape[0]

    @property
    def d(self) -> int:
        return self.points.shape[1]

    def __len__(self):
        return self.n

    def __repr__(self):
        return f"Dataset({self.name!r}, n={self.n}, d={self.d})"

    def check_ref(self, a: PointRef) -> int:
        a = int(a)
        if not 0 <= a < self.n:
            raise IndexError(f"point index {a} out of range for {self!r}")
        return a


def _sq_rows(rows: np.ndarray, origin: np.ndarray | None) -> np.ndarray:
    """Squared distance from ``origin`` (or 0) to each row, summed left to right."""
    diff = rows if origin is None else rows - origin
    sq = diff * diff
    if sq.shape[0] == 0:
        return np.zeros(0)
    return np.cumsum(sq, axis=1)[:, -1]


def squared_distance(ds: Dataset, a: PointRef, b: PointRef) -> float:
    a, b = ds.check_ref(a), ds.check_ref(b)
    return float(_sq_rows(ds.points[b : b + 1], ds.points[a])[0])


def distance(ds: Dataset, a: PointRef, b: PointRef) -> float:
    return math.sqrt(squared_distance(ds, a, b))


def l2_norm(ds: Dataset, a: PointRef) -> float:
    a = ds.check_ref(a)
    return math.sqrt(float(_sq_rows(ds.points[a : a + 1], None)[0]))


def min_shift(ds: Dataset) -> Dataset:
    """Translate every column so that its minimum is exactly zero."""
    shifted = ds.points - ds.points.min(axis=0)
    meta = dict(ds.metadata)
    meta["min_shifted"] = True
    return Dataset(ds.name, shifted, meta)


class DistanceKernel:
    """Vectorised distance evaluator that counts what it computes.

    Algorithms never touch coordinates directly; they ask the kernel for
    squared distances and the kernel tallies one evaluation per
    point-to-point (or point-to-origin) distance in :attr:`evals`.  Tests
    substitute a subclass with a naive per-pair implementation to check both
    the values and the bookkeeping.
    """

    def __init__(self, ds: Dataset):
        self.points = ds.points
        self.n = ds.n
        self.evals = 0

    def scan(self, i: int, targets=None) -> np.ndarray:
        """Squared distances from point ``i`` to ``points[targets]`` (all if None)."""
        rows = self.points if targets is None else self.points[targets]
        out = _sq_rows(rows, self.points[i])
        self.evals += out.shape[0]
        return out

    def block(self, rows, cols) -> np.ndarray:
        """``len(rows) x len(cols)`` matrix of squared distances."""
        rows = np.asarray(rows, dtype=np.intp)
        cols = np.asarray(cols, dtype=np.intp)
        out = np.empty((rows.size, cols.size))
        for r, i in enumerate(rows):
            out[r] = self.scan(int(i), cols)
        return out

    def sq_norms(self, points: np.ndarray) -> np.ndarray:
        """Squared L2 norms of the rows of ``points`` (not necessarily ``self.points``)."""
        out = _sq_rows(points, None)
        self.evals += out.shape[0]
        return out
