"""Loading, describing and generating datasets.

CSV files are read with the stdlib ``csv`` module.  Every remaining cell
must parse as a finite decimal number (``.`` as the decimal point); there is
no imputation, so a missing value stops the load with its location.  Rows
keep their file order because the algorithms break ties by row index.

Manifests are JSON::

    {"datasets": [
        {"name": "iris", "path": "iris.csv", "expected_n": 150, "expected_d": 4,
         "label_columns": [4]},
        {"name": "cube", "path": "synthetic",
         "synthetic": {"n": 500, "d": 14, "low": -10, "high": 10,
                       "distribution": "uniform_real", "seed": 1}}
    ]}

Relative paths are looked up next to the manifest, then in the directory
named by ``$FURTHEST_PAIR_DATA``, then among the files bundled with the
package (only Iris).
"""

from __future__ import annotations

import csv
import json
import math
import os
from dataclasses import dataclass, field
from enum import Enum
from importlib import resources
from pathlib import Path
from typing import Optional

import numpy as np

from .errors import InvalidSpec, IoError, ManifestError, ParseError, ValidationError
from .geometry import Dataset
from .rng import RandomSource

DATA_DIR_ENV = "FURTHEST_PAIR_DATA"


class Distribution(str, Enum):
    UNIFORM_REAL = "uniform_real"
    UNIFORM_INTEGER = "uniform_integer"
    BERNOULLI = "bernoulli"


@dataclass(frozen=True)
class SyntheticSpec:
    n: int
    d: int
    low: float = 0.0
    high: float = 1.0
    distribution: Distribution = Distribution.UNIFORM_REAL
    seed: int = 0

    def __post_init__(self):
        try:
            object.__setattr__(self, "distribution", Distribution(self.distribution))
        except ValueError:
            raise InvalidSpec(f"unknown distribution {self.distribution!r}") from None
        for attr in ("n", "d"):
            v = getattr(self, attr)
            if isinstance(v, bool) or not isinstance(v, int) or v < 1:
                raise InvalidSpec(f"{attr} must be a positive integer, got {v!r}")
        if self.distribution is not Distribution.BERNOULLI:
            if not (math.isfinite(self.low) and math.isfinite(self.high)):
                raise InvalidSpec("low and high must be finite")
            if not self.low < self.high:
                raise InvalidSpec(f"need low < high, got [{self.low}, {self.high}]")
        if self.distribution is Distribution.UNIFORM_INTEGER:
            if math.floor(self.high) < math.ceil(self.low):
                raise InvalidSpec(f"[{self.low}, {self.high}] contains no integer")

    @property
    def name(self) -> str:
        if self.distribution is Distribution.BERNOULLI:
            return f"synthetic-bernoulli-n{self.n}-d{self.d}-s{self.seed}"
        return (f"synthetic-{self.distribution.value}-n{self.n}-d{self.d}"
                f"-[{self.low:g},{self.high:g}]-s{self.seed}")


def generate_synthetic(spec: SyntheticSpec) -> Dataset:
    """Row-major draws from a SplitMix64 stream seeded with ``spec.seed``.

    uniform_real: ``low + (high - low) * u`` with u a 53-bit uniform in [0, 1).
    uniform_integer: ``ceil(low) + uniform_index(floor(high) - ceil(low) + 1)``.
    bernoulli: the top bit of each 64-bit output.
    """
    rng = RandomSource(spec.seed)
    count = spec.n * spec.d
    if spec.distribution is Distribution.BERNOULLI:
        vals = [float(rng.bit()) for _ in range(count)]
    elif spec.distribution is Distribution.UNIFORM_INTEGER:
        lo, hi = math.ceil(spec.low), math.floor(spec.high)
        vals = [float(lo + rng.uniform_index(hi - lo + 1)) for _ in range(count)]
    else:
        span = spec.high - spec.low
        vals = [min(spec.low + span * rng.uniform(), spec.high) for _ in range(count)]
    pts = np.array(vals, dtype=np.float64).reshape(spec.n, spec.d)
    meta = {"source": "synthetic", "distribution": spec.distribution.value,
            "low": spec.low, "high": spec.high, "seed": spec.seed}
    return Dataset(spec.name, pts, meta)


@dataclass(frozen=True)
class DatasetDescriptor:
    name: str
    path: str
    expected_n: Optional[int] = None
    expected_d: Optional[int] = None
    declared_range: Optional[tuple[float, float]] = None
    label_columns: tuple[int, ...] = ()
    delimiter: str = ","
    has_header: bool = False
    synthetic: Optional[SyntheticSpec] = None

    @property
    def is_synthetic(self) -> bool:
        return self.path == "synthetic"


def _parse_cell(text: str, row: int, col: int) -> float:
    cell = text.strip()
    if not cell or "_" in cell:
        raise ParseError(f"non-numeric cell {text!r}", row=row, column=col)
    try:
        return float(cell)
    except ValueError:
        raise ParseError(f"non-numeric cell {text!r}", row=row, column=col) from None


def load_csv(desc: DatasetDescriptor, base_dir=None) -> Dataset:
    """Read ``desc.path``, drop ``desc.label_columns`` (0-based), validate n and d.

    Error locations are 1-based file rows and columns.
    """
    if desc.is_synthetic:
        if desc.synthetic is None:
            raise ValidationError(f"{desc.name}: synthetic descriptor without a spec")
        ds = generate_synthetic(desc.synthetic)
        ds = Dataset(desc.name, ds.points, ds.metadata)
        _check_shape(desc, ds.n, ds.d)
        return ds
    if len(desc.delimiter) != 1:
        raise ValidationError(f"{desc.name}: delimiter must be a single character")
    path = resolve_path(desc.path, base_dir)
    try:
        with open(path, newline="", encoding="utf-8") as fh:
            lines = list(csv.reader(fh, delimiter=desc.delimiter))
    except OSError as exc:
        raise IoError(f"cannot read {path}: {exc.strerror or exc}") from exc
    except UnicodeDecodeError as exc:
        raise ParseError(f"{path} is not UTF-8 text: {exc.reason}") from None

    drop = set(desc.label_columns)
    rows, width = [], None
    for lineno, cells in enumerate(lines, start=1):
        if desc.has_header and lineno == 1:
            continue
        if not cells or all(not c.strip() for c in cells):
            continue
        if width is None:
            width = len(cells)
            bad = [c for c in drop if not 0 <= c < width]
            if bad:
                raise ValidationError(f"{desc.name}: label columns {bad} outside 0..{width - 1}")
        elif len(cells) != width:
            raise ParseError(f"ragged row: {len(cells)} fields, expected {width}", row=lineno)
        rows.append([_parse_cell(c, lineno, j + 1) for j, c in enumerate(cells) if j not in drop])

    if not rows:
        raise ValidationError(f"{desc.name}: no data rows in {path}")
    if not rows[0]:
        raise ValidationError(f"{desc.name}: every column was dropped as a label")
    pts = np.array(rows, dtype=np.float64)
    _check_shape(desc, *pts.shape)
    meta = {"source": str(path)}
    if desc.declared_range is not None:
        meta["declared_range"] = tuple(desc.declared_range)
    return Dataset(desc.name, pts, meta)


def _check_shape(desc, n, d):
    if desc.expected_n is not None and n != desc.expected_n:
        raise ValidationError(f"{desc.name}: expected n={desc.expected_n}, loaded {n}")
    if desc.expected_d is not None and d != desc.expected_d:
        raise ValidationError(f"{desc.name}: expected d={desc.expected_d}, loaded {d}")


def data_dir() -> Optional[Path]:
    env = os.environ.get(DATA_DIR_ENV)
    return Path(env) if env else None


def bundled_dir() -> Path:
    return Path(str(resources.files("furthest_pair") / "data"))


def resolve_path(path, base_dir=None) -> Path:
    p = Path(path).expanduser()
    if p.is_absolute():
        return p
    candidates = [Path(base_dir) / p if base_dir is not None else p]
    if data_dir() is not None:
        candidates.append(data_dir() / p)
    candidates.append(bundled_dir() / p)
    for c in candidates:
        if c.exists():
            return c
    return candidates[0]


_FIELDS = {"name", "path", "expected_n", "expected_d", "declared_range", "label_columns",
           "delimiter", "has_header", "synthetic"}
_SYNTH_FIELDS = {"n", "d", "low", "high", "distribution", "seed"}


def _descriptor_from(entry, where) -> DatasetDescriptor:
    if not isinstance(entry, dict):
        raise ManifestError("dataset entry must be an object", where)
    unknown = set(entry) - _FIELDS
    if unknown:
        raise ManifestError(f"unknown field(s) {sorted(unknown)}", where)
    for req in ("name", "path"):
        if not isinstance(entry.get(req), str) or not entry[req]:
            raise ManifestError(f"'{req}' must be a non-empty string", where)

    def opt_int(key):
        v = entry.get(key)
        if v is not None and (isinstance(v, bool) or not isinstance(v, int) or v < 1):
            raise ManifestError(f"'{key}' must be a positive integer", where)
        return v

    rng = entry.get("declared_range")
    if rng is not None:
        if (not isinstance(rng, list) or len(rng) != 2
                or not all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in rng)):
            raise ManifestError("'declared_range' must be [low, high]", where)
        rng = (float(rng[0]), float(rng[1]))
    labels = entry.get("label_columns", [])
    if not isinstance(labels, list) or not all(
            isinstance(c, int) and not isinstance(c, bool) and c >= 0 for c in labels):
        raise ManifestError("'label_columns' must be a list of column indices", where)
    delim = entry.get("delimiter", ",")
    if not isinstance(delim, str) or len(delim) != 1:
        raise ManifestError("'delimiter' must be a single character", where)
    header = entry.get("has_header", False)
    if not isinstance(header, bool):
        raise ManifestError("'has_header' must be true or false", where)

    synth = entry.get("synthetic")
    if synth is not None:
        if not isinstance(synth, dict):
            raise ManifestError("'synthetic' must be an object", where)
        unknown = set(synth) - _SYNTH_FIELDS
        if unknown:
            raise ManifestError(f"unknown synthetic field(s) {sorted(unknown)}", where)
        try:
            synth = SyntheticSpec(**synth)
        except (TypeError, InvalidSpec) as exc:
            raise ManifestError(f"bad synthetic spec: {exc}", where) from None
    if (entry["path"] == "synthetic") != (synth is not None):
        raise ManifestError("'synthetic' is required exactly when path is \"synthetic\"", where)

    return DatasetDescriptor(
        name=entry["name"], path=entry["path"], expected_n=opt_int("expected_n"),
        expected_d=opt_int("expected_d"), declared_range=rng, label_columns=tuple(labels),
        delimiter=delim, has_header=header, synthetic=synth,
    )


def parse_manifest(text: str, source="<manifest>") -> list[DatasetDescriptor]:
    if not text.strip():
        return []
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ManifestError(f"invalid JSON: {exc.msg}", f"{source}:{exc.lineno}:{exc.colno}") from None
    if not isinstance(doc, dict):
        raise ManifestError("top level must be an object with a 'datasets' list", source)
    unknown = set(doc) - {"datasets", "schema_version"}
    if unknown:
        raise ManifestError(f"unknown top-level field(s) {sorted(unknown)}", source)
    entries = doc.get("datasets", [])
    if not isinstance(entries, list):
        raise ManifestError("'datasets' must be a list", source)
    out, seen = [], set()
    for i, entry in enumerate(entries):
        desc = _descriptor_from(entry, f"{source}: datasets[{i}]")
        if desc.name in seen:
            raise ManifestError(f"duplicate dataset name {desc.name!r}", f"{source}: datasets[{i}]")
        seen.add(desc.name)
        out.append(desc)
    return out


def load_manifest(path) -> list[DatasetDescriptor]:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ManifestError(f"cannot read manifest: {exc.strerror or exc}", str(path)) from None
    return parse_manifest(text, str(path))


@dataclass(frozen=True)
class RegistryEntry:
    key: str
    data_type: str
    descriptor: DatasetDescriptor = field(repr=False)


def registry() -> list[RegistryEntry]:
    """Descriptors for the 29 benchmark datasets (only Iris ships with the package)."""
    doc = json.loads((bundled_dir() / "registry.json").read_text(encoding="utf-8"))
    out = []
    for i, entry in enumerate(doc["datasets"]):
        entry = dict(entry)
        key, dtype = entry.pop("key"), entry.pop("data_type")
        out.append(RegistryEntry(key, dtype, _descriptor_from(entry, f"registry.json: datasets[{i}]")))
    return out


def registry_descriptor(name_or_key: str) -> DatasetDescriptor:
    want = name_or_key.lower()
    for e in registry():
        if e.key.lower() == want or e.descriptor.name == want:
            return e.descriptor
    raise KeyError(name_or_key)


def load_registered(name_or_key: str) -> Dataset:
    return load_csv(registry_descriptor(name_or_key))


def iris() -> Dataset:
    return load_registered("iris")
