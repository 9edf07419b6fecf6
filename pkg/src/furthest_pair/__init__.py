"""Exact and greedy diameter (furthest pair) algorithms for point sets in R^d."""

from .algorithms import (AlgoConfig, Algorithm, DiameterResult, beam_search, brute_force,
                         hill_climbing, minmax_norms, resolve_k, run, tabu_search)
from .cost_models import CostInputs, CostMethod, predicted_ops
from .datasets import (DatasetDescriptor, SyntheticSpec, generate_synthetic, iris, load_csv,
                       load_manifest, registry)
from .errors import DiameterError, IoError, ManifestError, ParseError, ValidationError
from .experiment import CostModelRow, ExperimentRecord, compare_cost_models, run_experiment
from .geometry import Dataset, distance, l2_norm, min_shift, squared_distance
from .metrics import accuracy, assumed_accuracy, efficiency
from .report import ReportFormat, render_report
from .rng import RandomSource

__version__ = "0.1.0"

__all__ = [
    "AlgoConfig", "Algorithm", "CostInputs", "CostMethod", "CostModelRow", "Dataset",
    "DatasetDescriptor", "DiameterError", "DiameterResult", "ExperimentRecord", "IoError",
    "ManifestError", "ParseError", "RandomSource", "ReportFormat", "SyntheticSpec",
    "ValidationError", "accuracy", "assumed_accuracy", "beam_search", "brute_force",
    "compare_cost_models", "distance", "efficiency", "generate_synthetic", "hill_climbing",
    "iris", "l2_norm", "load_csv", "load_manifest", "min_shift", "minmax_norms",
    "predicted_ops", "registry", "render_report", "resolve_k", "run", "run_experiment",
    "squared_distance", "tabu_search",
]
