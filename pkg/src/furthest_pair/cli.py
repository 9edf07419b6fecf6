"""Command-line entry point: ``furthest-pair {diameter,bench,compare,gen}``.

Exit status is 0 on success, 1 for bad input (arguments, files, data) and 2
for anything unexpected.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import algorithms as algos
from .algorithms import AlgoConfig, Algorithm
from .datasets import (DatasetDescriptor, Distribution, SyntheticSpec, generate_synthetic,
                       load_csv, load_manifest)
from .errors import DiameterError
from .experiment import compare_cost_models, run_experiment
from .report import ReportFormat, render_report
from .rng import DEFAULT_SEED

EXIT_OK, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2

_DISTS = {"uniform": Distribution.UNIFORM_REAL, "int": Distribution.UNIFORM_INTEGER,
          "bernoulli": Distribution.BERNOULLI}


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(f"{self.prog}: error: {message}")


def _k(text):
    if text == "auto":
        return "auto"
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer or 'auto', got {text!r}") from None


def _add_algo_options(p):
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--k", type=_k, default="auto", help="norm candidates for A1 (integer or auto)")
    p.add_argument("--beam-width", type=int, default=20)
    p.add_argument("--tie-tolerance", type=float, default=0.0)


def _config(args) -> AlgoConfig:
    return AlgoConfig(k=args.k, beam_width=args.beam_width, tie_tolerance=args.tie_tolerance,
                      seed=args.seed)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="furthest-pair", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("diameter", help="diameter of one CSV file")
    p.add_argument("file")
    p.add_argument("--algorithm", default="bf", choices=sorted(algos.ALIASES))
    _add_algo_options(p)
    p.add_argument("--label-cols", type=int, nargs="*", default=[],
                   help="0-based columns to drop before computing distances")
    p.add_argument("--header", action="store_true", help="first line is a header")
    p.add_argument("--delimiter", default=",")
    p.add_argument("--json", action="store_true", help="print the result as JSON")

    p = sub.add_parser("bench", help="run algorithms over every dataset in a manifest")
    p.add_argument("--manifest", required=True)
    p.add_argument("--repeats", type=int, default=30)
    _add_algo_options(p)
    p.add_argument("--algorithms", nargs="+", default=["bf", "norms", "hc", "tabu", "beam"],
                   choices=sorted(algos.ALIASES))
    p.add_argument("--out", default="-", help="output file ('-' for stdout)")
    p.add_argument("--format", default="table", choices=[f.value for f in ReportFormat])
    p.add_argument("--basis", default="ops", choices=["time", "ops"])
    p.add_argument("--no-timing", action="store_true",
                   help="skip wall-clock measurement (reports become byte-reproducible)")
    p.add_argument("--epsilon", type=float, default=None,
                   help="also score the M1-M8 cost models at this epsilon")

    p = sub.add_parser("compare", help="operation counts of M1-M8, BF and A1 (plus A2-A4 with --observe)")
    p.add_argument("--manifest", required=True)
    p.add_argument("--epsilon", type=float, default=0.5)
    p.add_argument("--observe", action="store_true",
                   help="load the data and run BF and A2-A4 once for iterations and accuracy")
    _add_algo_options(p)
    p.add_argument("--out", default="-")
    p.add_argument("--format", default="table", choices=[f.value for f in ReportFormat])

    p = sub.add_parser("gen", help="write a seeded synthetic dataset as CSV")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--dist", default="uniform", choices=sorted(_DISTS))
    p.add_argument("--low", type=float, default=0.0)
    p.add_argument("--high", type=float, default=1.0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)
    return parser


def _emit(text, out):
    if out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _cmd_diameter(args):
    desc = DatasetDescriptor(name=Path(args.file).stem, path=args.file,
                             label_columns=tuple(args.label_cols), delimiter=args.delimiter,
                             has_header=args.header)
    ds = load_csv(desc, base_dir=Path.cwd())
    res = algos.run(args.algorithm, ds, _config(args))
    if args.json:
        print(json.dumps({"dataset": ds.name, "n": ds.n, "d": ds.d,
                          "algorithm": res.algorithm.value, "value": res.value,
                          "pair": list(res.pair), "iterations": res.iterations,
                          "distance_evals": res.distance_evals, "seed": res.seed}))
    else:
        print(f"{ds.name}: n={ds.n} d={ds.d} algorithm={res.algorithm.value}")
        print(f"diameter   {res.value!r}")
        print(f"pair       {res.pair[0]} {res.pair[1]}")
        print(f"iterations {res.iterations}")
        print(f"distances  {res.distance_evals}")
        if res.seed is not None:
            print(f"seed       {res.seed}")


def _cmd_bench(args):
    if args.no_timing and args.basis == "time":
        raise _UsageError("bench: --no-timing cannot be combined with --basis time")
    base = Path(args.manifest).parent
    cfg = _config(args)
    records = []
    for desc in load_manifest(args.manifest):
        ds = load_csv(desc, base_dir=base)
        records.append(run_experiment(ds, cfg, args.algorithms, args.repeats,
                                      timing=not args.no_timing))
    rows = []
    if args.epsilon is not None:
        rows = compare_cost_models([(r.dataset, r.n, r.d) for r in records], args.epsilon)
        rows = [r for r in rows if r.method.startswith("M")]
    _emit(render_report(records, rows, args.format, args.basis), args.out)


def _cmd_compare(args):
    base = Path(args.manifest).parent
    dims, observed, records = [], {}, []
    for desc in load_manifest(args.manifest):
        if args.observe or desc.expected_n is None or desc.expected_d is None:
            ds = load_csv(desc, base_dir=base)
            n, d = ds.n, ds.d
        else:
            ds, n, d = None, desc.expected_n, desc.expected_d
        dims.append((desc.name, n, d))
        if args.observe:
            rec = run_experiment(ds, _config(args), ["bf", "norms", "hc", "tabu", "beam"], 1,
                                 timing=False)
            records.append(rec)
            observed[desc.name] = {a: rec.per_algorithm[a][0].iterations
                                   for a in (Algorithm.A2, Algorithm.A3, Algorithm.A4)}
    rows = compare_cost_models(dims, args.epsilon, observed or None)
    _emit(render_report(records, rows, args.format, "ops"), args.out)


def _cmd_gen(args):
    spec = SyntheticSpec(n=args.n, d=args.d, low=args.low, high=args.high,
                         distribution=_DISTS[args.dist], seed=args.seed)
    ds = generate_synthetic(spec)
    fmt = "%d" if spec.distribution is not Distribution.UNIFORM_REAL else "%.17g"
    np.savetxt(args.out, ds.points, delimiter=",", fmt=fmt)


COMMANDS = {"diameter": _cmd_diameter, "bench": _cmd_bench, "compare": _cmd_compare,
            "gen": _cmd_gen}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        COMMANDS[args.command](args)
    except _UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_INPUT
    except (DiameterError, OSError) as exc:
        print(f"furthest-pair: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except Exception as exc:  # noqa: BLE001 - last-resort exit code
        print(f"furthest-pair: internal error: {exc!r}", file=sys.stderr)
        return EXIT_INTERNAL
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
