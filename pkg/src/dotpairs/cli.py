"""Command-line interface.

Exit codes: 0 success, 1 a proof-derived bound failed, 2 input or parameter
error.  Reports go to standard output unless ``--out`` is given.
"""

from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from . import kernels
from .adaptability import DEFAULT_ENERGY_THRESHOLD, is_s_adaptable
from .constructions import KINDS, ConstructionSpec, ParameterError, check_spec, generate
from .counting import (BoundViolation, DotPair, HypothesisError, count_bruteforce,
                       count_via_ab, incidence_profile)
from .experiments import BRUTE_FORCE_LIMIT, run_scaling, run_separation_experiment
from .fileio import PointFileError, dumps, format_points, read_points
from .geometry import parse_rational
from .incidence import (SeparationError, check_dyadic_identities, check_line_capacity,
                        dyadic_decompose)
from . import reports

EXIT_OK, EXIT_BOUND, EXIT_INPUT = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def rational(text):
    return parse_rational(text)


def n_list(text):
    try:
        values = [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not values:
        raise argparse.ArgumentTypeError("empty n list")
    return values


def positive_int(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


@dataclass
class CliConfig:
    subcommand: str
    points: Optional[Path] = None
    out: Optional[Path] = None
    dots: Optional[DotPair] = None
    method: Optional[str] = None
    seed: int = 0
    fmt: str = "json"
    threads: Optional[int] = None
    options: dict = field(default_factory=dict)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--out", type=Path, help="write the report here instead of stdout")
    common.add_argument("--threads", type=positive_int, help="cap on worker threads")

    parser = _Parser(prog="dotpairs", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)

    g = sub.add_parser("generate", parents=[common], help="write a construction as CSV")
    g.add_argument("--kind", choices=KINDS, required=True)
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--alpha", type=rational)
    g.add_argument("--beta", type=rational)
    g.add_argument("--s", type=rational)
    g.add_argument("--seed", type=int, default=0)

    c = sub.add_parser("count", parents=[common], help="count dot-product triples")
    c.add_argument("--points", type=Path, required=True)
    c.add_argument("--alpha", type=rational, required=True)
    c.add_argument("--beta", type=rational, required=True)
    c.add_argument("--method", choices=("brute", "quadratic", "ab"), default="quadratic")

    i = sub.add_parser("incidence", parents=[common], help="incidence statistics")
    i.add_argument("--points", type=Path, required=True)
    i.add_argument("--alpha", type=rational, required=True)
    i.add_argument("--beta", type=rational, required=True)
    i.add_argument("--dyadic", action="store_true")
    i.add_argument("--capacity", action="store_true")
    i.add_argument("--epsilon", type=rational)

    a = sub.add_parser("adaptability", parents=[common], help="s-adaptability diagnostics")
    a.add_argument("--points", type=Path, required=True)
    a.add_argument("--s", type=rational, required=True)
    a.add_argument("--threshold", type=float, default=DEFAULT_ENERGY_THRESHOLD)

    e = sub.add_parser("experiment", parents=[common], help="scaling experiments")
    e.add_argument("--family", choices=KINDS)
    e.add_argument("--separation", action="store_true",
                   help="perturbed grids with eps = n^(-1/s)")
    e.add_argument("--n-list", type=n_list, required=True)
    e.add_argument("--alpha", type=rational, required=True)
    e.add_argument("--beta", type=rational, required=True)
    e.add_argument("--s", type=rational)
    e.add_argument("--seed", type=int, default=0)
    e.add_argument("--brute-limit", type=int, default=BRUTE_FORCE_LIMIT)
    e.add_argument("--csv", action="store_true", help="emit rows as CSV")
    return parser


def parse_args(argv) -> CliConfig:
    ns = build_parser().parse_args(argv)
    cfg = CliConfig(subcommand=ns.subcommand, out=ns.out, threads=ns.threads)
    cfg.points = getattr(ns, "points", None)
    cfg.seed = getattr(ns, "seed", 0)
    if getattr(ns, "alpha", None) is not None and getattr(ns, "beta", None) is not None:
        cfg.dots = DotPair(ns.alpha, ns.beta)
    if ns.subcommand == "generate":
        spec = ConstructionSpec(ns.kind, ns.n, ns.alpha, ns.beta, ns.s, ns.seed)
        try:
            check_spec(spec)
        except ParameterError as exc:
            raise UsageError(f"generate: {exc}") from None
        cfg.options["spec"] = spec
        cfg.fmt = "csv"
    elif ns.subcommand == "count":
        cfg.method = ns.method
    elif ns.subcommand == "incidence":
        if ns.epsilon is not None and not ns.capacity:
            raise UsageError("incidence: --epsilon only applies together with --capacity")
        if ns.capacity and ns.epsilon is None:
            raise UsageError("incidence: --capacity requires --epsilon")
        if ns.epsilon is not None and ns.epsilon <= 0:
            raise UsageError("incidence: --epsilon must be positive")
        cfg.options.update(dyadic=ns.dyadic, capacity=ns.capacity, epsilon=ns.epsilon)
    elif ns.subcommand == "adaptability":
        cfg.options.update(s=ns.s, threshold=ns.threshold)
    elif ns.subcommand == "experiment":
        if ns.separation == (ns.family is not None):
            raise UsageError("experiment: give exactly one of --family or --separation")
        if ns.separation and ns.s is None:
            raise UsageError("experiment: --separation requires --s")
        if len(ns.n_list) < 3:
            raise UsageError("experiment: --n-list needs at least three values")
        cfg.fmt = "csv" if ns.csv else "json"
        cfg.options.update(family=ns.family, separation=ns.separation, n_list=ns.n_list,
                           s=ns.s, brute_limit=ns.brute_limit)
    return cfg


def _emit(text: str, out: Optional[Path]) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text, encoding="utf-8")


def _run_generate(cfg: CliConfig) -> int:
    spec = cfg.options["spec"]
    P = generate(spec)
    _emit(format_points(P), cfg.out)
    if cfg.out is not None:
        sidecar = cfg.out.with_name(cfg.out.name + ".json")
        sidecar.write_text(dumps({"schema_version": 1, "construction": spec.to_json()}),
                           encoding="utf-8")
    return EXIT_OK


def _run_count(cfg: CliConfig) -> int:
    P = read_points(cfg.points)
    d = cfg.dots
    t0 = time.perf_counter()
    ab = None
    status = EXIT_OK
    if cfg.method == "brute":
        triples = count_bruteforce(P, d)
        incidences = incidence_profile(P, d).total_incidences
    elif cfg.method == "quadratic":
        prof = incidence_profile(P, d)
        triples, incidences = prof.total_triples, prof.total_incidences
    else:
        try:
            ab = count_via_ab(P, d)
        except BoundViolation as exc:
            print(f"bound violated: {exc}", file=sys.stderr)
            return EXIT_BOUND
        triples = ab.total_triples
        incidences = incidence_profile(P, d).total_incidences
        n = len(P)
        if triples > 4 * ab.a_pairs + n * n:
            print("bound violated: triples exceed 4|A| + n^2", file=sys.stderr)
            status = EXIT_BOUND
    ms = (time.perf_counter() - t0) * 1000.0
    _emit(dumps(reports.count_report(len(P), d, cfg.method, triples, incidences, ms, ab)),
          cfg.out)
    return status


def _run_incidence(cfg: CliConfig) -> int:
    P = read_points(cfg.points)
    d = cfg.dots
    opts = cfg.options
    prof = incidence_profile(P, d)
    eps_sq = None if opts["epsilon"] is None else opts["epsilon"] ** 2
    stats = check = cap = None
    if opts["dyadic"]:
        stats = dyadic_decompose(prof, eps_sq)
        check = check_dyadic_identities(stats, prof)
    if opts["capacity"]:
        cap = check_line_capacity(P, d, eps_sq)
    _emit(dumps(reports.incidence_report(d, prof, stats, check, cap)), cfg.out)
    failed = (check is not None and not check.passed) or (cap is not None and not cap.passed)
    return EXIT_BOUND if failed else EXIT_OK


def _run_adaptability(cfg: CliConfig) -> int:
    P = read_points(cfg.points)
    rep = is_s_adaptable(P, cfg.options["s"], cfg.options["threshold"])
    if not rep.s_in_range:
        print(f"warning: s={rep.s} outside 3/2 < s <= 2", file=sys.stderr)
    _emit(dumps(reports.adaptability_report(rep)), cfg.out)
    return EXIT_OK


def _run_experiment(cfg: CliConfig) -> int:
    opts = cfg.options
    d = cfg.dots
    if opts["separation"]:
        rep = run_separation_experiment(opts["n_list"], opts["s"], d, cfg.seed)
    else:
        family = ConstructionSpec(opts["family"], 0, d.alpha, d.beta, opts["s"], cfg.seed)
        rep = run_scaling(family, opts["n_list"], d, brute_limit=opts["brute_limit"])
    if cfg.fmt == "csv":
        _emit(reports.experiment_csv(rep), cfg.out)
    else:
        _emit(dumps(reports.experiment_report(rep)), cfg.out)
    for w in rep.warnings:
        print(f"warning: {w}", file=sys.stderr)
    failures = rep.asserted_failures()
    for f in failures:
        print(f"bound violated: {f.name} at n={f.n} ({f.value} vs {f.limit})",
              file=sys.stderr)
    return EXIT_BOUND if failures else EXIT_OK


_HANDLERS = {
    "generate": _run_generate,
    "count": _run_count,
    "incidence": _run_incidence,
    "adaptability": _run_adaptability,
    "experiment": _run_experiment,
}


def run(cfg: CliConfig) -> int:
    if cfg.threads is not None:
        kernels.set_threads(cfg.threads)
    try:
        return _HANDLERS[cfg.subcommand](cfg)
    except (PointFileError, ParameterError, HypothesisError, SeparationError,
            ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main(argv=None) -> int:
    try:
        cfg = parse_args(sys.argv[1:] if argv is None else argv)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_INPUT
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
