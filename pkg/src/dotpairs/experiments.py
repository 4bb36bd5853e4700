"""Scaling harness: generate a family over several n, count, fit, check bounds.

Bounds whose constants come out of the counting argument (Pi <= 5 n^2, brute
force agreement, exact separation) are *asserted* entries; bounds hidden
behind an unknown constant only have their implied constant *reported*.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from fractions import Fraction
from statistics import linear_regression
from typing import List, Optional

from .adaptability import min_separation_sq
from .constructions import ConstructionSpec, generate, reaches_separation_sq
from .counting import DotPair, count_bruteforce, incidence_profile
from .fitting import InsufficientData, fit_exponent
from .geometry import parse_rational

SCHEMA_VERSION = 1
BRUTE_FORCE_LIMIT = 200
SEPARATED_KINDS = ("grid", "perturbed-grid")


@dataclass(frozen=True)
class Row:
    n: int
    epsilon: Optional[float]
    triples: int
    incidences: int
    elapsed_ms: float


@dataclass(frozen=True)
class BoundCheck:
    name: str
    n: int
    passed: bool
    asserted: bool
    value: Optional[str] = None
    limit: Optional[str] = None


@dataclass
class ExperimentReport:
    family: ConstructionSpec
    dots: DotPair
    rows: List[Row] = field(default_factory=list)
    fitted_exponent: Optional[float] = None
    fit_residual: Optional[float] = None
    bound_checks: List[BoundCheck] = field(default_factory=list)
    warnings: List[str] = field(default_factory=list)
    incidence_exponent: Optional[float] = None
    constants: List[Optional[float]] = field(default_factory=list)
    constant_trend: Optional[float] = None

    def asserted_failures(self) -> List[BoundCheck]:
        return [c for c in self.bound_checks if c.asserted and not c.passed]


def separation_constant(triples: int, n: int, eps: float) -> Optional[float]:
    """Pi / (n^(4/3) * eps^-1 * log2(eps^-1)); None when log2(1/eps) <= 0."""
    log_term = math.log2(1.0 / eps)
    if log_term <= 0:
        return None
    return triples / (n ** (4.0 / 3.0) / eps * log_term)


def _fit(rows, attr):
    try:
        return fit_exponent([(r.n, getattr(r, attr)) for r in rows])
    except InsufficientData:
        return None, None


def _trend(ns, values) -> Optional[float]:
    pts = [(math.log(n), math.log(v)) for n, v in zip(ns, values) if v]
    if len(pts) < 2:
        return None
    xs, ys = zip(*pts)
    return linear_regression(xs, ys)[0]


def _measure(P, d):
    t0 = time.perf_counter()
    prof = incidence_profile(P, d)
    return prof, (time.perf_counter() - t0) * 1000.0


def run_scaling(family: ConstructionSpec, n_list, d: DotPair,
                brute_limit: int = BRUTE_FORCE_LIMIT) -> ExperimentReport:
    if len(n_list) < 3:
        raise ValueError("a scaling run needs at least three values of n")
    report = ExperimentReport(family=family, dots=d)
    for n in sorted(n_list):
        P = generate(family.with_n(n))
        prof, ms = _measure(P, d)
        eps = None
        if family.kind in SEPARATED_KINDS and n >= 2:
            eps = math.sqrt(min_separation_sq(P))
        report.rows.append(Row(n, eps, prof.total_triples, prof.total_incidences, ms))
        if n <= brute_limit:
            brute = count_bruteforce(P, d)
            report.bound_checks.append(BoundCheck(
                "bruteforce_agreement", n, brute == prof.total_triples, True,
                str(prof.total_triples), str(brute)))
        if d.nonzero() and not P.has_origin():
            report.bound_checks.append(BoundCheck(
                "general_bound_5n2", n, prof.total_triples <= 5 * n * n, True,
                str(prof.total_triples), str(5 * n * n)))
        if eps is not None:
            c = separation_constant(prof.total_triples, n, eps)
            if c is not None:
                report.bound_checks.append(BoundCheck(
                    "separation_bound_constant", n, True, False, f"{c:.3e}"))
    report.fitted_exponent, report.fit_residual = _fit(report.rows, "triples")
    report.incidence_exponent, _ = _fit(report.rows, "incidences")
    return report


def run_separation_experiment(n_list, s, d: DotPair, seed: int) -> ExperimentReport:
    """Perturbed grids with eps = n^(-1/s): exact separation check, Pi, C(n)."""
    s = parse_rational(s)
    family = ConstructionSpec("perturbed-grid", 0, s=s, seed=seed)
    report = ExperimentReport(family=family, dots=d)
    if not (Fraction(3, 2) < s <= 2):
        report.warnings.append(f"s={s} outside the range 3/2 < s <= 2")
    ns = sorted(n_list)
    for n in ns:
        try:
            P = generate(family.with_n(n))
        except ValueError as exc:
            raise ValueError(f"separation experiment at n={n}, s={s}: {exc}") from exc
        prof, ms = _measure(P, d)
        eps = n ** (-1.0 / float(s))
        sep = min_separation_sq(P)
        report.rows.append(Row(n, eps, prof.total_triples, prof.total_incidences, ms))
        report.bound_checks.append(BoundCheck(
            "separation_exact", n, reaches_separation_sq(sep, n, s), True,
            str(sep), f"{n}^(-2/{s})"))
        if d.nonzero():
            report.bound_checks.append(BoundCheck(
                "general_bound_5n2", n, prof.total_triples <= 5 * n * n, True,
                str(prof.total_triples), str(5 * n * n)))
        report.constants.append(separation_constant(prof.total_triples, n, eps))
    report.fitted_exponent, report.fit_residual = _fit(report.rows, "triples")
    report.incidence_exponent, _ = _fit(report.rows, "incidences")
    report.constant_trend = _trend(ns, report.constants)
    return report
