"""JSON-ready report dictionaries.

Exact engine values (rationals) become fraction strings; integers stay JSON
integers; floats appear only for energy, exponents, residuals, epsilons and
timings.  Every report carries ``schema_version``.
"""

from __future__ import annotations

from .adaptability import AdaptabilityReport
from .counting import DotPair, IncidenceProfile, PairClassification
from .experiments import SCHEMA_VERSION, ExperimentReport
from .geometry import format_rational
from .incidence import CapacityReport, DyadicCheck, DyadicStats


def count_report(n: int, d: DotPair, method: str, triples: int, incidences: int,
                 elapsed_ms: float, ab: PairClassification | None = None) -> dict:
    out = {
        "schema_version": SCHEMA_VERSION,
        "n": n,
        "alpha": format_rational(d.alpha),
        "beta": format_rational(d.beta),
        "method": method,
        "triples": triples,
        "incidences": incidences,
        "elapsed_ms": elapsed_ms,
    }
    if ab is not None:
        out.update(
            a_pairs=ab.a_pairs,
            b_pairs=ab.b_pairs,
            triples_from_a=ab.triples_from_a,
            triples_from_b=ab.triples_from_b,
            per_radial_b=[
                {"dx": k.dx, "dy": k.dy, "triples": v}
                for k, v in sorted(ab.per_radial_b.items())
            ],
        )
    return out


def incidence_report(d: DotPair, profile: IncidenceProfile,
                     stats: DyadicStats | None = None,
                     check: DyadicCheck | None = None,
                     capacity: CapacityReport | None = None) -> dict:
    out = {
        "schema_version": SCHEMA_VERSION,
        "n": profile.n,
        "alpha": format_rational(d.alpha),
        "beta": format_rational(d.beta),
        "incidences": profile.total_incidences,
        "triples": profile.total_triples,
    }
    if stats is not None:
        out["dyadic"] = {
            "buckets": stats.as_rows(),
            "j_max": stats.j_max,
            "k_max": stats.k_max,
            "index_bound": stats.index_bound,
            "index_bound_source": "epsilon" if stats.index_bound is not None else "data",
        }
    if check is not None:
        out["dyadic_check"] = {
            "incidences_lower": check.incidences_lower,
            "incidences": check.incidences,
            "triples_lower": check.triples_lower,
            "triples": check.triples,
            "passed": check.passed,
        }
    if capacity is not None:
        out["capacity"] = {
            "epsilon_sq": format_rational(capacity.epsilon_sq),
            "capacity": capacity.capacity,
            "max_alpha": capacity.max_alpha,
            "max_beta": capacity.max_beta,
            "passed": capacity.passed,
        }
    return out


def adaptability_report(r: AdaptabilityReport) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "n": r.n,
        "s": format_rational(r.s),
        "min_sq_separation": format_rational(r.min_sq_separation),
        "energy": r.energy,
        "separation_pass": r.separation_pass,
        "energy_pass": r.energy_pass,
        "threshold_used": r.threshold_used,
        "s_in_range": r.s_in_range,
    }


def experiment_report(r: ExperimentReport, include_timing: bool = True) -> dict:
    family = r.family.to_json()
    family["n"] = None
    rows = []
    for row in r.rows:
        item = {
            "n": row.n,
            "epsilon": row.epsilon,
            "triples": row.triples,
            "incidences": row.incidences,
        }
        if include_timing:
            item["elapsed_ms"] = row.elapsed_ms
        rows.append(item)
    return {
        "schema_version": SCHEMA_VERSION,
        "family": family,
        "alpha": format_rational(r.dots.alpha),
        "beta": format_rational(r.dots.beta),
        "rows": rows,
        "fitted_exponent": r.fitted_exponent,
        "fit_residual": r.fit_residual,
        "incidence_exponent": r.incidence_exponent,
        "constants": r.constants,
        "constant_trend": r.constant_trend,
        "bound_checks": [
            {"name": c.name, "n": c.n, "passed": c.passed, "asserted": c.asserted,
             "value": c.value, "limit": c.limit}
            for c in r.bound_checks
        ],
        "warnings": list(r.warnings),
    }


def experiment_csv(r: ExperimentReport) -> str:
    lines = ["n,epsilon,triples,incidences,elapsed_ms"]
    for row in r.rows:
        eps = "" if row.epsilon is None else repr(row.epsilon)
        lines.append(f"{row.n},{eps},{row.triples},{row.incidences},{row.elapsed_ms:.3f}")
    return "\n".join(lines) + "\n"
