"""Incidence statistics on the 2n alpha-/beta-lines: dyadic buckets, the
bracket inequalities they imply, and the separated-set line capacity."""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Optional, Sequence, Tuple

from .constructions import ConstructionSpec, generate
from .counting import DotPair, IncidenceProfile, incidence_profile
from .fitting import InsufficientData, fit_exponent
from .geometry import PointSet, parse_rational


class SeparationError(ValueError):
    pass


def dyadic_index(count: int) -> int:
    """j with 2**j <= count < 2**(j+1); -1 for a zero count."""
    return count.bit_length() - 1


def _low(j: int) -> int:
    return 0 if j < 0 else 1 << j


@dataclass(frozen=True)
class DyadicStats:
    buckets: Dict[Tuple[int, int], int]
    j_max: int
    k_max: int
    epsilon_sq: Optional[Fraction] = None
    # ceil(log2(1/eps)) when eps is known; otherwise the data-derived maxima stand.
    index_bound: Optional[int] = None

    @property
    def n(self) -> int:
        return sum(self.buckets.values())

    def as_rows(self):
        return [{"j": j, "k": k, "count": c} for (j, k), c in sorted(self.buckets.items())]


def _ceil_log2_inverse(eps_sq: Fraction) -> int:
    # smallest t with 2**t >= 1/eps  <=>  4**t * eps_sq >= 1
    t = 0
    while Fraction(4) ** t * eps_sq < 1:
        t += 1
    if eps_sq > 1:
        while t > -64 and Fraction(4) ** (t - 1) * eps_sq >= 1:
            t -= 1
    return t


def dyadic_decompose(profile: IncidenceProfile, epsilon_sq=None) -> DyadicStats:
    buckets = Counter(
        (dyadic_index(a), dyadic_index(b)) for _, a, b in profile.per_point)
    eps_sq = None if epsilon_sq is None else parse_rational(epsilon_sq)
    return DyadicStats(
        buckets=dict(buckets),
        j_max=max((j for j, _ in buckets), default=-1),
        k_max=max((k for _, k in buckets), default=-1),
        epsilon_sq=eps_sq,
        index_bound=None if eps_sq is None else _ceil_log2_inverse(eps_sq),
    )


@dataclass(frozen=True)
class DyadicCheck:
    incidences_lower: int
    incidences: int
    triples_lower: int
    triples: int
    partition_ok: bool
    incidences_ok: bool
    triples_ok: bool

    @property
    def passed(self) -> bool:
        return self.partition_ok and self.incidences_ok and self.triples_ok


def check_dyadic_identities(stats: DyadicStats, profile: IncidenceProfile) -> DyadicCheck:
    """Bracket the exact totals by their dyadic under-counts.

    Each nonzero count c in bucket j satisfies 2**j <= c < 2**(j+1), so
    ``I_low <= I <= 2*I_low`` and ``Pi_low <= Pi <= 4*Pi_low``, strictly on
    the right whenever the total is positive.  Bucket -1 holds zero counts
    and contributes exactly zero to both sides.
    """
    i_low = sum(c * (_low(j) + _low(k)) for (j, k), c in stats.buckets.items())
    p_low = sum(c * _low(j) * _low(k) for (j, k), c in stats.buckets.items())
    big_i = profile.total_incidences
    big_p = profile.total_triples

    def bracket(low, exact, factor):
        if exact == 0:
            return low == 0
        return low <= exact < factor * low

    return DyadicCheck(
        incidences_lower=i_low,
        incidences=big_i,
        triples_lower=p_low,
        triples=big_p,
        partition_ok=stats.n == profile.n,
        incidences_ok=bracket(i_low, big_i, 2),
        triples_ok=bracket(p_low, big_p, 4),
    )


@dataclass(frozen=True)
class CapacityReport:
    epsilon_sq: Fraction
    capacity: int
    max_alpha: int
    max_beta: int
    passed: bool


def line_capacity(epsilon_sq: Fraction) -> int:
    """floor(sqrt(2)/eps) + 1, computed from eps**2 without roots."""
    return math.isqrt(math.floor(2 / Fraction(epsilon_sq))) + 1


def check_line_capacity(P: PointSet, d: DotPair, epsilon_sq) -> CapacityReport:
    """Every alpha-/beta-line meets at most floor(sqrt(2)/eps) + 1 points.

    The origin's locus is not a line, so its counts are excluded.
    """
    from .adaptability import min_separation_pair

    eps_sq = parse_rational(epsilon_sq)
    if eps_sq <= 0:
        raise ValueError("epsilon must be positive")
    if not P.in_unit_square():
        raise ValueError("line capacity check needs P inside [0,1]^2")
    if len(P) >= 2:
        sep, i, j = min_separation_pair(P)
        if sep < eps_sq:
            raise SeparationError(
                f"separation precondition violated: points {i} {P[i]} and {j} {P[j]} "
                f"are at squared distance {sep} < {eps_sq}")
    profile = incidence_profile(P, d)
    usable = [(a, b) for i, a, b in profile.per_point if not P[i].is_origin()]
    max_a = max((a for a, _ in usable), default=0)
    max_b = max((b for _, b in usable), default=0)
    cap = line_capacity(eps_sq)
    return CapacityReport(eps_sq, cap, max_a, max_b, max_a <= cap and max_b <= cap)


@dataclass(frozen=True)
class ExponentCheck:
    rows: Sequence[Tuple[int, int]]
    slope: Optional[float]
    residual: Optional[float]
    status: str


def incidence_exponent_check(family: ConstructionSpec, n_list, d: DotPair) -> ExponentCheck:
    """Fit the growth exponent of the incidence count I(n) over a family."""
    rows = []
    for n in sorted(n_list):
        P = generate(family.with_n(n))
        rows.append((n, incidence_profile(P, d).total_incidences))
    if all(c == 0 for _, c in rows):
        return ExponentCheck(tuple(rows), None, None, "no incidences")
    try:
        slope, resid = fit_exponent(rows)
    except InsufficientData as exc:
        return ExponentCheck(tuple(rows), None, None, str(exc))
    return ExponentCheck(tuple(rows), slope, resid, "ok")
