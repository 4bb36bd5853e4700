"""Separation and Riesz-energy diagnostics for s-adaptable point sets."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import kernels
from .constructions import reaches_separation_sq
from .geometry import PointSet, parse_rational

DEFAULT_ENERGY_THRESHOLD = 100.0
S_RANGE = (Fraction(3, 2), Fraction(2))


def min_separation_sq(P: PointSet) -> Fraction:
    return min_separation_pair(P)[0]


def min_separation_pair(P: PointSet):
    """``(min squared distance, i, j)`` over distinct pairs, exact."""
    if len(P) < 2:
        raise ValueError("separation needs at least two points")
    c = P.coords
    S, i, j = kernels.min_sep_sq(c)
    return Fraction(S, c.scale * c.scale), i, j


def riesz_energy(P: PointSet, s) -> float:
    """``(1 / C(n, 2)) * sum over ordered p != q of |p - q|**(-s)``.

    The ordered sum counts each unordered pair twice, so two points at
    distance 1 give 2.0.  Row sums are compensated and combined with
    ``math.fsum``; the result is reproducible to well under 1e-10 relative.
    """
    s = parse_rational(s)
    n = len(P)
    if n < 2:
        raise ValueError("energy needs at least two points")
    if s <= 0:
        raise ValueError("energy exponent s must be positive")
    rows = kernels.energy_row_sums(P.coords, s / 2)
    total = math.fsum(rows)
    if math.isinf(total):
        raise ValueError("energy diverges: coincident points")
    return total * 2.0 / (n * (n - 1))


@dataclass(frozen=True)
class AdaptabilityReport:
    n: int
    s: Fraction
    min_sq_separation: Fraction
    energy: float
    separation_pass: bool
    energy_pass: bool
    threshold_used: float
    s_in_range: bool

    @property
    def passed(self) -> bool:
        return self.separation_pass and self.energy_pass


def is_s_adaptable(P: PointSet, s, energy_threshold: float = DEFAULT_ENERGY_THRESHOLD
                   ) -> AdaptabilityReport:
    s = parse_rational(s)
    if s <= 0:
        raise ValueError("s must be positive")
    n = len(P)
    sep = min_separation_sq(P)
    energy = riesz_energy(P, s)
    return AdaptabilityReport(
        n=n,
        s=s,
        min_sq_separation=sep,
        energy=energy,
        separation_pass=reaches_separation_sq(sep, n, s),
        energy_pass=energy <= energy_threshold,
        threshold_used=float(energy_threshold),
        s_in_range=S_RANGE[0] < s <= S_RANGE[1],
    )
