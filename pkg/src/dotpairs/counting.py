"""Three independent ways to count dot-product triples.

``count_bruteforce`` enumerates ordered triples, ``incidence_profile`` sums
``|L_alpha(p)| * |L_beta(p)|`` over points, and ``count_via_ab`` splits the
ordered pairs ``(q, r)`` into the classes A and B used in the quadratic upper
bound and counts the apex points of each pair.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, NamedTuple, Tuple

from . import kernels
from .geometry import PointSet, RadialDirection, lines_coincide, radial_direction


class DotPair(NamedTuple):
    alpha: Fraction
    beta: Fraction

    @classmethod
    def of(cls, alpha, beta) -> "DotPair":
        from .geometry import parse_rational
        return cls(parse_rational(alpha), parse_rational(beta))

    def nonzero(self) -> bool:
        return self.alpha != 0 and self.beta != 0


class HypothesisError(ValueError):
    """Raised when an input violates the nonzero-target / no-origin premise."""


class BoundViolation(AssertionError):
    """A proof-derived bound failed on a concrete input."""


@dataclass(frozen=True)
class IncidenceProfile:
    per_point: Tuple[Tuple[int, int, int], ...]
    total_incidences: int
    total_triples: int

    @property
    def n(self) -> int:
        return len(self.per_point)

    def counts_alpha(self):
        return [a for _, a, _ in self.per_point]

    def counts_beta(self):
        return [b for _, _, b in self.per_point]


@dataclass
class PairClassification:
    a_pairs: int = 0
    b_pairs: int = 0
    triples_from_a: int = 0
    triples_from_b: int = 0
    per_radial_b: Dict[RadialDirection, int] = field(default_factory=dict)

    @property
    def total_triples(self) -> int:
        return self.triples_from_a + self.triples_from_b


def _targets(P: PointSet, d: DotPair):
    c = P.coords
    return c, c.target(d.alpha), c.target(d.beta)


def count_bruteforce(P: PointSet, d: DotPair) -> int:
    """|{(p, q, r) in P^3 : p.q = alpha and p.r = beta}| by enumeration."""
    if len(P) == 0:
        return 0
    c, ta, tb = _targets(P, d)
    return kernels.brute_triples(c, ta, tb)


def incidence_profile(P: PointSet, d: DotPair) -> IncidenceProfile:
    if len(P) == 0:
        return IncidenceProfile((), 0, 0)
    c, ta, tb = _targets(P, d)
    ca, cb = kernels.profile_counts(c, ta, tb)
    per_point = tuple((i, a, b) for i, (a, b) in enumerate(zip(ca, cb)))
    return IncidenceProfile(
        per_point=per_point,
        total_incidences=sum(ca) + sum(cb),
        total_triples=sum(a * b for a, b in zip(ca, cb)),
    )


def _require_hypotheses(P: PointSet, d: DotPair) -> None:
    if not d.nonzero() or P.has_origin():
        raise HypothesisError(
            "A/B decomposition requires nonzero targets and no point at the origin")


def _line_key(x: int, y: int, t: Fraction):
    # Proportionality class of (x, y, t); t != 0 so dividing by it is safe.
    return (Fraction(x) / t, Fraction(y) / t)


def count_via_ab(P: PointSet, d: DotPair) -> PairClassification:
    """Classify every ordered pair (q, r) into A or B and attribute triples.

    For (q, r) the contributing points p are ``L_alpha(q) & L_beta(r)``.
    In A those two lines differ, so they meet in at most one point, found by
    Cramer's rule and looked up in a hash index of P.  In B the pair shares a
    line; when the shared line is ``L_alpha(q) = L_beta(r)`` every point of P
    on it contributes.
    """
    _require_hypotheses(P, d)
    n = len(P)
    c = P.coords
    xs, ys = c.xs, c.ys
    ta = Fraction(d.alpha) * c.scale * c.scale
    tb = Fraction(d.beta) * c.scale * c.scale
    ta_int = ta.numerator if ta.denominator == 1 else None
    tb_int = tb.numerator if tb.denominator == 1 else None

    # alpha-line of i equals beta-line of j  <=>  (x_i, y_i)/ta == (x_j, y_j)/tb
    by_alpha = {_line_key(xs[i], ys[i], ta): i for i in range(n)}
    by_beta = {_line_key(xs[i], ys[i], tb): i for i in range(n)}
    shared_ab = {}  # q -> r with L_alpha(q) == L_beta(r)
    for q in range(n):
        r = by_beta.get(_line_key(xs[q], ys[q], ta))
        if r is not None:
            shared_ab[q] = r
    shared_ba = {}  # q -> r with L_beta(q) == L_alpha(r)
    for q in range(n):
        r = by_alpha.get(_line_key(xs[q], ys[q], tb))
        if r is not None:
            shared_ba[q] = r

    index = {(xs[i], ys[i]): i for i in range(n)}
    out = PairClassification()
    per_radial = defaultdict(int)
    for q in range(n):
        xq, yq = xs[q], ys[q]
        r_ab = shared_ab.get(q)
        r_ba = shared_ba.get(q)
        for r in range(n):
            xr, yr = xs[r], ys[r]
            if r == r_ab or r == r_ba:
                qp, rp = P[q], P[r]
                assert (lines_coincide(qp, d.alpha, rp, d.beta)
                        or lines_coincide(rp, d.alpha, qp, d.beta))
                if r == r_ab:
                    got = 0 if ta_int is None else sum(
                        1 for k in range(n) if xq * xs[k] + yq * ys[k] == ta_int)
                else:
                    # L_beta(q) == L_alpha(r) forces q, r onto one radial line,
                    # so L_alpha(q) and L_beta(r) are parallel and distinct.
                    got = 0
                out.b_pairs += 1
                out.triples_from_b += got
                per_radial[radial_direction(qp)] += got
                continue
            out.a_pairs += 1
            if ta_int is None or tb_int is None:
                continue
            det = xq * yr - yq * xr
            if det == 0:
                continue
            zx = ta_int * yr - yq * tb_int
            zy = xq * tb_int - ta_int * xr
            if zx % det or zy % det:
                continue
            hit = index.get((zx // det, zy // det))
            if hit is not None:
                out.triples_from_a += 1
    for direction, triples in per_radial.items():
        if triples > n:
            raise BoundViolation(
                f"radial line {tuple(direction)} carries {triples} B-triples > n={n}")
    if out.triples_from_a > 4 * out.a_pairs:
        raise BoundViolation("A-pairs contributed more than four triples each")
    out.per_radial_b = dict(per_radial)
    return out


@dataclass(frozen=True)
class GeneralBoundReport:
    n: int
    triples: int
    a_pairs: int
    b_pairs: int
    bound: int
    ratio: Fraction
    passed: bool


def verify_general_bound(P: PointSet, d: DotPair) -> GeneralBoundReport:
    """Check Pi <= 4*|A| + n**2 <= 5*n**2 using the pair decomposition."""
    cls = count_via_ab(P, d)
    n = len(P)
    bound = 4 * cls.a_pairs + n * n
    triples = cls.total_triples
    return GeneralBoundReport(
        n=n,
        triples=triples,
        a_pairs=cls.a_pairs,
        b_pairs=cls.b_pairs,
        bound=bound,
        ratio=Fraction(triples, n * n) if n else Fraction(0),
        passed=triples <= bound <= 5 * n * n,
    )
