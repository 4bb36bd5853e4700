"""Exact planar geometry: rationals, points, canonical lines, radial directions.

Every quantity is a :class:`fractions.Fraction`; nothing in this module rounds.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import cached_property
from typing import Iterable, NamedTuple, Optional

Rational = Fraction

_INT_RE = re.compile(r"[+-]?\d+")
_FRAC_RE = re.compile(r"[+-]?\d+/\d+")
_DEC_RE = re.compile(r"[+-]?(\d+\.\d*|\.\d+)")


def parse_rational(text) -> Fraction:
    """Parse ``int``, ``num/den`` or a decimal literal into an exact Fraction.

    Decimal literals keep their power-of-ten denominator, so ``"0.1"`` is
    exactly ``1/10``.  Ints and Fractions pass through unchanged.
    """
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)
    if not isinstance(text, str):
        raise ValueError(f"cannot parse {text!r} as a rational")
    s = text.strip()
    if _INT_RE.fullmatch(s) or _DEC_RE.fullmatch(s):
        return Fraction(s)
    if _FRAC_RE.fullmatch(s):
        num, den = s.split("/")
        if int(den) == 0:
            raise ValueError(f"zero denominator in {text!r}")
        return Fraction(int(num), int(den))
    raise ValueError(f"malformed rational {text!r}")


def format_rational(q: Fraction) -> str:
    """Exact string form: ``"3"`` or ``"7/2"``."""
    return str(Fraction(q))


class Point(NamedTuple):
    x: Fraction
    y: Fraction

    @classmethod
    def of(cls, x, y) -> "Point":
        return cls(parse_rational(x), parse_rational(y))

    def is_origin(self) -> bool:
        return self.x == 0 and self.y == 0

    def scaled(self, t) -> "Point":
        return Point(self.x * t, self.y * t)

    def __str__(self) -> str:
        return f"({self.x}, {self.y})"


class CanonicalLine(NamedTuple):
    """The line ``a*x + b*y = c`` with integer, gcd-reduced, sign-normalized
    coefficients; equal tuples describe the same locus."""

    a: int
    b: int
    c: int


class RadialDirection(NamedTuple):
    dx: int
    dy: int


def _lcm(*values: int) -> int:
    out = 1
    for v in values:
        out = out * v // math.gcd(out, v)
    return out


def canonical_line(a, b, c) -> CanonicalLine:
    """Normalize the rational line ``a*x + b*y = c``."""
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    if a == 0 and b == 0:
        raise ValueError("degenerate line: a = b = 0")
    m = _lcm(a.denominator, b.denominator, c.denominator)
    ia, ib, ic = int(a * m), int(b * m), int(c * m)
    g = math.gcd(math.gcd(ia, ib), ic)
    ia, ib, ic = ia // g, ib // g, ic // g
    if ia < 0 or (ia == 0 and ib < 0):
        ia, ib, ic = -ia, -ib, -ic
    return CanonicalLine(ia, ib, ic)


def dot(p: Point, q: Point) -> Fraction:
    return p.x * q.x + p.y * q.y


def squared_distance(p: Point, q: Point) -> Fraction:
    dx = p.x - q.x
    dy = p.y - q.y
    return dx * dx + dy * dy


def alpha_line(p: Point, alpha) -> Optional[CanonicalLine]:
    """Line of points ``z`` with ``dot(p, z) == alpha``; None for the origin."""
    if p.is_origin():
        return None
    return canonical_line(p.x, p.y, alpha)


def radial_direction(p: Point) -> RadialDirection:
    if p.is_origin():
        raise ValueError("no radial line for the origin")
    m = _lcm(p.x.denominator, p.y.denominator)
    dx, dy = int(p.x * m), int(p.y * m)
    g = math.gcd(dx, dy)
    dx, dy = dx // g, dy // g
    if dx < 0 or (dx == 0 and dy < 0):
        dx, dy = -dx, -dy
    return RadialDirection(dx, dy)


def lines_coincide(q: Point, alpha, r: Point, beta) -> bool:
    """True iff the alpha-line of ``q`` is the beta-line of ``r``.

    The two loci are equal exactly when ``(q.x, q.y, alpha)`` and
    ``(r.x, r.y, beta)`` are proportional, i.e. ``beta*q == alpha*r``.
    """
    alpha, beta = Fraction(alpha), Fraction(beta)
    if alpha == 0 or beta == 0 or q.is_origin() or r.is_origin():
        raise ValueError(
            "coincidence predicate requires nonzero targets and non-origin points")
    return beta * q.x == alpha * r.x and beta * q.y == alpha * r.y


class ScaledCoords(NamedTuple):
    """Points written as ``(X[i]/scale, Y[i]/scale)`` with integer X, Y."""

    scale: int
    xs: tuple
    ys: tuple

    def target(self, value) -> Optional[int]:
        """``value * scale**2`` when integral, else None.

        Every dot product of two stored points is an integer over
        ``scale**2``, so a non-integral target is never realized.
        """
        t = Fraction(value) * self.scale * self.scale
        return t.numerator if t.denominator == 1 else None

    def max_abs(self) -> int:
        return max((abs(v) for v in self.xs + self.ys), default=0)


class PointSet:
    """Duplicate-free, insertion-ordered collection of exact points."""

    def __init__(self, points: Iterable = (), provenance: str = ""):
        pts = []
        index = {}
        for i, raw in enumerate(points):
            p = raw if isinstance(raw, Point) else Point.of(*raw)
            if p in index:
                raise ValueError(
                    f"duplicate point {p} at positions {index[p]} and {i}")
            index[p] = i
            pts.append(p)
        self._points = tuple(pts)
        self._index = index
        self.provenance = provenance

    @property
    def points(self) -> tuple:
        return self._points

    def __len__(self) -> int:
        return len(self._points)

    def __iter__(self):
        return iter(self._points)

    def __getitem__(self, i) -> Point:
        return self._points[i]

    def __contains__(self, p) -> bool:
        return p in self._index

    def __eq__(self, other) -> bool:
        if not isinstance(other, PointSet):
            return NotImplemented
        return self._points == other._points

    def __repr__(self) -> str:
        return f"PointSet(n={len(self)}, provenance={self.provenance!r})"

    def index_of(self, p: Point) -> Optional[int]:
        return self._index.get(p)

    def has_origin(self) -> bool:
        return any(p.is_origin() for p in self._points)

    def in_unit_square(self) -> bool:
        return all(0 <= p.x <= 1 and 0 <= p.y <= 1 for p in self._points)

    def scaled(self, t) -> "PointSet":
        t = Fraction(t)
        return PointSet((p.scaled(t) for p in self._points),
                        provenance=f"{self.provenance} scaled by {t}")

    @cached_property
    def coords(self) -> ScaledCoords:
        scale = _lcm(*(v.denominator for p in self._points for v in p))
        xs = tuple(int(p.x * scale) for p in self._points)
        ys = tuple(int(p.y * scale) for p in self._points)
        return ScaledCoords(scale, xs, ys)
