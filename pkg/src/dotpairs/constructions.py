"""Point-set generators: the two extremal constructions plus grid, random and
perturbed-grid families.  All outputs lie in the unit square and are pure
functions of their parameters (and seed)."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .geometry import Point, PointSet, format_rational, parse_rational

KINDS = ("sharp", "zero", "grid", "random", "perturbed-grid")

_MASK64 = (1 << 64) - 1


class ParameterError(ValueError):
    pass


class SplitMix64:
    """SplitMix64: state += 0x9E3779B97F4A7C15, then a two-round xor-shift-
    multiply finalizer.  Chosen because it is fully specified by a few lines
    and therefore portable across implementations."""

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)


@dataclass(frozen=True)
class ConstructionSpec:
    kind: str
    n: int
    alpha: Optional[Fraction] = None
    beta: Optional[Fraction] = None
    s: Optional[Fraction] = None
    seed: int = 0

    def with_n(self, n: int) -> "ConstructionSpec":
        return ConstructionSpec(self.kind, n, self.alpha, self.beta, self.s, self.seed)

    def to_json(self) -> dict:
        def q(v):
            return None if v is None else format_rational(v)
        return {"kind": self.kind, "n": self.n, "alpha": q(self.alpha),
                "beta": q(self.beta), "s": q(self.s), "seed": self.seed}

    @classmethod
    def from_json(cls, data: dict) -> "ConstructionSpec":
        def q(v):
            return None if v is None else parse_rational(v)
        return cls(data["kind"], int(data["n"]), q(data.get("alpha")),
                   q(data.get("beta")), q(data.get("s")), int(data.get("seed", 0)))


def _spaced_on_antidiagonal(t: Fraction, m: int):
    """m interior points, equally spaced in x, on y = t - x inside [0,1]^2."""
    lo = max(Fraction(0), t - 1)
    hi = min(Fraction(1), t)
    step = (hi - lo) / (m + 1)
    return [Point(lo + k * step, t - lo - k * step) for k in range(1, m + 1)]


def sharp_set(n: int, alpha, beta) -> PointSet:
    alpha, beta = parse_rational(alpha), parse_rational(beta)
    if n < 3:
        raise ParameterError(f"sharp construction needs n >= 3, got n={n}")
    if not (0 < alpha < 2 and 0 < beta < 2):
        raise ParameterError("sharp construction needs 0 < alpha, beta < 2")
    apex = Point(Fraction(1), Fraction(1))
    if alpha == beta:
        rest = _spaced_on_antidiagonal(alpha, n - 1)
    else:
        rest = (_spaced_on_antidiagonal(alpha, (n - 1) // 2)
                + _spaced_on_antidiagonal(beta, n - 1 - (n - 1) // 2))
    return PointSet([apex] + rest,
                    provenance=f"sharp(n={n}, alpha={alpha}, beta={beta})")


def zero_set(n: int) -> PointSet:
    if n < 4 or n % 2:
        raise ParameterError(f"zero construction needs even n >= 4, got n={n}")
    h = n // 2
    pts = [Point(Fraction(k, h), Fraction(0)) for k in range(1, h + 1)]
    pts += [Point(Fraction(0), Fraction(k, h)) for k in range(1, h + 1)]
    return PointSet(pts, provenance=f"zero(n={n})")


def _side(n: int) -> int:
    m = math.isqrt(n)
    if n < 1 or m * m != n:
        raise ParameterError(f"grid families need a perfect-square n, got n={n}")
    return m


def grid_set(n: int) -> PointSet:
    m = _side(n)
    pts = [Point(Fraction(i, m), Fraction(j, m))
           for i in range(1, m + 1) for j in range(1, m + 1)]
    return PointSet(pts, provenance=f"grid(n={n})")


def random_set(n: int, seed: int) -> PointSet:
    rng = SplitMix64(seed)
    seen = set()
    pts = []
    while len(pts) < n:
        x = Fraction((rng.next() >> 32) + 1, 1 << 32)
        y = Fraction((rng.next() >> 32) + 1, 1 << 32)
        p = Point(x, y)
        if p in seen:
            continue
        seen.add(p)
        pts.append(p)
    return PointSet(pts, provenance=f"random(n={n}, seed={seed})")


def reaches_separation(x: Fraction, n: int, s: Fraction) -> bool:
    """Exact test of ``x >= n**(-1/s)`` for rational x, s > 0."""
    s = Fraction(s)
    a, b = s.numerator, s.denominator
    if x <= 0:
        return False
    # x >= n**(-b/a)  <=>  x**a * n**b >= 1
    return x ** a * n ** b >= 1


def reaches_separation_sq(x: Fraction, n: int, s: Fraction) -> bool:
    """Exact test of ``x >= n**(-2/s)`` (squared separation threshold)."""
    s = Fraction(s)
    a, b = s.numerator, s.denominator
    if x <= 0:
        return False
    return x ** a * n ** (2 * b) >= 1


def _eps_bounds(n: int, s: Fraction, denom: int = 1 << 64):
    """Rationals lo <= n**(-1/s) <= hi with denominator ``denom``."""
    a, b = Fraction(s).numerator, Fraction(s).denominator

    def at_most_eps(k):
        return Fraction(k, denom) ** a * n ** b <= 1

    lo = math.floor(n ** (-1.0 / float(s)) * denom)
    while not at_most_eps(lo):
        lo -= 1
    while at_most_eps(lo + 1):
        lo += 1
    exact = Fraction(lo, denom) ** a * n ** b == 1
    return Fraction(lo, denom), Fraction(lo if exact else lo + 1, denom)


_JITTER_GRAIN = 1 << 16
_JITTER_LEVELS = 1023


def perturbed_grid(n: int, s, seed: int) -> PointSet:
    """Jittered grid whose separation stays at least ``n**(-1/s)``.

    Each coordinate moves by at most ``delta = min(eps/4, (1/sqrt(n) - eps)/2)``
    where ``eps = n**(-1/s)``; neighbours then stay at least
    ``1/sqrt(n) - 2*delta >= eps`` apart.  At s = 2 this forces delta = 0.
    """
    s = parse_rational(s)
    m = _side(n)
    if s <= 0:
        raise ParameterError("perturbed grid needs s > 0")
    h = Fraction(1, m)
    if not reaches_separation(h, n, s):
        raise ParameterError(
            f"separation n^(-1/s) exceeds the lattice spacing 1/sqrt(n) for "
            f"n={n}, s={s}; no n-point grid perturbation can reach it")
    if n == 1:
        delta = Fraction(0)
    else:
        eps_lo, eps_hi = _eps_bounds(n, s)
        bound = min(eps_lo / 4, (h - eps_hi) / 2)
        grain = m * _JITTER_GRAIN
        delta = Fraction(max(0, math.floor(bound * grain)), grain)
    rng = SplitMix64(seed)
    pts = []
    for i in range(1, m + 1):
        for j in range(1, m + 1):
            jx = delta * (2 * (rng.next() >> 54) - _JITTER_LEVELS) / _JITTER_LEVELS
            jy = delta * (2 * (rng.next() >> 54) - _JITTER_LEVELS) / _JITTER_LEVELS
            x = min(max(Fraction(i, m) + jx, Fraction(0)), Fraction(1))
            y = min(max(Fraction(j, m) + jy, Fraction(0)), Fraction(1))
            pts.append(Point(x, y))
    return PointSet(pts, provenance=f"perturbed-grid(n={n}, s={s}, seed={seed})")


def check_spec(spec: ConstructionSpec) -> None:
    """Raise ParameterError if ``spec`` cannot be generated; builds nothing."""
    if spec.kind not in KINDS:
        raise ParameterError(f"unknown construction kind {spec.kind!r}")
    if spec.n < 1:
        raise ParameterError(f"n must be positive, got n={spec.n}")
    if spec.kind == "sharp":
        if spec.n < 3:
            raise ParameterError(f"sharp construction needs n >= 3, got n={spec.n}")
        if spec.alpha is None or spec.beta is None:
            raise ParameterError("sharp construction needs alpha and beta")
        if not (0 < spec.alpha < 2 and 0 < spec.beta < 2):
            raise ParameterError("sharp construction needs 0 < alpha, beta < 2")
    elif spec.kind == "zero":
        if spec.n < 4 or spec.n % 2:
            raise ParameterError(f"zero construction needs even n >= 4, got n={spec.n}")
    elif spec.kind in ("grid", "perturbed-grid"):
        m = _side(spec.n)
        if spec.kind == "perturbed-grid":
            if spec.s is None or spec.s <= 0:
                raise ParameterError("perturbed-grid needs s > 0")
            if not reaches_separation(Fraction(1, m), spec.n, spec.s):
                raise ParameterError(
                    f"separation n^(-1/s) exceeds the lattice spacing 1/sqrt(n) "
                    f"for n={spec.n}, s={spec.s}")


def generate(spec: ConstructionSpec) -> PointSet:
    check_spec(spec)
    if spec.kind == "sharp":
        return sharp_set(spec.n, spec.alpha, spec.beta)
    if spec.kind == "zero":
        return zero_set(spec.n)
    if spec.kind == "grid":
        return grid_set(spec.n)
    if spec.kind == "random":
        return random_set(spec.n, spec.seed)
    if spec.kind == "perturbed-grid":
        return perturbed_grid(spec.n, spec.s, spec.seed)
    raise ParameterError(f"unknown construction kind {spec.kind!r}")
