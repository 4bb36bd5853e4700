import math
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dotpairs.constructions import ConstructionSpec, grid_set, random_set, sharp_set
from dotpairs.counting import DotPair, IncidenceProfile, incidence_profile
from dotpairs.geometry import Point, PointSet
from dotpairs.incidence import (SeparationError, check_dyadic_identities, check_line_capacity,
                                dyadic_decompose, dyadic_index, incidence_exponent_check,
                                line_capacity)


def profile(pairs):
    per = tuple((i, a, b) for i, (a, b) in enumerate(pairs))
    return IncidenceProfile(per, sum(a + b for a, b in pairs), sum(a * b for a, b in pairs))


@pytest.mark.parametrize("c, j", [(0, -1), (1, 0), (2, 1), (3, 1), (4, 2), (5, 2), (7, 2), (8, 3)])
def test_dyadic_index(c, j):
    assert dyadic_index(c) == j
    if c:
        assert 2 ** j <= c < 2 ** (j + 1)


class TestDecompose:
    def test_all_zero(self):
        stats = dyadic_decompose(profile([(0, 0)] * 7))
        assert stats.buckets == {(-1, -1): 7}
        chk = check_dyadic_identities(stats, profile([(0, 0)] * 7))
        assert (chk.incidences_lower, chk.incidences, chk.triples_lower, chk.triples) == (0,) * 4
        assert chk.passed

    def test_single_point(self):
        prof = profile([(5, 1)])
        stats = dyadic_decompose(prof)
        assert stats.buckets == {(2, 0): 1}
        chk = check_dyadic_identities(stats, prof)
        assert (chk.incidences_lower, chk.incidences) == (5, 6)
        assert (chk.triples_lower, chk.triples) == (4, 5)
        assert chk.passed

    def test_sharp_apex_bucket(self):
        P = sharp_set(101, 1, F(3, 2))
        prof = incidence_profile(P, DotPair(F(1), F(3, 2)))
        stats = dyadic_decompose(prof)
        assert prof.per_point[0][1:] == (50, 50)
        assert stats.buckets[(5, 5)] >= 1
        assert (stats.j_max, stats.k_max) == (5, 5)
        assert check_dyadic_identities(stats, prof).passed

    def test_epsilon_index_bound(self):
        stats = dyadic_decompose(profile([(1, 1)]), epsilon_sq=F(1, 64))
        assert stats.index_bound == 3
        assert dyadic_decompose(profile([(1, 1)]), epsilon_sq=F(1, 50)).index_bound == 3
        assert dyadic_decompose(profile([(1, 1)])).index_bound is None

    @settings(max_examples=200)
    @given(st.lists(st.tuples(st.integers(0, 300), st.integers(0, 300)), max_size=40))
    def test_brackets_always_hold(self, pairs):
        prof = profile(pairs)
        stats = dyadic_decompose(prof)
        assert sum(stats.buckets.values()) == len(pairs)
        assert check_dyadic_identities(stats, prof).passed


class TestCapacity:
    def test_formula(self):
        assert line_capacity(F(1, 64)) == math.floor(8 * math.sqrt(2)) + 1 == 12
        assert line_capacity(F(1)) == 2

    def test_grid_64(self):
        rep = check_line_capacity(grid_set(64), DotPair(F(1), F(1)), F(1, 64))
        assert rep.capacity == 12 and rep.passed

    def test_two_points(self):
        rep = check_line_capacity(PointSet([(0, 0), (1, 0)]), DotPair(F(1), F(1)), 1)
        assert rep.capacity == 2 and rep.passed

    @pytest.mark.parametrize("N", [2, 5, 9, 16])
    def test_tight_packing_attained(self, N):
        # N+1 points on x + y = 1 at spacing sqrt(2)/N, plus the apex (1, 1)
        pts = [Point(F(i, N), 1 - F(i, N)) for i in range(N + 1)] + [Point(1, 1)]
        eps_sq = F(2, N * N)
        rep = check_line_capacity(PointSet(pts), DotPair(F(1), F(1)), eps_sq)
        assert rep.capacity == N + 1
        assert rep.max_alpha == N + 1
        assert rep.passed

    def test_separation_violation_names_pair(self):
        with pytest.raises(SeparationError, match="points 0"):
            check_line_capacity(PointSet([(0, 0), ("1/10", 0)]), DotPair(F(1), F(1)), F(1, 4))

    @settings(max_examples=30, deadline=None)
    @given(st.integers(0, 10 ** 6), st.integers(2, 60),
           st.sampled_from([F(1), F(1, 2), F(3, 4), F(2, 3)]))
    def test_never_fails_when_separated(self, seed, n, a):
        P = random_set(n, seed)
        from dotpairs.adaptability import min_separation_sq
        d = DotPair(a, a)
        assert check_line_capacity(P, d, min_separation_sq(P)).passed
        G = grid_set(49)
        assert check_line_capacity(G, d, F(1, 49)).passed


class TestExponent:
    def test_no_incidences(self):
        rep = incidence_exponent_check(ConstructionSpec("random", 0, seed=1), [10, 20, 40],
                                       DotPair(F(1, 3), F(1, 7)))
        assert rep.status == "no incidences" and rep.slope is None

    def test_sharp_linear(self):
        rep = incidence_exponent_check(ConstructionSpec("sharp", 0, F(1), F(3, 2)),
                                       [101, 201, 401, 801], DotPair(F(1), F(3, 2)))
        assert rep.status == "ok"
        assert abs(rep.slope - 1) < 0.05 and rep.slope < 4 / 3

    def test_grid_below_four_thirds(self):
        rep = incidence_exponent_check(ConstructionSpec("grid", 0), [64, 256, 1024],
                                       DotPair(F(1), F(1)))
        assert rep.slope <= 4 / 3 + 0.15
