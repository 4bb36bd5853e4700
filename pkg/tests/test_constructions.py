from fractions import Fraction as F

import pytest

from dotpairs.adaptability import is_s_adaptable, min_separation_sq
from dotpairs.constructions import (ConstructionSpec, ParameterError, SplitMix64, check_spec,
                                    generate, grid_set, perturbed_grid, random_set,
                                    reaches_separation, sharp_set, zero_set)
from dotpairs.counting import DotPair, count_bruteforce, incidence_profile
from dotpairs.fileio import format_points, parse_points
from dotpairs.geometry import Point, dot


def test_splitmix_reference_values():
    # published first outputs of SplitMix64 seeded with 0
    rng = SplitMix64(0)
    assert [rng.next() for _ in range(3)] == [
        0xE220A8397B1DCDAF, 0x6E789E6AA1B965F4, 0x06C45D188009454F]


class TestSharp:
    def test_minimal(self):
        P = sharp_set(3, 1, 1)
        assert P[0] == Point(1, 1)
        assert len(P) == 3
        assert all(p.x + p.y == 1 for p in list(P)[1:])

    @pytest.mark.parametrize("n, a, b", [(11, F(1, 2), F(3, 2)), (20, 1, F(3, 2)),
                                         (9, F(7, 4), F(1, 4)), (15, 1, 1)])
    def test_apex_and_containment(self, n, a, b):
        P = sharp_set(n, a, b)
        assert len(P) == n and P.in_unit_square()
        apex = P[0]
        on_a = [q for q in P if dot(apex, q) == a]
        on_b = [q for q in P if dot(apex, q) == b]
        if a == b:
            assert len(on_a) == n - 1
        else:
            assert (len(on_a), len(on_b)) == ((n - 1) // 2, n - 1 - (n - 1) // 2)

    def test_n101_count(self):
        P = sharp_set(101, 1, F(3, 2))
        d = DotPair(F(1), F(3, 2))
        total = count_bruteforce(P, d)
        assert total >= 50 * 50
        assert total == incidence_profile(P, d).total_triples

    @pytest.mark.parametrize("n, a, b", [(2, 1, 1), (5, 0, 1), (5, 1, 2), (5, -1, 1)])
    def test_parameter_errors(self, n, a, b):
        with pytest.raises(ParameterError):
            sharp_set(n, a, b)


class TestZero:
    def test_n4(self):
        assert list(zero_set(4)) == [Point(F(1, 2), 0), Point(1, 0), Point(0, F(1, 2)),
                                     Point(0, 1)]

    @pytest.mark.parametrize("n", range(4, 41, 2))
    def test_cubic_count(self, n):
        P = zero_set(n)
        assert not P.has_origin() and P.in_unit_square()
        assert count_bruteforce(P, DotPair(F(0), F(0))) == 2 * (n // 2) ** 3

    def test_ratio_tends_to_quarter(self):
        assert F(2 * 20 ** 3, 40 ** 3) == F(1, 4)

    @pytest.mark.parametrize("n", [3, 2, 7])
    def test_rejects(self, n):
        with pytest.raises(ParameterError):
            zero_set(n)


class TestGrid:
    def test_n4(self):
        assert set(grid_set(4)) == {Point(F(1, 2), F(1, 2)), Point(F(1, 2), 1),
                                    Point(1, F(1, 2)), Point(1, 1)}

    @pytest.mark.parametrize("n", [4, 9, 64, 100])
    def test_separation(self, n):
        assert min_separation_sq(grid_set(n)) == F(1, n)

    def test_n9_regression(self):
        # 729-triple enumeration
        assert count_bruteforce(grid_set(9), DotPair(F(1), F(1))) == 10

    def test_non_square(self):
        with pytest.raises(ParameterError):
            grid_set(10)


class TestRandom:
    def test_deterministic(self):
        assert random_set(40, 11) == random_set(40, 11)
        assert random_set(40, 11) != random_set(40, 12)

    def test_distinct_and_contained(self):
        P = random_set(200, 5)
        assert len(set(P)) == 200 and P.in_unit_square()
        assert all(p.x > 0 and p.y > 0 and p.x.denominator <= 1 << 32 for p in P)

    def test_generic_target_empty(self):
        assert incidence_profile(random_set(50, 1), DotPair(F(1, 3), F(1, 3))).total_triples == 0

    def test_realized_target(self):
        P = random_set(50, 1)
        a = dot(P[3], P[17])
        assert count_bruteforce(P, DotPair(a, a)) >= 1


class TestPerturbedGrid:
    def test_s2_is_exact_grid(self):
        assert set(perturbed_grid(256, 2, 9)) == set(grid_set(256))

    @pytest.mark.parametrize("n, s", [(256, F(7, 4)), (1024, F(8, 5)), (100, F(19, 10))])
    def test_separation_met(self, n, s):
        P = perturbed_grid(n, s, 4)
        assert P.in_unit_square() and len(P) == n
        sep = min_separation_sq(P)
        assert F(1) * sep ** s.numerator * n ** (2 * s.denominator) >= 1
        assert P != grid_set(n)

    def test_jitter_bounded(self):
        n, s = 1024, F(7, 4)
        eps = n ** (-1 / float(s))
        G = list(grid_set(n))
        for p, g in zip(perturbed_grid(n, s, 1), G):
            assert abs(float(p.x - g.x)) <= eps / 4 and abs(float(p.y - g.y)) <= eps / 4

    def test_seed_determinism(self):
        assert perturbed_grid(64, F(7, 4), 3) == perturbed_grid(64, F(7, 4), 3)
        assert perturbed_grid(64, F(7, 4), 3) != perturbed_grid(64, F(7, 4), 4)

    def test_infeasible(self):
        with pytest.raises(ParameterError, match="lattice spacing"):
            perturbed_grid(256, F(5, 2), 0)

    def test_adaptable_s_7_4(self):
        P = perturbed_grid(10000, F(7, 4), 2)
        rep = is_s_adaptable(P, F(7, 4))
        assert rep.separation_pass and rep.energy_pass and rep.s_in_range


def test_reaches_separation_exact():
    assert reaches_separation(F(1, 16), 256, 2)
    assert not reaches_separation(F(1, 17), 256, 2)


@pytest.mark.parametrize("spec", [
    ConstructionSpec("sharp", 25, F(1, 3), F(5, 4)),
    ConstructionSpec("zero", 12),
    ConstructionSpec("grid", 49),
    ConstructionSpec("random", 30, seed=8),
    ConstructionSpec("perturbed-grid", 64, s=F(7, 4), seed=1),
])
def test_csv_roundtrip(spec):
    P = generate(spec)
    back = parse_points(format_points(P))
    assert back == P and back.provenance == P.provenance
    assert ConstructionSpec.from_json(spec.to_json()) == spec


@pytest.mark.parametrize("spec", [
    ConstructionSpec("sharp", 2, F(1), F(1)), ConstructionSpec("sharp", 5),
    ConstructionSpec("zero", 5), ConstructionSpec("grid", 8),
    ConstructionSpec("perturbed-grid", 16), ConstructionSpec("blob", 4),
])
def test_check_spec_rejects(spec):
    with pytest.raises(ParameterError):
        check_spec(spec)
