import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dotpairs import _fallback, kernels
from dotpairs.geometry import PointSet

needs_compiled = pytest.mark.skipif(kernels.BACKEND != "compiled",
                                    reason="compiled extension not built")

coords = st.integers(min_value=-40, max_value=40)
point_lists = st.lists(st.tuples(coords, coords), min_size=2, max_size=30, unique=True)


def _targets(ps):
    xs, ys = ps.coords.xs, ps.coords.ys
    dots = sorted({xs[i] * xs[j] + ys[i] * ys[j]
                   for i in range(len(xs)) for j in range(len(xs))})
    return dots


@needs_compiled
@settings(max_examples=60, deadline=None)
@given(point_lists, st.data())
def test_compiled_matches_fallback(pts, data):
    ps = PointSet(pts)
    c = ps.coords
    dots = _targets(ps)
    ta = data.draw(st.sampled_from(dots + [None]))
    tb = data.draw(st.sampled_from(dots))
    assert kernels.profile_counts(c, ta, tb) == kernels.profile_counts(c, ta, tb, force_python=True)
    assert kernels.brute_triples(c, ta, tb) == kernels.brute_triples(c, ta, tb, force_python=True)
    assert kernels.min_sep_sq(c) == kernels.min_sep_sq(c, force_python=True)
    half_s = data.draw(st.sampled_from([0.25, 0.875, 1.0]))
    got = kernels.energy_row_sums(c, half_s)
    want = kernels.energy_row_sums(c, half_s, force_python=True)
    assert all(math.isclose(g, w, rel_tol=1e-12) for g, w in zip(got, want))


@needs_compiled
def test_int128_extremes():
    big = (1 << 61) - 1
    ps = PointSet([(big, big - 3), (-big, 7), (big - 1, -big), (5, 11)])
    c = ps.coords
    assert c.max_abs() < kernels.COORD_LIMIT
    ta = big * big + (big - 3) * (big - 3)   # |p0|^2, about 2**123
    tb = -big * (big - 1) + 7 * -big          # p1 . p2
    assert kernels.profile_counts(c, ta, tb) == _fallback.profile_counts(c.xs, c.ys, ta, tb)
    pts = list(zip(c.xs, c.ys))
    want_a = [sum(1 for q in pts if p[0] * q[0] + p[1] * q[1] == ta) for p in pts]
    want_b = [sum(1 for q in pts if p[0] * q[0] + p[1] * q[1] == tb) for p in pts]
    assert kernels.profile_counts(c, ta, tb) == (want_a, want_b)
    assert want_a[0] == 1 and want_b[1] == 1
    assert kernels.min_sep_sq(c) == _fallback.min_sep_sq(c.xs, c.ys)


def test_oversized_coordinates_fall_back():
    huge = 1 << 70
    ps = PointSet([(huge, 1), (1, huge), (huge, huge)])
    c = ps.coords
    t = huge * huge + 1
    ca, cb = kernels.profile_counts(c, t, t)
    assert ca == [1, 1, 0]
    assert kernels.brute_triples(c, t, t) == 2


def test_unreachable_target_is_zero():
    ps = PointSet([(1, 2), (3, 4)])
    assert kernels.profile_counts(ps.coords, None, 5) == ([0, 0], [1, 0])
    assert kernels.brute_triples(ps.coords, None, 5) == 0
    assert kernels.profile_counts(ps.coords, 1 << 200, 5)[0] == [0, 0]


@pytest.mark.parametrize("threads", [1, 2, 3])
def test_thread_count_does_not_change_results(threads):
    ps = PointSet([(i % 13, (i * 7) % 17) for i in range(150)] and
                  list({(i % 13, (i * 7) % 17) for i in range(150)}))
    c = ps.coords
    base = kernels.profile_counts(c, 30, 40), kernels.brute_triples(c, 30, 40), \
        kernels.min_sep_sq(c), kernels.energy_row_sums(c, 0.9)
    old = kernels.get_threads()
    try:
        kernels.set_threads(threads)
        again = kernels.profile_counts(c, 30, 40), kernels.brute_triples(c, 30, 40), \
            kernels.min_sep_sq(c), kernels.energy_row_sums(c, 0.9)
    finally:
        kernels.set_threads(old)
    assert again == base


def test_bad_thread_count():
    with pytest.raises(ValueError):
        kernels.set_threads(0)
