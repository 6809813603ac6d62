import numpy as np
import pytest
from hypothesis import given, strategies as st

from slicereg.errors import DegenerateLeadingCoefficient
from slicereg.hull import SliceHull, convex_hull_2d, hull_contains, hull_distance, orientation
from slicereg.roots import RootSet, cluster, complex_roots, residual_ok
from slicereg.verify import brute_force_extreme

from conftest import seeds


def as_set(points):
    return {tuple(np.round(p, 12)) for p in np.asarray(points).reshape(-1, 2)}


def test_roots_examples():
    r = complex_roots([-1, 0, 1])
    np.testing.assert_allclose(r.points, [-1, 1], atol=1e-14)
    r = complex_roots(np.poly([3, 2, 1])[::-1])
    np.testing.assert_allclose(r.points, [1, 2, 3], atol=1e-10)
    assert np.all(r.mult == 1)
    r = complex_roots([0, 0, 1])
    assert r.total == 2 and len(r) == 1 and abs(r.points[0]) <= 1e-12


def test_roots_degenerate_leading():
    with pytest.raises(DegenerateLeadingCoefficient):
        complex_roots([1, 2, 0])
    with pytest.raises(DegenerateLeadingCoefficient):
        complex_roots([0.0])


@pytest.mark.parametrize("roots", [[1, 1, 1, 2], [0.3 + 0.2j] * 2 + [-0.5j], [0.1, 0.1, -0.4, -0.4]])
def test_multiplicities(roots):
    r = complex_roots(np.poly(roots)[::-1])
    assert r.total == len(roots)
    want = RootSet(*np.unique(np.asarray(roots, dtype=complex), return_counts=True))
    assert r.matches(want, 1e-9)


def test_cluster_merges_close_points():
    c = cluster(np.array([0.0, 1e-9, 1.0]))
    assert len(c) == 2 and c.total == 3


@given(seeds, st.integers(1, 10))
def test_root_residuals(seed, n):
    rng = np.random.default_rng(seed)
    c = np.append(rng.uniform(-1, 1, n) + 1j * rng.uniform(-1, 1, n), 1.0)
    r = complex_roots(c)
    assert r.total == n
    assert residual_ok(c, r.points)


def test_five_hundred_random_polynomials():
    rng = np.random.default_rng(7)
    for _ in range(500):
        n = int(rng.integers(1, 11))
        c = np.append(rng.uniform(-1, 1, n) + 1j * rng.uniform(-1, 1, n), 1.0)
        r = complex_roots(c)
        assert r.total == n and residual_ok(c, r.points)


def test_hull_examples():
    h = convex_hull_2d([[0, 0], [1, 0], [0, 1], [0.2, 0.2]])
    assert as_set(h) == {(0, 0), (1, 0), (0, 1)}
    assert as_set(convex_hull_2d([[0.5, -2]])) == {(0.5, -2)}
    assert convex_hull_2d(np.zeros((0, 2))).shape == (0, 2)
    seg = convex_hull_2d([[0, 0], [1, 1], [2, 2], [0.5, 0.5]])
    assert as_set(seg) == {(0, 0), (2, 2)}


def test_hull_counter_clockwise():
    h = convex_hull_2d([[0, 0], [1, 0], [1, 1], [0, 1], [0.5, 0.5]])
    area = 0.5 * np.sum(h[:, 0] * np.roll(h[:, 1], -1) - np.roll(h[:, 0], -1) * h[:, 1])
    assert area == pytest.approx(1.0)


def test_orientation_exact():
    assert orientation((0, 0), (1, 0), (0, 1)) == 1
    assert orientation((0, 0), (0, 1), (1, 0)) == -1
    assert orientation((0.1, 0.1), (0.2, 0.2), (0.3, 0.3)) == 0
    assert orientation((0, 0), (3, 3), (7, 7)) == 0


@given(seeds, st.integers(3, 60))
def test_hull_matches_brute_force(seed, n):
    rng = np.random.default_rng(seed)
    pts = rng.uniform(-1, 1, (n, 2))
    assert as_set(convex_hull_2d(pts)) == as_set(list(brute_force_extreme(pts)))


def test_hundred_points_brute_force():
    pts = np.random.default_rng(11).standard_normal((100, 2))
    assert as_set(convex_hull_2d(pts)) == as_set(list(brute_force_extreme(pts)))


def test_integer_grid_brute_force():
    pts = np.random.default_rng(5).integers(-3, 4, (80, 2)).astype(float)
    assert as_set(convex_hull_2d(pts)) == as_set(list(brute_force_extreme(pts)))


@given(seeds)
def test_hull_contains_inputs(seed):
    pts = np.random.default_rng(seed).uniform(-1, 1, (30, 2))
    assert np.all(hull_contains(convex_hull_2d(pts), pts, 1e-12))
    assert not np.any(hull_contains(convex_hull_2d(pts), [[5.0, 5.0]]))


def test_slice_hull_distance():
    a = SliceHull.of([1.0, 0, 0], [[-1, 0], [1, 0]])
    b = SliceHull.of([0, 1.0, 0], [[1, 0], [-1, 0], [0, 0]])
    assert a.distance(b) == 0
    assert hull_distance(np.zeros((0, 2)), np.zeros((0, 2))) == 0
    assert hull_distance(np.zeros((0, 2)), [[0, 0]]) == np.inf
    assert a.contains([[0.3, 0.0]])[0] and not SliceHull.of([1.0, 0, 0], []).contains([[0, 0]])[0]
