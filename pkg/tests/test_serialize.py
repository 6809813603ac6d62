import json

import numpy as np
from hypothesis import given

from slicereg import quaternion as Q
from slicereg import serialize as S
from slicereg.bundle import random_total
from slicereg.harmonic import BoundaryTrace, random_harmonic, random_polyline
from slicereg.hull import SliceHull
from slicereg.series import random_series
from slicereg.verify import counterexample_pair
from slicereg.zeros import component_zero_sets, random_psrb

from conftest import frames, seeds


def through_json(obj):
    return json.loads(json.dumps(obj))


@given(frames())
def test_frame_round_trip(fr):
    assert S.frame_from_json(through_json(S.frame_to_json(fr))).distance(fr) == 0


@given(seeds)
def test_series_and_polynomial_round_trip(seed):
    rng = np.random.default_rng(seed)
    f = random_series(rng, 7, 1.5)
    g = S.series_from_json(through_json(S.series_to_json(f)))
    assert g.radius == 1.5 and g.distance(f) == 0
    p = random_psrb(rng, 4)
    assert S.polynomial_from_json(through_json(S.polynomial_to_json(p))).distance(p) == 0


@given(seeds)
def test_harmonic_total_and_trace_round_trip(seed):
    rng = np.random.default_rng(seed)
    u = random_harmonic(rng, 6)
    assert S.harmonic_from_json(through_json(S.harmonic_to_json(u))).distance(u) == 0
    el = random_total(rng, 4)
    assert S.total_from_json(through_json(S.total_to_json(el))).distance(el) == 0
    t = BoundaryTrace(2.0, rng.standard_normal(32))
    t2 = S.trace_from_json(through_json(S.trace_to_json(t)))
    assert t2.rho == 2.0 and np.array_equal(t2.samples, t.samples)
    path = random_polyline(rng, [0, 0], [0.3, 0.2], 3, 0.9)
    assert np.array_equal(S.path_from_json(through_json(S.path_to_json(path))).vertices, path.vertices)


def test_zerodata_round_trip():
    f, _, fr = counterexample_pair()
    zd = component_zero_sets(f, fr)
    back = S.zerodata_from_json(through_json(S.zerodata_to_json(zd)))
    assert back.matches(zd, 0.0)
    zd = component_zero_sets(S.polynomial_from_json([[-1, 0, 0, 0], [0, 0, 0, 0], [1, 0, 0, 0]]), fr)
    assert S.zerodata_to_json(zd)["s2"] is None
    assert S.zerodata_from_json(through_json(S.zerodata_to_json(zd))).s2 is None


def test_hull_round_trip():
    h = SliceHull.of(Q.E1[1:], [[0, 0], [1, 0], [0, 1]])
    back = S.hull_from_json(through_json(S.hull_to_json(h)))
    assert back.distance(h) == 0 and np.array_equal(back.slice, h.slice)
