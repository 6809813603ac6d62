import numpy as np
import pytest
from hypothesis import given, strategies as st

from slicereg import quaternion as Q
from slicereg.bundle import (ZERO_CLASS, BaseClass, HarmonicClass, TotalElement, add, additivity_residual,
                             base_class, compatibility_residual, deriv_total, derivative_residual, fiber_of,
                             harmonic_class, inverse_trivialization, project, projected_value, random_total,
                             rotate_total, rotation_residual, section, trivialize)
from slicereg.errors import FrameMismatch
from slicereg.planar import HarmonicPoly
from slicereg.series import QPowerSeries, random_ball_points, random_series

from conftest import frames, seeds, unit_quaternions

FR = Q.STANDARD_FRAME
RE_Z = harmonic_class([0, 1])


def q_class(*coeffs):
    return base_class(np.array(coeffs, dtype=float))


def test_project_examples():
    assert project(TotalElement(RE_Z, ZERO_CLASS, FR)).distance(q_class(Q.ONE * 0, Q.ONE)) <= 1e-15
    assert project(TotalElement(ZERO_CLASS, RE_Z, FR)).distance(q_class(Q.ONE * 0, Q.E2)) <= 1e-15
    zero = project(TotalElement(ZERO_CLASS, ZERO_CLASS, FR))
    assert np.all(zero.rep.coeffs == 0)


def test_projected_value_matches_project(rng):
    el = random_total(rng, 5)
    f = project(el).rep
    for q in random_ball_points(rng, 5, 0.8):
        # representatives may differ by a constant; compare increments from the origin
        want = f(q) - f(np.zeros(4))
        got = projected_value(el, q) - projected_value(el, np.zeros(4))
        np.testing.assert_allclose(got, want, atol=1e-10)


def test_trivialize_examples():
    el = trivialize(Q.ONE, q_class(np.zeros(4), Q.ONE), FR)
    assert el.a.distance(RE_Z) <= 1e-15
    assert el.c.distance(ZERO_CLASS) <= 1e-15
    assert el.frame.distance(FR) == 0
    rng = np.random.default_rng(3)
    u = Q.random_unit_quaternion(rng)
    el = trivialize(u, q_class(np.zeros(4)), FR)
    assert el.a.distance(ZERO_CLASS) == 0 and el.c.distance(ZERO_CLASS) == 0
    assert el.frame.distance(Q.rotate_frame(u, FR)) <= 1e-15


def test_section_examples():
    el = section(FR, q_class(np.zeros(4), np.zeros(4), Q.ONE))
    assert el.a.distance(harmonic_class([0, 0, 1])) <= 1e-15
    assert el.c.distance(ZERO_CLASS) <= 1e-15
    zero = section(FR, q_class(np.zeros(4)))
    assert zero.a.distance(ZERO_CLASS) == 0 and zero.c.distance(ZERO_CLASS) == 0


@given(seeds, frames(), st.integers(0, 12))
def test_project_section_identity(seed, fr, deg):
    f = BaseClass(random_series(np.random.default_rng(seed), deg))
    assert project(section(fr, f)).distance(f) <= 1e-10


@given(seeds, frames(), unit_quaternions(), st.integers(0, 12))
def test_project_trivialize_identity(seed, fr, u, deg):
    f = BaseClass(random_series(np.random.default_rng(seed), deg))
    el = trivialize(u, f, fr)
    assert project(el).distance(f) <= 1e-10
    back, fr0 = inverse_trivialization(u, el)
    assert back.distance(f) <= 1e-10 and fr0.distance(fr) <= 1e-12


@given(seeds, frames(), unit_quaternions(), unit_quaternions())
def test_compatibility(seed, fr, u, v):
    f = BaseClass(random_series(np.random.default_rng(seed), 8))
    assert compatibility_residual(u, v, f, fr) <= 1e-10
    assert compatibility_residual(u, u, f, fr) <= 1e-12


def test_compatibility_with_identity(rng):
    f = BaseClass(random_series(rng, 6))
    u = Q.random_unit_quaternion(rng)
    assert trivialize(u, f, FR).distance(trivialize(Q.ONE, f, Q.rotate_frame(u, FR))) <= 1e-12


def test_add_examples(rng):
    A = random_total(rng, 4)
    zero = TotalElement(ZERO_CLASS, ZERO_CLASS, A.frame)
    assert add(A, zero).distance(A) == 0
    AA = add(A, A)
    assert AA.a.distance(HarmonicClass(2 * A.a.rep)) <= 1e-15
    assert AA.c.distance(HarmonicClass(2 * A.c.rep)) <= 1e-15
    with pytest.raises(FrameMismatch):
        add(A, random_total(rng, 4, Q.rotate_frame(Q.random_unit_quaternion(rng), A.frame)))


def test_deriv_total_examples():
    A = TotalElement(harmonic_class([0, 0, 1]), harmonic_class([5.0]), FR)
    D = deriv_total(A)
    assert D.a.distance(harmonic_class([0, 2])) == 0
    assert D.c.distance(ZERO_CLASS) == 0


def test_rotate_total_examples(rng):
    A = random_total(rng, 5)
    assert rotate_total(Q.ONE, A).distance(A) <= 1e-15
    u = Q.random_unit_quaternion(rng)
    assert rotate_total(Q.conj(u), rotate_total(u, A)).distance(A) <= 1e-12


@given(seeds, unit_quaternions(), st.integers(0, 10))
def test_algebra_residuals(seed, u, deg):
    rng = np.random.default_rng(seed)
    A = random_total(rng, deg)
    B = random_total(rng, deg, A.frame)
    assert additivity_residual(A, B) <= 1e-10
    assert derivative_residual(A) <= 1e-10
    assert rotation_residual(u, A) <= 1e-10


def test_fiber_of_intrinsic():
    f = q_class(np.zeros(4), [2.0, 0, 0, 0], [-1.0, 0, 0, 0], [0.5, 0, 0, 0])
    fib = fiber_of(f, Q.frame_sample(16))
    assert len(fib) == 16
    for el in fib:
        assert el.c.distance(ZERO_CLASS) <= 1e-15
        assert project(el).distance(f) <= 1e-12


def test_fiber_holomorphic_on_slice():
    # coefficients in C(e1): Q_{e1,e2}(f) is holomorphic, second component vanishes
    f = q_class(np.zeros(4), [1.0, 2.0, 0, 0], [0, -0.5, 0, 0])
    el = fiber_of(f, [FR])[0]
    assert el.c.distance(ZERO_CLASS) <= 1e-15
    other = fiber_of(f, [Q.Frame(np.array([0.0, 0.0, 1.0]), np.array([1.0, 0.0, 0.0]))])[0]
    assert other.c.distance(ZERO_CLASS) > 0.1


def test_fiber_of_zero_class():
    for el in fiber_of(q_class(np.zeros(4)), Q.frame_sample(5)):
        assert el.a.distance(ZERO_CLASS) == 0 and el.c.distance(ZERO_CLASS) == 0


@given(seeds)
def test_normalization_idempotent(seed):
    rng = np.random.default_rng(seed)
    u = HarmonicPoly(rng.standard_normal(5) + 1j * rng.standard_normal(5))
    once = HarmonicClass(u)
    assert np.array_equal(HarmonicClass(once.rep).rep.coeffs, once.rep.coeffs)
    assert once.rep(0.0, 0.0) == 0.0
    f = BaseClass(QPowerSeries(rng.standard_normal((4, 4))))
    assert np.array_equal(BaseClass(f.rep).rep.coeffs, f.rep.coeffs)
    assert np.all(f.rep(np.zeros(4)) == 0)
