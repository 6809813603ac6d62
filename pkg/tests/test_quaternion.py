import numpy as np
import pytest
from hypothesis import given

from slicereg import quaternion as Q
from slicereg.errors import DegenerateVector, InvalidFrame, NotUnit

from conftest import frames, quaternions, unit_quaternions

S2 = np.sqrt(0.5)


@pytest.mark.parametrize("a, b, expected", [
    (Q.E1, Q.E2, Q.E3),
    (Q.E2, Q.E1, -Q.E3),
    (Q.E2, Q.E3, Q.E1),
    (Q.E3, Q.E1, Q.E2),
    (Q.E1, Q.E1, -Q.ONE),
    (Q.quat(1, 2, 3, 4), Q.ONE, Q.quat(1, 2, 3, 4)),
    (Q.ONE + Q.E1, Q.ONE - Q.E1, 2 * Q.ONE),
])
def test_qmul_table(a, b, expected):
    np.testing.assert_allclose(Q.qmul(a, b), expected, atol=0)


def test_qmul_broadcasts():
    a = np.stack([Q.E1, Q.E2])
    np.testing.assert_allclose(Q.qmul(a, Q.E3), [-Q.E2, Q.E1])


@pytest.mark.parametrize("q, expected", [
    (Q.quat(2, 0, 3, 0), [0, 1, 0]),
    (Q.quat(0, 1, 1, 0), [S2, S2, 0]),
])
def test_imaginary_unit_of(q, expected):
    np.testing.assert_allclose(Q.imaginary_unit_of(q), expected, atol=1e-15)


@pytest.mark.parametrize("q", [Q.quat(5), Q.quat(1, 1e-13, 0, 0)])
def test_imaginary_unit_of_real_raises(q):
    with pytest.raises(DegenerateVector):
        Q.imaginary_unit_of(q)


def test_rotate_examples():
    w = Q.quat(0.3, -1, 2, 0.5)
    np.testing.assert_allclose(Q.rotate(Q.ONE, w), w)
    u = (Q.ONE + Q.E1) * S2
    np.testing.assert_allclose(Q.rotate(u, Q.E2), Q.E3, atol=1e-15)


def test_rotate_frame_examples():
    fr = Q.STANDARD_FRAME
    u = (Q.ONE + Q.E3) * S2
    r = Q.rotate_frame(u, fr)
    np.testing.assert_allclose(r.i, [0, 1, 0], atol=1e-15)
    np.testing.assert_allclose(r.j, [-1, 0, 0], atol=1e-15)
    assert Q.rotate_frame(Q.ONE, fr).distance(fr) == 0


def test_unit_checks():
    with pytest.raises(NotUnit):
        Q.as_unit(Q.quat(2))
    with pytest.raises(NotUnit):
        Q.rotate_frame(Q.quat(1, 1), Q.STANDARD_FRAME)


@pytest.mark.parametrize("i, j", [
    ([1, 0, 0], [1, 0, 0]),
    ([1, 0, 0], [0, 2, 0]),
    ([1, 0, 0], [0, 1e-6, 1]),
    ([1, 0], [0, 1]),
])
def test_frame_validation(i, j):
    with pytest.raises(InvalidFrame):
        Q.Frame(np.array(i, float), np.array(j, float))


@pytest.mark.parametrize("i, j", [([1, 0, 0], [0, 0, 1]), ([0, 0, -1], [0, 1, 0])])
def test_orthonormal_pairs_are_co_oriented(i, j):
    # det[i, j, i x j] = |i x j|^2 > 0 for every orthonormal pair
    fr = Q.Frame(np.array(i, float), np.array(j, float))
    assert np.linalg.det(np.stack([fr.i, fr.j, fr.k])) == pytest.approx(1.0)


def test_frame_basis_orthonormal():
    fr = Q.Frame(np.array([0, 0, 1.0]), np.array([1.0, 0, 0]))
    b = fr.basis
    np.testing.assert_allclose(b @ b.T, np.eye(4), atol=1e-15)
    # the last basis element is the quaternion product i j
    np.testing.assert_allclose(b[3], Q.qmul(b[1], b[2]), atol=1e-15)


@given(quaternions)
def test_conj_and_norm(q):
    assert np.array_equal(Q.conj(Q.conj(q)), q)
    p = Q.qmul(q, Q.conj(q))
    np.testing.assert_allclose(p[1:], 0, atol=1e-12)
    assert abs(p[0] - Q.norm(q) ** 2) <= 1e-12 * max(1.0, p[0])


@given(quaternions, quaternions, quaternions)
def test_associativity(a, b, c):
    lhs = Q.qmul(Q.qmul(a, b), c)
    rhs = Q.qmul(a, Q.qmul(b, c))
    np.testing.assert_allclose(lhs, rhs, atol=1e-12 * (1 + np.abs(lhs).max()))


@given(unit_quaternions(), quaternions)
def test_rotation_isometry(u, w):
    r = Q.rotate(u, w)
    assert abs(Q.norm(r) - Q.norm(w)) <= 1e-12 * max(1.0, Q.norm(w))
    assert abs(r[0] - w[0]) <= 1e-12 * max(1.0, Q.norm(w))


@given(unit_quaternions(), unit_quaternions(), frames())
def test_group_action(u, v, fr):
    lhs = Q.rotate_frame(u, Q.rotate_frame(v, fr))
    rhs = Q.rotate_frame(Q.qmul(u, v), fr)
    assert lhs.distance(rhs) <= 1e-12
    back = Q.rotate_frame(Q.conj(u), Q.rotate_frame(u, fr))
    assert back.distance(fr) <= 1e-12


def test_rotated_frames_stay_valid(rng):
    for _ in range(1000):
        fr = Q.rotate_frame(Q.random_unit_quaternion(rng), Q.random_frame(rng))
        assert np.linalg.det(np.stack([fr.i, fr.j, fr.k])) > 0


def test_fibonacci_sphere_units():
    pts = Q.fibonacci_sphere(50)
    np.testing.assert_allclose(np.linalg.norm(pts, axis=1), 1.0, atol=1e-15)
    for v in pts[:10]:
        fr = Q.frame_from_unit(v)
        assert np.allclose(fr.i, v)
