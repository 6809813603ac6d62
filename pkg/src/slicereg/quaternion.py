"""Quaternion arithmetic, imaginary units, frames and the rotation action.

Quaternions are plain float arrays whose last axis has length 4, ordered
``[x0, x1, x2, x3]`` for ``x0 + x1 e1 + x2 e2 + x3 e3``.  Every function
broadcasts over leading axes, so a batch of points is just an ``(n, 4)``
array.  Imaginary units are 3-vectors ``[v1, v2, v3]``.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateVector, InvalidFrame, NotUnit

EPS_VEC = 1e-12
FRAME_TOL = 1e-12
UNIT_TOL = 1e-12

ONE = np.array([1.0, 0.0, 0.0, 0.0])
E1 = np.array([0.0, 1.0, 0.0, 0.0])
E2 = np.array([0.0, 0.0, 1.0, 0.0])
E3 = np.array([0.0, 0.0, 0.0, 1.0])


def quat(x0=0.0, x1=0.0, x2=0.0, x3=0.0) -> np.ndarray:
    return np.array([x0, x1, x2, x3], dtype=float)


def qmul(a, b) -> np.ndarray:
    """Hamilton product ``a b`` (broadcasting over leading axes)."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    a0, a1, a2, a3 = np.moveaxis(a, -1, 0)
    b0, b1, b2, b3 = np.moveaxis(b, -1, 0)
    return np.stack([
        a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
        a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
        a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
        a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
    ], axis=-1)


def conj(q) -> np.ndarray:
    q = np.asarray(q, dtype=float)
    return q * np.array([1.0, -1.0, -1.0, -1.0])


def norm(q) -> np.ndarray:
    return np.linalg.norm(np.asarray(q, dtype=float), axis=-1)


def inverse(q) -> np.ndarray:
    q = np.asarray(q, dtype=float)
    return conj(q) / np.sum(q * q, axis=-1, keepdims=True)


def real_part(q) -> np.ndarray:
    return np.asarray(q, dtype=float)[..., 0]


def vector_part(q) -> np.ndarray:
    return np.asarray(q, dtype=float)[..., 1:]


def from_vector(v) -> np.ndarray:
    """Pure quaternion with vector part ``v``."""
    v = np.asarray(v, dtype=float)
    return np.concatenate([np.zeros(v.shape[:-1] + (1,)), v], axis=-1)


def imaginary_unit_of(q) -> np.ndarray:
    """Return ``I_q``, the normalized vector part of a single quaternion.

    Raises `DegenerateVector` when the vector part has norm at most
    ``EPS_VEC``; such a point is real and the caller has to pick the slice.
    """
    v = vector_part(q)
    r = float(np.linalg.norm(v))
    if r <= EPS_VEC:
        raise DegenerateVector(f"vector part has norm {r:.3g}; choose a slice explicitly")
    return v / r


def check_imaginary_unit(v) -> np.ndarray:
    v = np.asarray(v, dtype=float)
    if v.shape != (3,) or abs(np.linalg.norm(v) - 1.0) > FRAME_TOL:
        raise InvalidFrame(f"not a unit 3-vector: {v!r}")
    return v


def as_unit(u) -> np.ndarray:
    """Validate a unit quaternion (an element of S^3)."""
    u = np.asarray(u, dtype=float)
    if u.shape != (4,) or abs(np.linalg.norm(u) - 1.0) > UNIT_TOL:
        raise NotUnit(f"not a unit quaternion: {u!r}")
    return u


def rotate(u, w) -> np.ndarray:
    """``u w conj(u)``; for unit ``u`` this is a rotation of the vector part."""
    return qmul(qmul(u, w), conj(u))


def rotate_vector(u, v) -> np.ndarray:
    return vector_part(rotate(u, from_vector(v)))


@dataclass(frozen=True, eq=False)
class Frame:
    """An ordered orthonormal pair ``(i, j)`` of imaginary units, an element of T.

    Validated on construction: unit length, orthogonality and co-orientation of
    ``{i, j, ij}`` with the standard basis.
    """

    i: np.ndarray
    j: np.ndarray

    def __post_init__(self):
        i = np.array(self.i, dtype=float)
        j = np.array(self.j, dtype=float)
        if i.shape != (3,) or j.shape != (3,):
            raise InvalidFrame("frame vectors must be 3-vectors")
        if abs(i @ i - 1.0) > FRAME_TOL or abs(j @ j - 1.0) > FRAME_TOL:
            raise InvalidFrame("frame vectors must have unit length")
        if abs(i @ j) > FRAME_TOL:
            raise InvalidFrame("frame vectors must be orthogonal")
        if np.linalg.det(np.stack([i, j, np.cross(i, j)], axis=1)) <= FRAME_TOL:
            raise InvalidFrame("frame is not co-oriented with the standard basis")
        i.setflags(write=False)
        j.setflags(write=False)
        object.__setattr__(self, "i", i)
        object.__setattr__(self, "j", j)

    @property
    def k(self) -> np.ndarray:
        """Vector part of the quaternion product ``i j``."""
        return np.cross(self.i, self.j)

    @property
    def basis(self) -> np.ndarray:
        """Rows ``1, i, j, ij`` as quaternions: an orthonormal basis of H."""
        b = np.zeros((4, 4))
        b[0, 0] = 1.0
        b[1, 1:] = self.i
        b[2, 1:] = self.j
        b[3, 1:] = self.k
        return b

    def coords(self, q) -> np.ndarray:
        """Coordinates of ``q`` in the basis ``1, i, j, ij``."""
        return np.asarray(q, dtype=float) @ self.basis.T

    def from_coords(self, c) -> np.ndarray:
        return np.asarray(c, dtype=float) @ self.basis

    def embed(self, z) -> np.ndarray:
        """Map complex numbers into the slice C(i): ``x + iy -> x + y i``."""
        z = np.asarray(z, dtype=complex)
        return np.real(z)[..., None] * ONE + np.imag(z)[..., None] * from_vector(self.i)

    def assemble(self, f1, f2) -> np.ndarray:
        """Quaternion ``f1 + f2 j`` from complex arrays ``f1, f2`` in C(i)."""
        f1 = np.asarray(f1, dtype=complex)
        f2 = np.asarray(f2, dtype=complex)
        c = np.stack([f1.real, f1.imag, f2.real, f2.imag], axis=-1)
        return self.from_coords(c)

    def as_array(self) -> np.ndarray:
        return np.concatenate([self.i, self.j])

    def distance(self, other: "Frame") -> float:
        """Euclidean distance of the two frames seen as points of R^6."""
        return float(np.linalg.norm(self.as_array() - other.as_array()))

    def __repr__(self):
        return f"Frame(i={self.i.tolist()}, j={self.j.tolist()})"


STANDARD_FRAME = Frame(np.array([1.0, 0.0, 0.0]), np.array([0.0, 1.0, 0.0]))


def rotate_frame(u, fr: Frame) -> Frame:
    """``R_u(i, j) = (u i conj(u), u j conj(u))``."""
    u = as_unit(u)
    i, j = rotate_vector(u, np.stack([fr.i, fr.j]))
    # re-orthonormalize away the last few ulps so validation stays exact-ish
    i = i / np.linalg.norm(i)
    j = j - (j @ i) * i
    return Frame(i, j / np.linalg.norm(j))


def completion(i) -> np.ndarray:
    """Fixed unit vector orthogonal to ``i``: Gram-Schmidt on the least aligned axis."""
    i = np.asarray(i, dtype=float)
    e = np.eye(3)[int(np.argmin(np.abs(i)))]
    j = e - (e @ i) * i
    return j / np.linalg.norm(j)


def frame_from_unit(i) -> Frame:
    return Frame(i, completion(i))


def fibonacci_sphere(n: int) -> np.ndarray:
    """``n`` nearly uniform deterministic points on S^2, shape ``(n, 3)``."""
    k = np.arange(n) + 0.5
    z = 1.0 - 2.0 * k / n
    r = np.sqrt(1.0 - z * z)
    phi = np.pi * (3.0 - np.sqrt(5.0)) * k
    return np.stack([r * np.cos(phi), r * np.sin(phi), z], axis=1)


def frame_sample(n: int) -> list[Frame]:
    return [frame_from_unit(v) for v in fibonacci_sphere(n)]


def random_unit_quaternion(rng: np.random.Generator) -> np.ndarray:
    u = rng.standard_normal(4)
    return u / np.linalg.norm(u)


def random_imaginary_unit(rng: np.random.Generator) -> np.ndarray:
    v = rng.standard_normal(3)
    return v / np.linalg.norm(v)


def random_frame(rng: np.random.Generator) -> Frame:
    return rotate_frame(random_unit_quaternion(rng), STANDARD_FRAME)
