"""Slice regular functions on a ball as truncated quaternion power series.

A function ``f(q) = sum_n q^n a_n`` on ``B^4(0, radius)`` is stored by its
coefficients.  Restriction to a slice ``C(i)`` and splitting along a frame
``(i, j)`` give a `SlicePair` of two complex polynomials; extension back to
the ball uses the two-point formula, so both directions are available at the
coefficient level and at the point level.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import quaternion as Q
from .errors import OutOfDomain, TruncationError
from .planar import HarmonicPoly, cpolymul, cpolyval, pad
from .quaternion import Frame

MAX_DEGREE = 64


@dataclass(frozen=True, eq=False)
class QPowerSeries:
    """Truncated power series ``sum_{n<=N} q^n a_n`` on ``B^4(0, radius)``.

    ``coeffs`` has shape ``(N + 1, 4)``, ascending degree.
    """

    coeffs: np.ndarray
    radius: float = 1.0

    def __post_init__(self):
        c = np.array(self.coeffs, dtype=float)
        if c.ndim == 1 and c.size == 4:
            c = c[None, :]
        if c.ndim != 2 or c.shape[1] != 4 or c.shape[0] == 0:
            raise ValueError("coefficients must have shape (N + 1, 4)")
        if c.shape[0] - 1 > MAX_DEGREE:
            raise TruncationError(f"degree {c.shape[0] - 1} exceeds the cap {MAX_DEGREE}")
        if not self.radius > 0:
            raise ValueError("radius must be positive")
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)
        object.__setattr__(self, "radius", float(self.radius))

    @property
    def degree(self) -> int:
        return self.coeffs.shape[0] - 1

    def __call__(self, q):
        return evaluate(self, q)

    def __add__(self, other: "QPowerSeries") -> "QPowerSeries":
        n = max(self.coeffs.shape[0], other.coeffs.shape[0])
        return QPowerSeries(pad(self.coeffs, n) + pad(other.coeffs, n),
                            min(self.radius, other.radius))

    def __sub__(self, other: "QPowerSeries") -> "QPowerSeries":
        return self + other.scaled(-1.0)

    def scaled(self, s: float) -> "QPowerSeries":
        return QPowerSeries(float(s) * self.coeffs, self.radius)

    def right_mul(self, c) -> "QPowerSeries":
        """``f(q) c`` for a quaternion constant ``c``."""
        return QPowerSeries(Q.qmul(self.coeffs, c), self.radius)

    def distance(self, other: "QPowerSeries") -> float:
        """Max-norm of the coefficient difference (quaternion modulus per coefficient)."""
        n = max(self.coeffs.shape[0], other.coeffs.shape[0])
        d = pad(self.coeffs, n) - pad(other.coeffs, n)
        return float(np.max(Q.norm(d)))

    def __repr__(self):
        return f"QPowerSeries(radius={self.radius}, coeffs={self.coeffs.tolist()})"


def series(coeffs, radius=1.0) -> QPowerSeries:
    return QPowerSeries(np.asarray(coeffs, dtype=float), radius)


def _check_domain(q, radius):
    r = Q.norm(q)
    if np.any(r >= radius):
        raise OutOfDomain(f"|q| = {np.max(r):.6g} is not below the radius {radius:.6g}")


def evaluate(f: QPowerSeries, q) -> np.ndarray:
    """Horner evaluation of ``sum q^n a_n``; powers of ``q`` stay on the left.

    ``q`` may be a batch of shape ``(..., 4)``.
    """
    q = np.asarray(q, dtype=float)
    _check_domain(q, f.radius)
    out = np.broadcast_to(f.coeffs[-1], q.shape).copy()
    for a in f.coeffs[-2::-1]:
        out = a + Q.qmul(q, out)
    return out


@dataclass(frozen=True, eq=False)
class SlicePair:
    """Splitting ``f|C(i) = f1 + f2 j`` with complex coefficient lists.

    ``f1`` and ``f2`` hold coefficients of polynomials in ``z = x + iy``; the
    complex unit is read as the frame's ``i``.
    """

    frame: Frame
    f1: np.ndarray
    f2: np.ndarray
    radius: float = 1.0

    def __post_init__(self):
        n = max(len(self.f1), len(self.f2))
        object.__setattr__(self, "f1", pad(np.asarray(self.f1, dtype=complex), n))
        object.__setattr__(self, "f2", pad(np.asarray(self.f2, dtype=complex), n))

    def __call__(self, z) -> np.ndarray:
        """Quaternion value ``f1(z) + f2(z) j`` at complex ``z`` (read in C(i))."""
        return self.frame.assemble(cpolyval(self.f1, z), cpolyval(self.f2, z))

    def reassemble(self) -> QPowerSeries:
        """Coefficient-level extension: ``a_n = f1_n + f2_n j``."""
        return QPowerSeries(self.frame.assemble(self.f1, self.f2), self.radius)


def split(f: QPowerSeries, fr: Frame) -> SlicePair:
    """Decompose each coefficient in the basis ``1, i, j, ij``."""
    c = fr.coords(f.coeffs)
    return SlicePair(fr, c[:, 0] + 1j * c[:, 1], c[:, 2] + 1j * c[:, 3], f.radius)


def slice_coordinates(q, i_default):
    """Write ``q = x + I_q y`` with ``y >= 0``; near-real points get ``y = 0, I_q = i_default``."""
    q = np.asarray(q, dtype=float)
    x = q[..., 0]
    v = q[..., 1:]
    y = np.linalg.norm(v, axis=-1)
    real = y <= Q.EPS_VEC
    safe = np.where(real, 1.0, y)
    iq = np.where(real[..., None], i_default, v / safe[..., None])
    return x, np.where(real, 0.0, y), iq


def extend(g: SlicePair, q) -> np.ndarray:
    """Evaluate the extension ``P_{i,j}[g]`` at ``q`` by the two-point formula.

    ``P[g](q) = 1/2 [(1 + I_q i) g(x - yi) + (1 - I_q i) g(x + yi)]``.
    """
    q = np.asarray(q, dtype=float)
    _check_domain(q, g.radius)
    x, y, iq = slice_coordinates(q, g.frame.i)
    g_minus = g(x - 1j * y)
    g_plus = g(x + 1j * y)
    iq_i = Q.qmul(Q.from_vector(iq), Q.from_vector(g.frame.i))
    one = Q.ONE
    return 0.5 * (Q.qmul(one + iq_i, g_minus) + Q.qmul(one - iq_i, g_plus))


def representation(f_plus, f_minus, i, target) -> np.ndarray:
    """Value at ``x + target*y`` from the values ``f(x + iy)`` and ``f(x - iy)``."""
    f_plus = np.asarray(f_plus, dtype=float)
    f_minus = np.asarray(f_minus, dtype=float)
    t_i = Q.qmul(Q.from_vector(target), Q.from_vector(i))
    return 0.5 * (f_plus + f_minus) + 0.5 * Q.qmul(t_i, f_minus - f_plus)


def representation_from_series(f: QPowerSeries, i, target, x, y) -> np.ndarray:
    i = np.asarray(i, dtype=float)
    plus = evaluate(f, x * Q.ONE + y * Q.from_vector(i))
    minus = evaluate(f, x * Q.ONE - y * Q.from_vector(i))
    return representation(plus, minus, i, target)


@dataclass(frozen=True, eq=False)
class DComponents:
    """Real components of ``Q_{i,j}[f] = D1 + D2 i + D3 j + D4 ij`` as harmonic polynomials."""

    frame: Frame
    d1: HarmonicPoly
    d2: HarmonicPoly
    d3: HarmonicPoly
    d4: HarmonicPoly

    def values(self, x, y) -> np.ndarray:
        return np.stack([d(x, y) for d in (self.d1, self.d2, self.d3, self.d4)], axis=-1)

    def recombine(self, x, y) -> np.ndarray:
        return self.frame.from_coords(self.values(x, y))


def d_components(f: QPowerSeries, fr: Frame) -> DComponents:
    """``D1 = Re f1, D2 = Im f1, D3 = Re f2, D4 = Im f2`` for the splitting along ``fr``."""
    g = split(f, fr)
    return DComponents(fr, HarmonicPoly(g.f1), HarmonicPoly(-1j * g.f1),
                       HarmonicPoly(g.f2), HarmonicPoly(-1j * g.f2))


def d_components_pointwise(value, fr: Frame) -> np.ndarray:
    """The four real components of a quaternion value via conjugation formulas.

    Works on raw values of ``Q_{i,j}[f]``, independently of `split`.
    """
    value = np.asarray(value, dtype=float)
    i = Q.from_vector(fr.i)
    j = Q.from_vector(fr.j)

    def re2(w):
        return (w + Q.conj(w))[..., 0] / 2.0

    d1 = re2(value)
    d2 = -re2(Q.qmul(value, i))
    d3 = -re2(Q.qmul(value, j))
    d4 = re2(Q.qmul(Q.qmul(value, j), i))
    return np.stack([d1, d2, d3, d4], axis=-1)


def slice_identities_check(f: QPowerSeries, fr: Frame, z):
    """Residuals of ``f - ifi = 2 f1`` and ``f + ifi = 2 f2 j`` on ``C(i)``.

    This is the assignment that follows from ``f|C(i) = f1 + f2 j``:
    ``i f1 i = -f1`` while ``i (f2 j) i = f2 j``.  ``z`` is a complex scalar or
    array of slice points; the maxima over the batch are returned.
    """
    z = np.asarray(z, dtype=complex)
    q = fr.embed(z)
    val = evaluate(f, q)
    i = Q.from_vector(fr.i)
    ifi = Q.qmul(Q.qmul(i, val), i)
    g = split(f, fr)
    f1 = fr.embed(cpolyval(g.f1, z))
    f2j = fr.assemble(np.zeros_like(z), cpolyval(g.f2, z))
    res_1 = np.max(Q.norm((val - ifi) - 2.0 * f1))
    res_2 = np.max(Q.norm((val + ifi) - 2.0 * f2j))
    return float(res_1), float(res_2)


def _capped(n):
    if n > MAX_DEGREE:
        raise TruncationError(f"product degree {n} exceeds the cap {MAX_DEGREE}")


def star_product(f: QPowerSeries, g: QPowerSeries) -> QPowerSeries:
    """Coefficient convolution ``c_n = sum_k a_k b_{n-k}`` (order matters)."""
    n = f.degree + g.degree
    _capped(n)
    prods = Q.qmul(f.coeffs[:, None, :], g.coeffs[None, :, :])
    out = np.zeros((n + 1, 4))
    for k in range(f.coeffs.shape[0]):
        out[k:k + g.coeffs.shape[0]] += prods[k]
    return QPowerSeries(out, min(f.radius, g.radius))


def bullet_product(f: QPowerSeries, g: QPowerSeries, fr: Frame) -> QPowerSeries:
    """``P_{i,j}[f1 g1 + f2 g2 j]`` with both factors split along ``fr``."""
    _capped(f.degree + g.degree)
    sf, sg = split(f, fr), split(g, fr)
    h = SlicePair(fr, cpolymul(sf.f1, sg.f1), cpolymul(sf.f2, sg.f2), min(f.radius, g.radius))
    return h.reassemble()


def derivative(f: QPowerSeries) -> QPowerSeries:
    """Slice (Cullen) derivative: coefficients ``(n + 1) a_{n+1}``."""
    if f.degree == 0:
        return QPowerSeries(np.zeros((1, 4)), f.radius)
    n = np.arange(1, f.coeffs.shape[0])[:, None]
    return QPowerSeries(n * f.coeffs[1:], f.radius)


def roundtrip_PQ(f: QPowerSeries, fr: Frame, points) -> float:
    """Max of ``|P[Q[f]](q) - f(q)|`` over the given points."""
    points = np.asarray(points, dtype=float)
    return float(np.max(Q.norm(extend(split(f, fr), points) - evaluate(f, points))))


def roundtrip_QP(g: SlicePair) -> float:
    """Coefficient-level ``Q[P[g]] - g``."""
    back = split(g.reassemble(), g.frame)
    return float(max(np.max(np.abs(back.f1 - g.f1)), np.max(np.abs(back.f2 - g.f2))))


def random_series(rng: np.random.Generator, degree: int, radius: float = 1.0) -> QPowerSeries:
    """Coefficients uniform in ``[-1, 1]^4``, scaled so the series is well behaved on the ball."""
    c = rng.uniform(-1.0, 1.0, size=(degree + 1, 4))
    return QPowerSeries(c / radius ** np.arange(degree + 1)[:, None], radius)


def random_ball_points(rng: np.random.Generator, n: int, rmax: float) -> np.ndarray:
    """``n`` points uniform in direction with norm uniform in ``[0, rmax]``."""
    d = rng.standard_normal((n, 4))
    d /= np.linalg.norm(d, axis=1, keepdims=True)
    return d * rng.uniform(0.0, rmax, size=(n, 1))
