"""Harmonic conjugates and Schwarz-type reconstructions on a disk/ball.

Line integrals use Gauss-Legendre quadrature per polyline segment; circle
integrals use the periodic trapezoid rule on ``N`` equispaced samples, which
is exact for trigonometric polynomials below the Nyquist degree.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.polynomial.legendre import leggauss

from . import quaternion as Q
from .errors import EndpointMismatch, OutOfDomain, PathOutsideDomain, TraceMismatch
from .planar import HarmonicPoly
from .quaternion import Frame
from .series import MAX_DEGREE, QPowerSeries, slice_coordinates

GAUSS_POINTS = 16
DEFAULT_N = 256
FD_STEP = 1e-6

_GL_NODES, _GL_WEIGHTS = leggauss(GAUSS_POINTS)


@dataclass(frozen=True, eq=False)
class PlanarPath:
    """Polyline through ``vertices`` (shape ``(m, 2)``, ``m >= 2``)."""

    vertices: np.ndarray

    def __post_init__(self):
        v = np.array(self.vertices, dtype=float)
        if v.ndim != 2 or v.shape[1] != 2 or v.shape[0] < 2:
            raise ValueError("a path needs at least two (x, y) vertices")
        v.setflags(write=False)
        object.__setattr__(self, "vertices", v)

    @property
    def start(self):
        return self.vertices[0]

    @property
    def end(self):
        return self.vertices[-1]

    def inside(self, rho: float) -> bool:
        return bool(np.all(np.hypot(self.vertices[:, 0], self.vertices[:, 1]) < rho))


@dataclass(frozen=True, eq=False)
class BoundaryTrace:
    """Samples ``u(rho cos t_k, rho sin t_k)`` at ``t_k = 2 pi k / N``."""

    rho: float
    samples: np.ndarray

    def __post_init__(self):
        s = np.array(self.samples, dtype=float)
        n = s.size
        if s.ndim != 1 or n < 16 or n & (n - 1):
            raise ValueError(f"trace needs a power-of-two number (>= 16) of samples, got {n}")
        if not self.rho > 0:
            raise ValueError("rho must be positive")
        s.setflags(write=False)
        object.__setattr__(self, "samples", s)
        object.__setattr__(self, "rho", float(self.rho))

    @property
    def n(self) -> int:
        return self.samples.size

    @property
    def angles(self) -> np.ndarray:
        return 2.0 * np.pi * np.arange(self.n) / self.n


def trace_of(u, rho: float = 1.0, n: int = DEFAULT_N) -> BoundaryTrace:
    """Sample a harmonic polynomial (or any callable ``u(x, y)``) on the circle."""
    t = 2.0 * np.pi * np.arange(n) / n
    return BoundaryTrace(rho, u(rho * np.cos(t), rho * np.sin(t)))


def _segment_integral(grad, path: PlanarPath) -> float:
    p0 = path.vertices[:-1]
    d = np.diff(path.vertices, axis=0)
    s = 0.5 * (_GL_NODES + 1.0)
    pts = p0[:, None, :] + s[None, :, None] * d[:, None, :]
    ux, uy = grad(pts[..., 0], pts[..., 1])
    integrand = -uy * d[:, None, 0] + ux * d[:, None, 1]
    return float(0.5 * np.sum(integrand * _GL_WEIGHTS[None, :]))


def conjugate_harmonic(u: HarmonicPoly, path: PlanarPath, rho: float = 1.0) -> float:
    """Line integral of ``-u_y dx + u_x dy`` along ``path``.

    Returns the conjugate ``v`` at the path's end point, normalized by
    ``v(start) = 0``.  Partials of ``u`` are exact.
    """
    if not path.inside(rho):
        raise PathOutsideDomain(f"path leaves the disk of radius {rho}")
    return _segment_integral(u.gradient, path)


def conjugate_harmonic_callable(u, path: PlanarPath, rho: float = 1.0, h: float = FD_STEP) -> float:
    """Same integral for a black-box ``u(x, y)`` using central differences.

    Accuracy is limited by the difference step (roughly ``1e-9`` relative at
    best); prefer `conjugate_harmonic` when a polynomial form is known.
    """
    if not path.inside(rho):
        raise PathOutsideDomain(f"path leaves the disk of radius {rho}")

    def grad(x, y):
        return (u(x + h, y) - u(x - h, y)) / (2 * h), (u(x, y + h) - u(x, y - h)) / (2 * h)

    return _segment_integral(grad, path)


def path_independence_residual(u: HarmonicPoly, path_a: PlanarPath, path_b: PlanarPath,
                               rho: float = 1.0) -> float:
    if not (np.allclose(path_a.start, path_b.start, rtol=0, atol=1e-14)
            and np.allclose(path_a.end, path_b.end, rtol=0, atol=1e-14)):
        raise EndpointMismatch("paths must share both end points")
    return abs(conjugate_harmonic(u, path_a, rho) - conjugate_harmonic(u, path_b, rho))


def schwarz_complex(trace: BoundaryTrace, z, lam: float = 0.0):
    """Holomorphic ``F`` with ``Re F = u`` on the disk, ``Im F(0) = lam``.

    Periodic trapezoid rule for ``1/2pi int u(w) (w + z)/(w - z) dt``,
    ``w = rho e^{it}``.
    """
    z = np.asarray(z, dtype=complex)
    if np.any(np.abs(z) >= trace.rho):
        raise OutOfDomain(f"|z| must be below {trace.rho}")
    w = trace.rho * np.exp(1j * trace.angles)
    kernel = (w + z[..., None]) / (w - z[..., None])
    return np.mean(trace.samples * kernel, axis=-1) + 1j * lam


def _check_pair(a: BoundaryTrace, c: BoundaryTrace):
    if a.n != c.n or a.rho != c.rho:
        raise TraceMismatch("traces must share the sample count and radius")


def fourier_modes(trace: BoundaryTrace, nmax: int) -> np.ndarray:
    """``(1/pi) int (rho e^{it})^{-n} u dt`` for ``n = 0..nmax`` (trapezoid rule).

    Entry 0 is the plain mean ``(1/2pi) int u dt``.
    """
    n = np.arange(nmax + 1)
    e = np.exp(-1j * np.outer(n, trace.angles))
    m = 2.0 * (e @ trace.samples) / trace.n * trace.rho ** (-n.astype(float))
    m[0] = np.mean(trace.samples)
    return m


def quaternionic_schwarz_coeffs(a: BoundaryTrace, c: BoundaryTrace, fr: Frame,
                                nmax: int | None = None) -> QPowerSeries:
    """Power-series coefficients of the slice regular ``f`` whose splitting
    components have real parts ``a`` and ``c`` on the boundary circle.

    ``u_0 = 1/2pi int (a + c j) dt`` and
    ``u_n = 1/pi int (rho e^{it})^{-n} (a + c j) dt``; the factor
    ``(rho e^{it})^{-n}`` lives in ``C(i)`` and multiplies from the left.
    """
    _check_pair(a, c)
    if nmax is None:
        nmax = min(a.n // 4, MAX_DEGREE)
    if nmax >= a.n // 2:
        raise ValueError(f"nmax={nmax} aliases with {a.n} samples")
    return QPowerSeries(fr.assemble(fourier_modes(a, nmax), fourier_modes(c, nmax)), a.rho)


def _series_truncation(ratio: float) -> int:
    if ratio <= 0.0:
        return 1
    return int(min(4096, max(1, np.ceil(np.log(1e-18) / np.log(ratio)))))


def quaternionic_schwarz_eval(a: BoundaryTrace, c: BoundaryTrace, fr: Frame, q,
                              lam1: float = 0.0, lam2: float = 0.0) -> np.ndarray:
    """Evaluate the quaternionic Schwarz integral at ``q`` through its kernel.

    For every node ``t_k`` the kernel ``1 + sum_n q^n 2 (rho e^{i t_k})^{-n}``
    is summed at the point ``q`` (until the tail drops below 1e-18), multiplied
    on the right by ``a_k + c_k j`` and averaged; ``lam1 i + lam2 ij`` is then
    added.  ``q`` may be a batch ``(..., 4)``.
    """
    _check_pair(a, c)
    q = np.asarray(q, dtype=float)
    rq = Q.norm(q)
    if np.any(rq >= a.rho):
        raise OutOfDomain(f"|q| must be below {a.rho}")
    batch = q.shape[:-1]
    qf = q.reshape(-1, 4)
    x, y, iq = slice_coordinates(qf, fr.i)
    m = _series_truncation(float(np.max(rq, initial=0.0)) / a.rho)

    # q^n = Re(z^n) + I_q Im(z^n) with z = x + iy
    z = x + 1j * y
    zn = np.cumprod(np.repeat(z[:, None], m, axis=1), axis=1)
    n = np.arange(1, m + 1)
    # (rho e^{it})^{-n} = alpha + beta i
    wn = a.rho ** (-n.astype(float))[:, None] * np.exp(-1j * np.outer(n, a.angles))
    s_ra = zn.real @ wn.real
    s_rb = zn.real @ wn.imag
    s_sa = zn.imag @ wn.real
    s_sb = zn.imag @ wn.imag

    i_q = Q.from_vector(fr.i)
    iq_q = Q.from_vector(iq)
    iq_i = Q.qmul(iq_q, i_q)
    kernel = (Q.ONE
              + 2.0 * (s_ra[..., None] * Q.ONE
                       + s_rb[..., None] * i_q
                       + s_sa[..., None] * iq_q[:, None, :]
                       + s_sb[..., None] * iq_i[:, None, :]))
    data = fr.assemble(a.samples.astype(complex), c.samples.astype(complex))
    val = np.mean(Q.qmul(kernel, data[None, :, :]), axis=1)
    val = val + lam1 * i_q + lam2 * Q.from_vector(fr.k)
    return val.reshape(batch + (4,))


def random_harmonic(rng: np.random.Generator, degree: int, rho: float = 1.0) -> HarmonicPoly:
    """Random harmonic polynomial, coefficients scaled by ``rho^-n`` so traces stay O(1)."""
    c = rng.standard_normal(degree + 1) + 1j * rng.standard_normal(degree + 1)
    return HarmonicPoly(c / rho ** np.arange(degree + 1) / np.sqrt(degree + 1))


def random_polyline(rng: np.random.Generator, start, end, n_mid: int, rmax: float) -> PlanarPath:
    """Polyline from ``start`` to ``end`` through ``n_mid`` random points in the disk ``rmax``."""
    r = rmax * np.sqrt(rng.uniform(size=n_mid))
    t = rng.uniform(0, 2 * np.pi, size=n_mid)
    mid = np.stack([r * np.cos(t), r * np.sin(t)], axis=1)
    return PlanarPath(np.vstack([start, mid, end]))
