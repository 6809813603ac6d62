"""Planar building blocks: complex polynomials and harmonic polynomials.

Complex polynomials are 1-d complex arrays of coefficients in ascending
degree, the same order used for quaternion power series.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.polynomial import polynomial as P


def as_cpoly(c) -> np.ndarray:
    c = np.atleast_1d(np.asarray(c, dtype=complex))
    if c.ndim != 1 or c.size == 0:
        raise ValueError("polynomial needs a non-empty 1-d coefficient list")
    return c


def cpolyval(c, z):
    return P.polyval(np.asarray(z, dtype=complex), as_cpoly(c))


def cpolyder(c) -> np.ndarray:
    c = as_cpoly(c)
    if c.size == 1:
        return np.zeros(1, dtype=complex)
    return c[1:] * np.arange(1, c.size)


def cpolymul(a, b) -> np.ndarray:
    return np.convolve(as_cpoly(a), as_cpoly(b))


def from_roots(roots) -> np.ndarray:
    """Monic polynomial (ascending coefficients) with the given roots."""
    roots = np.asarray(roots, dtype=complex)
    if roots.size == 0:
        return np.ones(1, dtype=complex)
    return np.asarray(P.polyfromroots(roots), dtype=complex)


def trim(c, tol=1e-12) -> np.ndarray:
    """Drop high-degree coefficients below ``tol`` relative to the largest one.

    Returns an empty array when the polynomial is numerically zero.
    """
    c = as_cpoly(c)
    scale = np.max(np.abs(c))
    if scale == 0.0:
        return c[:0]
    keep = np.nonzero(np.abs(c) > tol * max(scale, 1.0))[0]
    if keep.size == 0:
        return c[:0]
    return c[: keep[-1] + 1]


def pad(c, n) -> np.ndarray:
    c = np.asarray(c)
    if c.shape[0] >= n:
        return c
    return np.concatenate([c, np.zeros((n - c.shape[0],) + c.shape[1:], dtype=c.dtype)])


@dataclass(frozen=True, eq=False)
class HarmonicPoly:
    """Harmonic polynomial ``u(x, y) = Re sum_n c_n (x + iy)^n``.

    The coefficients are kept so that partial derivatives, the holomorphic
    completion and the harmonic conjugate are all exact.
    """

    coeffs: np.ndarray

    def __post_init__(self):
        c = as_cpoly(self.coeffs).copy()
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    @property
    def degree(self) -> int:
        return self.coeffs.size - 1

    def __call__(self, x, y):
        return np.real(cpolyval(self.coeffs, np.asarray(x) + 1j * np.asarray(y)))

    def dx(self) -> "HarmonicPoly":
        """``u_x = Re p'(z)``."""
        return HarmonicPoly(cpolyder(self.coeffs))

    def dy(self) -> "HarmonicPoly":
        """``u_y = Re(i p'(z))``."""
        return HarmonicPoly(1j * cpolyder(self.coeffs))

    def gradient(self, x, y):
        z = np.asarray(x) + 1j * np.asarray(y)
        d = cpolyval(cpolyder(self.coeffs), z)
        return np.real(d), -np.imag(d)

    def completion(self) -> np.ndarray:
        """Coefficients of the holomorphic ``F`` with ``Re F = u`` and ``Im F(0) = 0``."""
        c = self.coeffs.copy()
        c[0] = c[0].real
        return c

    def conjugate(self) -> "HarmonicPoly":
        """Harmonic conjugate ``v`` normalized by ``v(0, 0) = 0``."""
        return HarmonicPoly(-1j * self.completion())

    def normalized(self) -> "HarmonicPoly":
        """Canonical representative of ``[u]`` (constants removed)."""
        c = self.coeffs.copy()
        c[0] = 0.0
        return HarmonicPoly(c)

    def __add__(self, other: "HarmonicPoly") -> "HarmonicPoly":
        n = max(self.coeffs.size, other.coeffs.size)
        return HarmonicPoly(pad(self.coeffs, n) + pad(other.coeffs, n))

    def __mul__(self, s: float) -> "HarmonicPoly":
        return HarmonicPoly(float(s) * self.coeffs)

    __rmul__ = __mul__

    def distance(self, other: "HarmonicPoly") -> float:
        """Max-norm of the coefficient difference."""
        n = max(self.coeffs.size, other.coeffs.size)
        return float(np.max(np.abs(pad(self.coeffs, n) - pad(other.coeffs, n))))

    def __repr__(self):
        return f"HarmonicPoly({self.coeffs.tolist()})"
