"""The harmonic-pair fiber bundle over classes of slice regular functions.

Total-space elements are ``([a], [c], (i, j))`` with ``a, c`` harmonic and
``(i, j)`` a frame; the base space holds classes ``[f]`` of slice regular
functions modulo quaternion constants.  Classes are stored by canonical
representatives normalized at the origin, so class equality is a finite
coefficient comparison.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import quaternion as Q
from .errors import FrameMismatch
from .harmonic import PlanarPath, conjugate_harmonic, random_harmonic
from .planar import HarmonicPoly
from .quaternion import Frame
from .series import QPowerSeries, SlicePair, d_components, derivative, slice_coordinates

FRAME_MATCH_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class HarmonicClass:
    """``[a]``: harmonic polynomial modulo real constants, stored with ``rep(0, 0) = 0``."""

    rep: HarmonicPoly

    def __post_init__(self):
        object.__setattr__(self, "rep", self.rep.normalized())

    def distance(self, other: "HarmonicClass") -> float:
        return self.rep.distance(other.rep)


def harmonic_class(coeffs) -> HarmonicClass:
    if isinstance(coeffs, HarmonicPoly):
        return HarmonicClass(coeffs)
    return HarmonicClass(HarmonicPoly(coeffs))


ZERO_CLASS = HarmonicClass(HarmonicPoly([0.0]))


@dataclass(frozen=True, eq=False)
class BaseClass:
    """``[f]``: slice regular function modulo quaternion constants, ``rep(0) = 0``."""

    rep: QPowerSeries

    def __post_init__(self):
        c = np.array(self.rep.coeffs)
        c[0] = 0.0
        object.__setattr__(self, "rep", QPowerSeries(c, self.rep.radius))

    def distance(self, other: "BaseClass") -> float:
        return self.rep.distance(other.rep)

    def __add__(self, other: "BaseClass") -> "BaseClass":
        return BaseClass(self.rep + other.rep)

    def derivative(self) -> "BaseClass":
        return BaseClass(derivative(self.rep))


@dataclass(frozen=True, eq=False)
class TotalElement:
    a: HarmonicClass
    c: HarmonicClass
    frame: Frame
    radius: float = 1.0

    def distance(self, other: "TotalElement") -> float:
        """Coefficient max-norms of both classes plus the frame distance in R^6."""
        return (self.a.distance(other.a) + self.c.distance(other.c)
                + self.frame.distance(other.frame))


def project(el: TotalElement) -> BaseClass:
    """``P_Omega([a], [c], (i, j))``.

    ``F = a + i a~`` and ``G = c + i c~`` with conjugates based at the origin
    (exact on polynomial data), then ``P_{i,j}[F + G j]`` at coefficient level.
    """
    g = SlicePair(el.frame, el.a.rep.completion(), el.c.rep.completion(), el.radius)
    return BaseClass(g.reassemble())


def projected_value(el: TotalElement, q) -> np.ndarray:
    """Point value of a representative of ``P_Omega(el)`` at a single ``q``.

    Independent of `project`: the conjugates are line integrals along the
    segment from the origin, and the extension is the two-point formula.
    """
    x, y, iq = slice_coordinates(np.asarray(q, dtype=float), el.frame.i)
    x, y = float(x), float(y)

    def slice_value(yy):
        path = PlanarPath([[0.0, 0.0], [x, yy]])
        fa = el.a.rep(x, yy) + 1j * conjugate_harmonic(el.a.rep, path, el.radius)
        fc = el.c.rep(x, yy) + 1j * conjugate_harmonic(el.c.rep, path, el.radius)
        return el.frame.assemble(fa, fc)

    if x * x + y * y == 0.0:
        return slice_value(0.0)
    g_minus, g_plus = slice_value(-y), slice_value(y)
    iq_i = Q.qmul(Q.from_vector(iq), Q.from_vector(el.frame.i))
    return 0.5 * (Q.qmul(Q.ONE + iq_i, g_minus) + Q.qmul(Q.ONE - iq_i, g_plus))


def trivialize(u, fcl: BaseClass, fr: Frame) -> TotalElement:
    """``phi_u([f], (i, j)) = ([D1], [D3], (u i u*, u j u*))`` with D's along the rotated frame."""
    rf = Q.rotate_frame(u, fr)
    dc = d_components(fcl.rep, rf)
    return TotalElement(HarmonicClass(dc.d1), HarmonicClass(dc.d3), rf, fcl.rep.radius)


def section(fr: Frame, fcl: BaseClass) -> TotalElement:
    """``S_{i,j}([f]) = ([D1(f, i, j)], [D3(f, i, j)], (i, j))``."""
    return trivialize(Q.ONE, fcl, fr)


def inverse_trivialization(u, el: TotalElement):
    """``phi_u^{-1}``: the base class and the un-rotated frame."""
    u = Q.as_unit(u)
    return project(el), Q.rotate_frame(Q.conj(u), el.frame)


def compatibility_residual(u, v, fcl: BaseClass, fr: Frame) -> float:
    """Distance between ``phi_u([f], fr)`` and ``phi_v([f], R_{v* u}(fr))``."""
    p = Q.qmul(Q.conj(v), u)
    p = p / np.linalg.norm(p)
    return trivialize(u, fcl, fr).distance(trivialize(v, fcl, Q.rotate_frame(p, fr)))


def _same_frame(a: Frame, b: Frame):
    if a.distance(b) > FRAME_MATCH_TOL:
        raise FrameMismatch("elements live over different frames")


def add(A: TotalElement, B: TotalElement) -> TotalElement:
    _same_frame(A.frame, B.frame)
    return TotalElement(HarmonicClass(A.a.rep + B.a.rep), HarmonicClass(A.c.rep + B.c.rep),
                        A.frame, min(A.radius, B.radius))


def deriv_total(A: TotalElement) -> TotalElement:
    """``D([a], [c], fr) = ([a_x], [c_x], fr)``."""
    return TotalElement(HarmonicClass(A.a.rep.dx()), HarmonicClass(A.c.rep.dx()),
                        A.frame, A.radius)


def rotate_total(u, A: TotalElement) -> TotalElement:
    return TotalElement(A.a, A.c, Q.rotate_frame(u, A.frame), A.radius)


def conjugated_class(u, fcl: BaseClass) -> BaseClass:
    """``[P_{uiu*, uju*}[u Q_{i,j}[f] u*]]``.

    On ``C(i)``, ``u (sum z^n a_n) u* = sum (u z u*)^n (u a_n u*)``, so the
    extension from the rotated slice has coefficients ``u a_n u*``.
    """
    u = Q.as_unit(u)
    return BaseClass(QPowerSeries(Q.rotate(u, fcl.rep.coeffs), fcl.rep.radius))


def additivity_residual(A: TotalElement, B: TotalElement) -> float:
    return project(add(A, B)).distance(project(A) + project(B))


def derivative_residual(A: TotalElement) -> float:
    return project(A).derivative().distance(project(deriv_total(A)))


def rotation_residual(u, A: TotalElement) -> float:
    """Class distance between ``P(R_u(A))`` and ``P_{uiu*,uju*}[u Q_{i,j}[P(A)] u*]``."""
    return project(rotate_total(u, A)).distance(conjugated_class(u, project(A)))


def fiber_of(fcl: BaseClass, frames) -> list[TotalElement]:
    """Sampled fiber over ``[f]``: one section value per frame."""
    return [section(fr, fcl) for fr in frames]


def base_class(coeffs, radius: float = 1.0) -> BaseClass:
    return BaseClass(QPowerSeries(np.asarray(coeffs, dtype=float), radius))


def random_total(rng: np.random.Generator, degree: int, frame: Frame | None = None,
                 radius: float = 1.0) -> TotalElement:
    fr = frame if frame is not None else Q.random_frame(rng)
    return TotalElement(HarmonicClass(random_harmonic(rng, degree, radius)),
                        HarmonicClass(random_harmonic(rng, degree, radius)), fr, radius)

