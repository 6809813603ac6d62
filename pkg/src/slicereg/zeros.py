"""Zero sets of monic slice regular polynomials, slice hulls, and the zero-data bundles.

For a frame ``(i, j)`` a polynomial restricts to ``C(i)`` as ``F + G j`` with
complex polynomials ``F`` (monic) and ``G``.  Since ``i F i = -F`` and
``i (G j) i = G j`` on the slice,

    f - i f i = 2 F,    f + i f i = 2 G j,

so ``Z(f - ifi) n C(i)`` are the roots of ``F`` and ``Z(f + ifi) n C(i)`` the
roots of ``G``.  The second slice ``C(j)`` is split along ``(j, ij)``.
Slice points are stored as complex numbers ``x + iy`` standing for
``x + y * unit``.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import quaternion as Q
from .errors import IdenticallyZeroComponent, InconsistentData, NotInPBSRB, NotPSRB, UniquenessViolation
from .hull import SliceHull, convex_hull_2d, hull_contains
from .planar import cpolyder, cpolyval, from_roots, pad, trim
from .quaternion import Frame
from .roots import RootSet, complex_roots
from .series import QPowerSeries, bullet_product

PSRB_TOL = 1e-10
COMMON_ROOT_TOL = 1e-8
LSQ_TOL = 1e-8
HULL_TOL = 1e-9
ZERO_SET_NAMES = ("s1", "s2", "s3", "s4")


@dataclass(frozen=True, eq=False)
class SlicePolynomial:
    """Monic ``f(q) = a_0 + q a_1 + ... + q^{n-1} a_{n-1} + q^n``.

    ``coeffs`` holds ``a_0 .. a_{n-1}`` with shape ``(n, 4)``; the leading
    ``1`` is implicit.
    """

    coeffs: np.ndarray

    def __post_init__(self):
        c = np.array(self.coeffs, dtype=float).reshape(-1, 4)
        if c.shape[0] < 1:
            raise ValueError("a monic slice polynomial needs degree >= 1")
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    @property
    def degree(self) -> int:
        return self.coeffs.shape[0]

    @property
    def full_coeffs(self) -> np.ndarray:
        return np.vstack([self.coeffs, Q.ONE])

    def series(self, radius: float = np.inf) -> QPowerSeries:
        return QPowerSeries(self.full_coeffs, radius)

    def __call__(self, q):
        return self.series()(q)

    def derivative_monic(self) -> "SlicePolynomial":
        """``f' / n``: same zeros as ``f'``, monic."""
        n = self.degree
        k = np.arange(1, n)[:, None]
        return SlicePolynomial(k * self.coeffs[1:] / n if n > 1 else np.zeros((0, 4)))

    def distance(self, other: "SlicePolynomial") -> float:
        if self.degree != other.degree:
            return float("inf")
        return float(np.max(Q.norm(self.coeffs - other.coeffs)))

    def __repr__(self):
        return f"SlicePolynomial({self.coeffs.tolist()})"


def monic(full_coeffs) -> SlicePolynomial:
    """From ``a_0 .. a_n`` with ``a_n = 1``."""
    c = np.asarray(full_coeffs, dtype=float).reshape(-1, 4)
    if not np.allclose(c[-1], Q.ONE, rtol=0, atol=1e-12):
        raise ValueError("leading coefficient must be 1")
    return SlicePolynomial(c[:-1])


def _full(f) -> np.ndarray:
    if isinstance(f, SlicePolynomial):
        return f.full_coeffs
    if isinstance(f, QPowerSeries):
        return f.coeffs
    return np.asarray(f, dtype=float).reshape(-1, 4)


def is_psrb(f) -> bool:
    """Whether the coefficient vector parts contain a basis of R^3."""
    v = _full(f)[:, 1:]
    if v.shape[0] < 3:
        return False
    return bool(np.linalg.svd(v, compute_uv=False)[2] > PSRB_TOL)


def components(f, fr: Frame):
    """Complex coefficient lists of ``F`` and ``G`` in ``f|C(i) = F + G j``."""
    c = fr.coords(_full(f))
    return c[:, 0] + 1j * c[:, 1], c[:, 2] + 1j * c[:, 3]


def second_frame(fr: Frame) -> Frame:
    """Frame ``(j, ij)`` used to split along the slice ``C(j)``."""
    return Frame(fr.j, fr.k)


def _component_roots(c) -> RootSet | None:
    """Roots of a component polynomial; ``None`` marks an identically zero one."""
    t = trim(c)
    if t.size == 0:
        return None
    if t.size == 1:
        return RootSet.empty()
    return complex_roots(t)


@dataclass(frozen=True, eq=False)
class ZeroData:
    """``(Z(f-ifi) n C(i), Z(f+ifi) n C(i), Z(f-jfj) n C(j), Z(f+jfj) n C(j))`` with the frame.

    A ``None`` entry marks a component that vanishes identically on its slice.
    """

    frame: Frame
    s1: RootSet | None
    s2: RootSet | None
    s3: RootSet | None
    s4: RootSet | None

    def sets(self):
        return dict(zip(ZERO_SET_NAMES, (self.s1, self.s2, self.s3, self.s4)))

    def require(self, name: str) -> RootSet:
        s = self.sets()[name]
        if s is None:
            raise IdenticallyZeroComponent(name)
        return s

    def matches(self, other: "ZeroData", tol: float = 1e-9) -> bool:
        if self.frame.distance(other.frame) > 1e-12:
            return False
        for a, b in zip(self.sets().values(), other.sets().values()):
            if (a is None) != (b is None):
                return False
            if a is not None and not a.matches(b, tol):
                return False
        return True

    def distance(self, other: "ZeroData") -> float:
        """Largest Hausdorff distance between corresponding sets."""
        d = 0.0
        for a, b in zip(self.sets().values(), other.sets().values()):
            if (a is None) != (b is None):
                return float("inf")
            if a is not None:
                d = max(d, a.hausdorff(b))
        return d


def component_zero_sets(f, fr: Frame) -> ZeroData:
    F, G = components(f, fr)
    F2, G2 = components(f, second_frame(fr))
    return ZeroData(fr, _component_roots(F), _component_roots(G),
                    _component_roots(F2), _component_roots(G2))


def zero_bundle_project(zd: ZeroData, degree: int, require_psrb: bool = True,
                        verify: bool = True) -> SlicePolynomial:
    """Rebuild the monic polynomial whose zero data is ``zd``.

    ``F`` is the monic polynomial with roots ``s1``; ``G = c m2`` with ``m2``
    monic from ``s2`` and ``c`` in ``C(i)`` unknown.  Splitting the candidate
    along ``(j, ij)`` must give a first component equal to the monic polynomial
    of ``s3`` and a second one proportional (factor ``d`` in ``C(j)``) to the
    monic polynomial of ``s4``.  Both conditions are real-linear in ``c`` and
    ``d``; they are solved by least squares and must be met to ``1e-8`` with a
    unique solution.
    """
    fr = zd.frame
    n = int(degree)
    s1 = zd.require("s1")
    if s1.total != n:
        raise InconsistentData(f"s1 carries {s1.total} roots, expected {n}")
    s3 = zd.require("s3")
    if s3.total != n:
        raise InconsistentData(f"s3 carries {s3.total} roots, expected {n}")
    F = pad(from_roots(s1.expanded()), n + 1)
    M3 = pad(from_roots(s3.expanded()), n + 1)
    if zd.s2 is None:
        m2 = np.zeros(n + 1, dtype=complex)
    else:
        if zd.s2.total >= n:
            raise InconsistentData("s2 must carry fewer roots than the degree")
        m2 = pad(from_roots(zd.s2.expanded()), n + 1)
    fr2 = second_frame(fr)
    base = fr2.coords(fr.assemble(F, np.zeros_like(F)))
    dir_re = fr2.coords(fr.assemble(np.zeros_like(m2), m2))
    dir_im = fr2.coords(fr.assemble(np.zeros_like(m2), 1j * m2))

    # unknowns: Re c, Im c, then Re d, Im d when s4 is present
    rows, rhs = [], []
    for k in range(n + 1):
        rows.append([dir_re[k, 0], dir_im[k, 0]])
        rhs.append(M3[k].real - base[k, 0])
        rows.append([dir_re[k, 1], dir_im[k, 1]])
        rhs.append(M3[k].imag - base[k, 1])
    with_d = zd.s4 is not None
    M4 = pad(from_roots(zd.s4.expanded()), n + 1) if with_d else np.zeros(n + 1, dtype=complex)
    for k in range(n + 1):
        # second component (coords 2, 3) equals d * M4_k
        rows.append([dir_re[k, 2], dir_im[k, 2]] + ([-M4[k].real, M4[k].imag] if with_d else []))
        rhs.append(-base[k, 2])
        rows.append([dir_re[k, 3], dir_im[k, 3]] + ([-M4[k].imag, -M4[k].real] if with_d else []))
        rhs.append(-base[k, 3])
    if with_d:
        rows[: 2 * (n + 1)] = [r + [0.0, 0.0] for r in rows[: 2 * (n + 1)]]
    A = np.array(rows)
    b = np.array(rhs)
    x, _, rank, _ = np.linalg.lstsq(A, b, rcond=None)
    if zd.s2 is not None and rank < A.shape[1]:
        raise InconsistentData("zero data does not determine the polynomial uniquely")
    resid = float(np.max(np.abs(A @ x - b)))
    if resid > LSQ_TOL:
        raise InconsistentData(f"no coefficient reproduces the second-slice data (residual {resid:.3g})")
    c = complex(x[0], x[1])
    full = fr.assemble(F, c * m2)
    full[-1] = Q.ONE
    f = SlicePolynomial(full[:-1])
    if require_psrb and not is_psrb(f):
        raise NotPSRB("reconstructed polynomial is not in PSRB")
    if verify:
        back = component_zero_sets(f, fr)
        if back.distance(zd) > 1e-6:
            raise InconsistentData("reconstruction does not reproduce the zero data")
    return f


def bullet_unit(c, fr: Frame, radius: float = np.inf) -> QPowerSeries:
    """The constant ``1 + c j`` with ``c`` in ``C(i)``."""
    return QPowerSeries(fr.assemble(np.array([1.0 + 0j]), np.array([complex(c)])), radius)


def bullet_relation_residual(f, g, fr: Frame, c) -> float:
    """Coefficient distance between ``f`` and ``g .(i,j) (1 + c j)``."""
    fs = QPowerSeries(_full(f), np.inf)
    gs = QPowerSeries(_full(g), np.inf)
    return fs.distance(bullet_product(gs, bullet_unit(c, fr), fr))


def solve_bullet_factor(f, g, fr: Frame, tol: float = 1e-10):
    """``c`` with ``f = g .(i,j) (1 + c j)``, or ``None`` when no such ``c`` exists."""
    Ff, Gf = components(f, fr)
    Fg, Gg = components(g, fr)
    n = max(Ff.size, Fg.size)
    Ff, Gf, Fg, Gg = (pad(x, n) for x in (Ff, Gf, Fg, Gg))
    if np.max(np.abs(Ff - Fg)) > tol:
        return None
    gg = np.vdot(Gg, Gg).real
    if gg == 0.0:
        return 1.0 + 0j if np.max(np.abs(Gf)) <= tol else None
    c = np.vdot(Gg, Gf) / gg
    if np.max(np.abs(Gf - c * Gg)) > tol:
        return None
    return complex(c)


def bullet_uniqueness_check(f, g, fr1: Frame, fr2: Frame, c1, c2, tol: float = 1e-10) -> bool:
    """Do ``f = g .1 (1 + c1 j1)`` and ``f = g .2 (1 + c2 j2)`` both hold?

    When they do and the slices differ, ``f`` and ``g`` must coincide for
    PSRB inputs; a violation raises `UniquenessViolation`.
    """
    if abs(abs(fr1.i @ fr2.i) - 1.0) <= 1e-12:
        raise ValueError("the two frames must have different slices")
    both = (bullet_relation_residual(f, g, fr1, c1) <= tol
            and bullet_relation_residual(f, g, fr2, c2) <= tol)
    if both and is_psrb(f) and is_psrb(g):
        d = float(np.max(Q.norm(pad(_full(f), len(_full(g))) - pad(_full(g), len(_full(f))))))
        if d > tol:
            raise UniquenessViolation(f"relations hold on two slices but f != g (distance {d:.3g})")
    return both


def _slice_zeros(full, unit) -> RootSet:
    fr = Q.frame_from_unit(np.asarray(unit, dtype=float))
    F, G = components(full, fr)
    roots = _component_roots(F)
    if roots is None:
        raise IdenticallyZeroComponent("F", "first slice component vanishes identically")
    g = trim(G)
    if g.size == 0 or len(roots) == 0:
        return roots
    keep = np.abs(cpolyval(g, roots.points)) <= COMMON_ROOT_TOL * max(1.0, np.max(np.abs(g)))
    return RootSet(roots.points[keep], roots.mult[keep])


def slice_zero_set(f, unit) -> RootSet:
    """``Z_f n C(unit)``: common roots of both split components on the slice."""
    return _slice_zeros(_full(f), unit)


def slice_hull(f, unit) -> SliceHull:
    return SliceHull.of(unit, slice_zero_set(f, unit).xy())


def skull(f, slices) -> list[SliceHull]:
    """Per-slice hulls of the slice zero sets; their union samples ``SKull``."""
    return [slice_hull(f, u) for u in np.asarray(slices, dtype=float).reshape(-1, 3)]


def _contained(inner: RootSet | None, outer: RootSet | None, tol) -> bool:
    if inner is None or len(inner) == 0:
        return True
    if outer is None:
        return False
    return bool(np.all(hull_contains(convex_hull_2d(outer.xy()), inner.xy(), tol)))


def gauss_lucas_report(f, fr: Frame, tol: float = HULL_TOL) -> dict:
    """Component-level and slice-level hull containment for ``f'`` against ``f``.

    Component level: roots of ``F'`` lie in the hull of the roots of ``F`` and
    likewise for ``G``.  Slice level: ``Z_{f'} n C(i)`` lies in the hull of
    ``Z_f n C(i)`` when both are nonempty.
    """
    full = _full(f)
    F, G = components(full, fr)
    report = {}
    for name, p in (("F", F), ("G", G)):
        t = trim(p)
        if t.size < 3:
            report[name] = True
            continue
        report[name] = _contained(complex_roots(cpolyder(t)), complex_roots(t), tol)
    df = np.arange(1, full.shape[0])[:, None] * full[1:]
    zf = _slice_zeros(full, fr.i)
    zd = _slice_zeros(df, fr.i) if df.shape[0] > 1 else RootSet.empty()
    report["slice"] = True if (len(zf) == 0 or len(zd) == 0) else _contained(zd, zf, tol)
    return report


def gauss_lucas_check(f, fr: Frame, tol: float = HULL_TOL) -> bool:
    return all(gauss_lucas_report(f, fr, tol).values())


@dataclass(frozen=True, eq=False)
class HullPair:
    """Element of the hull bundle: ``(Kull(Z_f n C(i)), Kull(Z_f n C(j)))`` and its generator."""

    frame: Frame
    first: SliceHull
    second: SliceHull
    poly: SlicePolynomial = field(repr=False)


def integrate_derivative(df: SlicePolynomial, degree: int, constant) -> SlicePolynomial:
    """Inverse of `SlicePolynomial.derivative_monic`: ``f`` from ``f'/n`` and ``a_0``."""
    n = int(degree)
    full = n * df.full_coeffs / np.arange(1, n + 1)[:, None]
    return SlicePolynomial(np.vstack([np.asarray(constant, dtype=float), full[:-1]]))


def gamma1(A: ZeroData, f: SlicePolynomial) -> HullPair:
    """``Gamma_1``: zero data of ``f'`` to the hull pair of ``f`` on ``C(i)`` and ``C(j)``."""
    fr = A.frame
    return HullPair(fr, slice_hull(f, fr.i), slice_hull(f, fr.j), f)


def project_hulls(h: HullPair, slices) -> list[SliceHull]:
    """``P_2``: hull pair to the sampled ``SKull`` of its generating polynomial."""
    return skull(h.poly, slices)


def gamma2(df: SlicePolynomial, degree: int, constant, slices) -> list[SliceHull]:
    """``Gamma_2``: ``f'`` (plus the constant it forgets) to the sampled ``SKull(Lambda_f)``."""
    return skull(integrate_derivative(df, degree, constant), slices)


def morphism_gamma(f: SlicePolynomial, fr: Frame, slices) -> dict:
    """Run both paths of the morphism square and measure how far they disagree.

    ``P_2(Gamma_1(A))`` uses the carried ``f``; ``Gamma_2(P_1(A))`` rebuilds
    ``f'`` from its zero data ``A``.  The slices ``i`` and ``j`` of the frame
    are prepended to the sample so the hull pair can be compared with the
    sampled ``SKull`` restricted to those slices.
    """
    df = f.derivative_monic()
    if not is_psrb(df):
        raise NotInPBSRB("f' is not in PSRB")
    sample = np.vstack([fr.i, fr.j, np.asarray(slices, dtype=float).reshape(-1, 3)])
    A = component_zero_sets(df, fr)
    pair = gamma1(A, f)
    top = project_hulls(pair, sample)
    df_rec = zero_bundle_project(A, df.degree)
    bottom = gamma2(df_rec, f.degree, f.coeffs[0], sample)
    square = max(h1.distance(h2) for h1, h2 in zip(top, bottom))
    fiber = max(pair.first.distance(bottom[0]), pair.second.distance(bottom[1]))
    return {"zero_data": A, "hull_pair": pair, "skull": bottom,
            "residual": max(square, fiber)}


def random_psrb(rng: np.random.Generator, degree: int, scale: float = 1.0) -> SlicePolynomial:
    """Monic polynomial with coefficients uniform in ``[-scale, scale]^4`` (retries until PSRB)."""
    if degree < 3:
        raise ValueError("a PSRB polynomial needs degree >= 3")
    while True:
        f = SlicePolynomial(rng.uniform(-scale, scale, size=(degree, 4)))
        if is_psrb(f):
            return f


def random_real_monic(rng: np.random.Generator, degree: int) -> SlicePolynomial:
    """Monic polynomial with real coefficients uniform in ``[-1, 1]``."""
    c = np.zeros((degree, 4))
    c[:, 0] = rng.uniform(-1, 1, size=degree)
    return SlicePolynomial(c)


def random_spherical_product(rng: np.random.Generator, degree: int, power: int = 1) -> SlicePolynomial:
    """``r(q)^power * g(q)``: ``r`` a real quadratic with nonreal roots, ``g`` random monic PSRB-like.

    Real coefficients commute with ``q``, so the roots of ``r`` sit on every
    slice and the slice zero sets are nonempty everywhere.
    """
    rest = degree - 2 * power
    if rest < 1:
        raise ValueError("degree must exceed twice the power")
    re, im = rng.uniform(-0.8, 0.8), rng.uniform(0.2, 0.9)
    r = np.array([re * re + im * im, -2 * re, 1.0])
    full = np.zeros((rest + 1, 4))
    full[:-1] = rng.uniform(-1, 1, size=(rest, 4))
    full[-1] = Q.ONE
    for _ in range(power):
        full = np.stack([np.convolve(r, full[:, m]) for m in range(4)], axis=1)
    return monic(full)
