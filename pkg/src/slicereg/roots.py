"""Complex polynomial roots by Durand-Kerner (Weierstrass) iteration."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateLeadingCoefficient
from .planar import as_cpoly, cpolyder, cpolyval

MAX_ITER = 500
STEP_TOL = 1e-13
CLUSTER_TOL = 1e-7
STALL_ITER = 40
MERGE_RADIUS = 1e-4
MULT_TOL = 1e-12
ANGLE_OFFSET = 0.6180339887498949  # irrational, keeps the start off symmetry axes


@dataclass(frozen=True, eq=False)
class RootSet:
    """Finite multiset of complex points: distinct ``points`` with positive ``mult``."""

    points: np.ndarray
    mult: np.ndarray

    def __post_init__(self):
        p = np.asarray(self.points, dtype=complex).reshape(-1)
        m = np.asarray(self.mult, dtype=int).reshape(-1)
        if p.shape != m.shape or np.any(m <= 0):
            raise ValueError("multiplicities must be positive, one per point")
        order = np.lexsort((p.imag, p.real))
        object.__setattr__(self, "points", p[order])
        object.__setattr__(self, "mult", m[order])

    @classmethod
    def empty(cls) -> "RootSet":
        return cls(np.zeros(0, dtype=complex), np.zeros(0, dtype=int))

    @property
    def total(self) -> int:
        return int(self.mult.sum())

    def __len__(self):
        return self.points.size

    def expanded(self) -> np.ndarray:
        return np.repeat(self.points, self.mult)

    def xy(self) -> np.ndarray:
        return np.stack([self.points.real, self.points.imag], axis=1)

    def hausdorff(self, other: "RootSet") -> float:
        return hausdorff(self.points, other.points)

    def matches(self, other: "RootSet", tol: float = 1e-9) -> bool:
        """Multiset equality up to ``tol`` per point."""
        if len(self) != len(other) or not np.array_equal(self.mult, other.mult):
            return False
        return self.hausdorff(other) <= tol

    def __repr__(self):
        items = ", ".join(f"{p:.6g}x{m}" if m > 1 else f"{p:.6g}"
                          for p, m in zip(self.points, self.mult))
        return f"RootSet({{{items}}})"


def hausdorff(a, b) -> float:
    a = np.asarray(a, dtype=complex).reshape(-1)
    b = np.asarray(b, dtype=complex).reshape(-1)
    if a.size == 0 and b.size == 0:
        return 0.0
    if a.size == 0 or b.size == 0:
        return float("inf")
    d = np.abs(a[:, None] - b[None, :])
    return float(max(d.min(axis=1).max(), d.min(axis=0).max()))


def durand_kerner(coeffs) -> np.ndarray:
    """All roots (with repetition) of a polynomial given in ascending order."""
    c = as_cpoly(coeffs)
    lead = c[-1]
    if c.size < 2:
        raise ValueError("degree must be at least 1")
    if lead == 0 or abs(lead) <= 1e-14 * np.max(np.abs(c)):
        raise DegenerateLeadingCoefficient(f"leading coefficient {lead} is (numerically) zero")
    c = c / lead
    n = c.size - 1
    if n == 1:
        return np.array([-c[0]])
    radius = 1.0 + np.max(np.abs(c[:-1]))
    z = radius * np.exp(1j * (2 * np.pi * np.arange(n) / n + ANGLE_OFFSET))
    best, stale = np.inf, 0
    for _ in range(MAX_ITER):
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, 1.0)
        denom = diff.prod(axis=1)
        denom[denom == 0] = 1e-300
        step = (np.vander(z, n + 1, increasing=True) @ c) / denom
        z = z - step
        size = np.max(np.abs(step))
        if size <= STEP_TOL * max(1.0, np.max(np.abs(z))):
            break
        # repeated roots stall at a noise floor well above STEP_TOL
        if size < 0.5 * best:
            best, stale = size, 0
        else:
            stale += 1
            if stale >= STALL_ITER:
                break
    return _polish(c, z)


def _polish(c, z):
    """Two guarded Newton steps per root; a step is kept only if it lowers |p|."""
    dc = cpolyder(c)
    for _ in range(2):
        p = cpolyval(c, z)
        dp = cpolyval(dc, z)
        ok = np.abs(dp) > 1e-8 * np.maximum(1.0, np.abs(z)) ** (c.size - 2)
        trial = np.where(ok, z - p / np.where(ok, dp, 1.0), z)
        better = np.abs(cpolyval(c, trial)) < np.abs(p)
        z = np.where(better, trial, z)
    return z


def cluster(z, tol: float = CLUSTER_TOL) -> RootSet:
    """Group approximations closer than ``tol * max(1, |z|)``; centroids carry the multiplicity."""
    z = np.asarray(z, dtype=complex)
    n = z.size
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for a in range(n):
        for b in range(a + 1, n):
            if abs(z[a] - z[b]) <= tol * max(1.0, abs(z[a])):
                parent[find(a)] = find(b)
    groups: dict[int, list[int]] = {}
    for a in range(n):
        groups.setdefault(find(a), []).append(a)
    pts = np.array([z[g].mean() for g in groups.values()], dtype=complex)
    mult = np.array([len(g) for g in groups.values()], dtype=int)
    return RootSet(pts, mult)


def complex_roots(coeffs, cluster_tol: float = CLUSTER_TOL) -> RootSet:
    """Roots with multiplicities of ``sum_k c_k z^k`` (ascending coefficients).

    Approximations within ``cluster_tol`` are merged.  Repeated roots that the
    iteration leaves further apart (a root of multiplicity ``m`` is only
    resolved to about ``eps^(1/m)``) are merged when the refined centroid
    annihilates the first ``m - 1`` derivatives to working accuracy.

    >>> complex_roots([-1, 0, 1])
    RootSet({-1+0j, 1+0j})
    """
    c = as_cpoly(coeffs)
    if c.size == 0 or c[-1] == 0 or abs(c[-1]) <= 1e-14 * np.max(np.abs(c)):
        raise DegenerateLeadingCoefficient("leading coefficient is (numerically) zero")
    c = c / c[-1]
    rs = cluster(durand_kerner(c), cluster_tol)
    if len(rs) > 1:
        rs = _merge_near_multiple(c, rs)
    if np.all(rs.mult == 1):
        return rs
    return RootSet(_refine_multiple(c, rs), rs.mult)


def _derivatives(c, m):
    out = [c]
    for _ in range(m):
        out.append(cpolyder(out[-1]))
    return out


def _newton_on(d, z, steps=4):
    dd = cpolyder(d)
    for _ in range(steps):
        den = cpolyval(dd, z)
        if den == 0:
            break
        z = z - cpolyval(d, z) / den
    return z


def _is_multiple_root(c, z, m) -> bool:
    """``|p^(k)(z)| <= MULT_TOL * (sum_j |c_j| |z|^j)^(k)`` for ``k < m``."""
    absc = np.abs(c)
    for k, (d, a) in enumerate(zip(_derivatives(c, m - 1), _derivatives(absc, m - 1))):
        bound = np.real(cpolyval(a, abs(z))) if a.size else 0.0
        if abs(cpolyval(d, z)) > MULT_TOL * max(bound, 1e-300):
            return False
    return True


def _merge_near_multiple(c, rs: RootSet) -> RootSet:
    pts, mult = list(rs.points), list(rs.mult)
    merged = True
    while merged:
        merged = False
        best = None
        for a in range(len(pts)):
            for b in range(a + 1, len(pts)):
                d = abs(pts[a] - pts[b])
                if d <= MERGE_RADIUS * max(1.0, abs(pts[a])) and (best is None or d < best[0]):
                    best = (d, a, b)
        if best is None:
            break
        _, a, b = best
        m = mult[a] + mult[b]
        z = (mult[a] * pts[a] + mult[b] * pts[b]) / m
        z = _newton_on(_derivatives(c, m - 1)[-1], z)
        if _is_multiple_root(c, z, m):
            pts[a], mult[a] = z, m
            del pts[b], mult[b]
            merged = True
    return RootSet(np.array(pts, dtype=complex), np.array(mult, dtype=int))


def _refine_multiple(c, rs: RootSet) -> np.ndarray:
    """Newton on ``p^(m-1)``, where a root of multiplicity ``m`` is simple.

    Durand-Kerner converges only linearly to repeated roots, leaving the
    cluster centroid around ``1e-9`` off; a few steps here restore full
    accuracy.  A step is discarded if it leaves the cluster neighbourhood.
    """
    pts = rs.points.copy()
    for k, m in enumerate(rs.mult):
        if m == 1:
            continue
        z = _newton_on(_derivatives(c, m - 1)[-1], pts[k])
        if abs(z - pts[k]) <= 1e-6 * max(1.0, abs(pts[k])):
            pts[k] = z
    return pts


def residual_ok(coeffs, roots, tol: float = 1e-9) -> bool:
    """``|p(r)| <= tol (1 + |r|)^deg`` for the monic-normalized ``p``."""
    c = as_cpoly(coeffs)
    c = c / c[-1]
    r = np.asarray(roots, dtype=complex)
    return bool(np.all(np.abs(cpolyval(c, r)) <= tol * (1.0 + np.abs(r)) ** (c.size - 1)))
