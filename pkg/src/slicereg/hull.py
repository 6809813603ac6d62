"""Planar convex hulls (Andrew's monotone chain) and containment tests."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np


def orientation(o, a, b) -> int:
    """Exact sign of ``cross(a - o, b - o)``; near-zero float results are redone in rationals."""
    v = (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
    bound = 1e-12 * (abs(a[0] - o[0]) + abs(a[1] - o[1])) * (abs(b[0] - o[0]) + abs(b[1] - o[1]))
    if abs(v) > bound:
        return 1 if v > 0 else -1
    if all(float(c).is_integer() and abs(c) < 2.0 ** 24 for p in (o, a, b) for c in p):
        return int(np.sign(v))  # float arithmetic is exact here
    o, a, b = ([Fraction(float(c)) for c in p] for p in (o, a, b))
    e = (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
    return (e > 0) - (e < 0)


def convex_hull_2d(points) -> np.ndarray:
    """Extreme points of a finite planar set, counter-clockwise.

    Collinear boundary points are dropped, so degenerate inputs come back as a
    single point or the two ends of a segment.  Returns shape ``(m, 2)``.
    """
    pts = np.asarray(points, dtype=float).reshape(-1, 2)
    if pts.shape[0] == 0:
        return pts
    pts = np.unique(pts, axis=0)
    if pts.shape[0] <= 2:
        return pts
    p = [tuple(x) for x in pts]  # np.unique sorts lexicographically

    lower: list = []
    for x in p:
        while len(lower) >= 2 and orientation(lower[-2], lower[-1], x) <= 0:
            lower.pop()
        lower.append(x)
    upper: list = []
    for x in reversed(p):
        while len(upper) >= 2 and orientation(upper[-2], upper[-1], x) <= 0:
            upper.pop()
        upper.append(x)
    hull = lower[:-1] + upper[:-1]
    return np.array(hull, dtype=float).reshape(-1, 2)


def _segment_distance(p, a, b):
    d = b - a
    t = np.clip(((p - a) @ d) / (d @ d), 0.0, 1.0)
    return np.linalg.norm(p - (a + t[:, None] * d), axis=1)


def hull_contains(polygon, points, tol: float = 1e-9) -> np.ndarray:
    """Boolean mask: which ``points`` lie in the hull inflated by ``tol``."""
    poly = np.asarray(polygon, dtype=float).reshape(-1, 2)
    pts = np.asarray(points, dtype=float).reshape(-1, 2)
    m = poly.shape[0]
    if m == 0:
        return np.zeros(pts.shape[0], dtype=bool)
    if m == 1:
        return np.linalg.norm(pts - poly[0], axis=1) <= tol
    if m == 2:
        return _segment_distance(pts, poly[0], poly[1]) <= tol
    inside = np.ones(pts.shape[0], dtype=bool)
    for k in range(m):
        a, b = poly[k], poly[(k + 1) % m]
        e = b - a
        side = (e[0] * (pts[:, 1] - a[1]) - e[1] * (pts[:, 0] - a[0])) / np.linalg.norm(e)
        inside &= side >= -tol
    return inside


def hull_distance(p, q) -> float:
    """Hausdorff distance between two hull vertex sets; empty matches only empty."""
    p = np.asarray(p, dtype=float).reshape(-1, 2)
    q = np.asarray(q, dtype=float).reshape(-1, 2)
    if p.shape[0] == 0 and q.shape[0] == 0:
        return 0.0
    if p.shape[0] == 0 or q.shape[0] == 0:
        return float("inf")
    d = np.linalg.norm(p[:, None, :] - q[None, :, :], axis=2)
    return float(max(d.min(axis=1).max(), d.min(axis=0).max()))


@dataclass(frozen=True, eq=False)
class SliceHull:
    """Convex hull of a finite subset of the slice ``C(slice)``.

    ``polygon`` holds ``(x, y)`` coordinates of ``x + y * slice``; it may be
    empty, a point, a segment or a proper polygon.
    """

    slice: np.ndarray
    polygon: np.ndarray

    @classmethod
    def of(cls, unit, points) -> "SliceHull":
        return cls(np.asarray(unit, dtype=float), convex_hull_2d(points))

    @property
    def empty(self) -> bool:
        return self.polygon.shape[0] == 0

    def contains(self, points, tol: float = 1e-9) -> np.ndarray:
        return hull_contains(self.polygon, points, tol)

    def distance(self, other: "SliceHull") -> float:
        return hull_distance(self.polygon, other.polygon)
