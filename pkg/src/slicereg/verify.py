"""Randomized verification suites for every module, driven by one seed.

Each suite returns a list of `Check` records; a suite passes when all of its
checks do.  Suites numbered 1-8 are the acceptance criteria, the rest are
module invariants.  Timing is measured but kept out of the deterministic
report.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np

from . import bundle as B
from . import quaternion as Q
from . import zeros as Z
from .harmonic import (conjugate_harmonic, conjugate_harmonic_callable,
                       path_independence_residual, quaternionic_schwarz_coeffs, quaternionic_schwarz_eval,
                       random_harmonic, random_polyline, schwarz_complex, trace_of)
from .hull import convex_hull_2d, orientation
from .planar import HarmonicPoly, cpolyval, pad
from .roots import complex_roots, residual_ok
from .series import (QPowerSeries, SlicePair, bullet_product, d_components, d_components_pointwise,
                     derivative, evaluate, extend, random_ball_points, random_series, representation_from_series,
                     roundtrip_PQ, roundtrip_QP, slice_identities_check, star_product)

DEFAULT_TOLERANCES = {
    "roundtrip": 1e-10,
    "representation": 1e-10,
    "conjugate": 1e-10,
    "schwarz_coeffs": 1e-12,
    "schwarz_paths": 1e-9,
    "bundle": 1e-10,
    "zero_bundle": 1e-9,
    "hull_inflation": 1e-9,
    "gamma": 1e-9,
    "finite_difference": 1e-8,
    "root_residual": 1e-9,
    "algebra": 1e-12,
    "slice_identities": 1e-12,
    "star": 1e-10,
    "bullet": 1e-10,
    "perturbation": 1e-6,
}


@dataclass
class RunConfig:
    seed: int = 0
    samples: int | None = None
    quadrature_n: int = 256
    tolerances: dict = field(default_factory=dict)
    output_format: str = "json"

    def __post_init__(self):
        n = self.quadrature_n
        if n < 16 or n & (n - 1):
            raise ValueError("quadrature_n must be a power of two >= 16")
        if self.samples is not None and self.samples < 1:
            raise ValueError("samples must be >= 1")
        if self.seed < 0:
            raise ValueError("seed must be non-negative")
        unknown = set(self.tolerances) - set(DEFAULT_TOLERANCES)
        if unknown:
            raise ValueError(f"unknown tolerance names: {sorted(unknown)}")
        if self.output_format not in ("json", "csv"):
            raise ValueError("output format must be json or csv")

    def tol(self, name: str) -> float:
        return float(self.tolerances.get(name, DEFAULT_TOLERANCES[name]))

    def count(self, default: int) -> int:
        return int(self.samples) if self.samples is not None else default


@dataclass
class Check:
    """``kind`` is ``max`` (value <= tol), ``min`` (value >= tol) or ``count`` (no failures)."""

    label: str
    value: float
    tol: float
    kind: str = "max"

    @property
    def passed(self) -> bool:
        if self.kind == "max":
            return bool(self.value <= self.tol)
        if self.kind == "min":
            return bool(self.value >= self.tol)
        return self.value == 0


@dataclass
class SuiteResult:
    name: str
    criterion: int | None
    checks: list
    count: int
    seconds: float
    budget: float | None

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


# 1 -----------------------------------------------------------------------

def suite_roundtrip(cfg: RunConfig, rng):
    n = cfg.count(200)
    pq = qp = qp_pt = 0.0
    for _ in range(n):
        rho = rng.uniform(0.5, 2.0)
        f = random_series(rng, int(rng.integers(0, 17)), rho)
        fr = Q.random_frame(rng)
        pq = max(pq, roundtrip_PQ(f, fr, random_ball_points(rng, 50, 0.9 * rho)))
        d = int(rng.integers(0, 17))
        g = SlicePair(fr, _rand_complex(rng, d + 1) / rho ** np.arange(d + 1),
                      _rand_complex(rng, d + 1) / rho ** np.arange(d + 1), rho)
        qp = max(qp, roundtrip_QP(g))
        z = 0.9 * rho * np.sqrt(rng.uniform(size=50)) * np.exp(2j * np.pi * rng.uniform(size=50))
        qp_pt = max(qp_pt, float(np.max(Q.norm(extend(g, fr.embed(z)) - g(z)))))
    tol = cfg.tol("roundtrip")
    return n, [Check("P(Q(f)) - f pointwise", pq, tol), Check("Q(P(g)) - g coefficients", qp, tol),
               Check("Q(P(g)) - g on the slice", qp_pt, tol)]


def _rand_complex(rng, n):
    return rng.uniform(-1, 1, n) + 1j * rng.uniform(-1, 1, n)


# 2 -----------------------------------------------------------------------

def suite_representation(cfg: RunConfig, rng):
    n = cfg.count(1000)
    worst = 0.0
    for _ in range(n):
        rho = rng.uniform(0.5, 2.0)
        f = random_series(rng, int(rng.integers(0, 17)), rho)
        i, target = Q.random_imaginary_unit(rng), Q.random_imaginary_unit(rng)
        r, t = 0.9 * rho * np.sqrt(rng.uniform()), rng.uniform(0, 2 * np.pi)
        x, y = r * np.cos(t), r * np.sin(t)
        got = representation_from_series(f, i, target, x, y)
        want = evaluate(f, x * Q.ONE + y * Q.from_vector(target))
        worst = max(worst, float(Q.norm(got - want)))
    return n, [Check("representation vs direct evaluation", worst, cfg.tol("representation"))]


# 3 -----------------------------------------------------------------------

def suite_conjugate(cfg: RunConfig, rng):
    n = cfg.count(200)
    worst = 0.0
    for k in range(n):
        deg = 1 + k % 8
        u = HarmonicPoly(np.eye(deg + 1)[deg])
        a, b = _disk_point(rng, 0.95), _disk_point(rng, 0.95)
        path = random_polyline(rng, a, b, int(rng.integers(0, 5)), 0.95)
        want = (complex(*b) ** deg).imag - (complex(*a) ** deg).imag
        worst = max(worst, abs(conjugate_harmonic(u, path) - want))
    indep = 0.0
    for _ in range(n):
        u = random_harmonic(rng, int(rng.integers(1, 9)))
        a, b = _disk_point(rng, 0.95), _disk_point(rng, 0.95)
        p1 = random_polyline(rng, a, b, int(rng.integers(0, 5)), 0.95)
        p2 = random_polyline(rng, a, b, int(rng.integers(0, 5)), 0.95)
        indep = max(indep, path_independence_residual(u, p1, p2))
    tol = cfg.tol("conjugate")
    return 2 * n, [Check("conjugate of Re z^n vs Im z^n", worst, tol),
                   Check("path independence", indep, tol)]


def _disk_point(rng, rmax):
    r, t = rmax * np.sqrt(rng.uniform()), rng.uniform(0, 2 * np.pi)
    return np.array([r * np.cos(t), r * np.sin(t)])


# 4 -----------------------------------------------------------------------

def suite_schwarz(cfg: RunConfig, rng):
    n = cfg.count(40)
    N = cfg.quadrature_n
    coeff_err = path_err = 0.0
    n_paths = min(n, 10)
    for k in range(n):
        deg = int(rng.integers(0, min(33, N // 4 + 1)))
        a, c = random_harmonic(rng, deg), random_harmonic(rng, deg)
        fr = Q.random_frame(rng)
        ta, tc = trace_of(a, 1.0, N), trace_of(c, 1.0, N)
        got = quaternionic_schwarz_coeffs(ta, tc, fr)
        m = got.coeffs.shape[0]
        want = fr.assemble(pad(a.completion(), m), pad(c.completion(), m))
        coeff_err = max(coeff_err, float(np.max(Q.norm(got.coeffs - want))))
        if k < n_paths:
            pts = random_ball_points(rng, 100 // n_paths + (k < 100 % n_paths), 0.9)
            kern = quaternionic_schwarz_eval(ta, tc, fr, pts)
            path_err = max(path_err, float(np.max(Q.norm(kern - evaluate(got, pts)))))
    return n, [Check("coefficients vs closed form", coeff_err, cfg.tol("schwarz_coeffs")),
               Check("kernel vs coefficient series", path_err, cfg.tol("schwarz_paths"))]


# 5 -----------------------------------------------------------------------

def suite_bundle(cfg: RunConfig, rng):
    n = cfg.count(100)
    r = dict.fromkeys(["project.section", "project.trivialize", "compatibility", "additivity",
                       "derivative", "rotation", "point route"], 0.0)
    for _ in range(n):
        rho = rng.uniform(0.5, 2.0)
        fcl = B.BaseClass(random_series(rng, int(rng.integers(1, 13)), rho))
        fr = Q.random_frame(rng)
        u, v = Q.random_unit_quaternion(rng), Q.random_unit_quaternion(rng)
        r["project.section"] = max(r["project.section"], B.project(B.section(fr, fcl)).distance(fcl))
        r["project.trivialize"] = max(r["project.trivialize"],
                                      B.project(B.trivialize(u, fcl, fr)).distance(fcl))
        r["compatibility"] = max(r["compatibility"], B.compatibility_residual(u, v, fcl, fr))
        A = B.random_total(rng, int(rng.integers(1, 13)), fr, rho)
        C = B.random_total(rng, int(rng.integers(1, 13)), fr, rho)
        r["additivity"] = max(r["additivity"], B.additivity_residual(A, C))
        r["derivative"] = max(r["derivative"], B.derivative_residual(A))
        r["rotation"] = max(r["rotation"], B.rotation_residual(u, A))
        q = random_ball_points(rng, 1, 0.9 * rho)[0]
        r["point route"] = max(r["point route"], float(Q.norm(
            B.projected_value(A, q) - evaluate(B.project(A).rep, q))))
    tol = cfg.tol("bundle")
    return n, [Check(k, val, tol) for k, val in r.items()]


# 6 -----------------------------------------------------------------------

def counterexample_pair():
    """``(q^2 - 1) + (q - 1) e2`` and ``(q^2 - 1) + 7 (q - 1) e2`` with the frame ``(e1, e2)``."""
    f = Z.monic([[-1, 0, -1, 0], [0, 0, 1, 0], [1, 0, 0, 0]])
    g = Z.monic([[-1, 0, -7, 0], [0, 0, 7, 0], [1, 0, 0, 0]])
    return f, g, Q.STANDARD_FRAME


def counterexample_report(tol: float = 1e-9) -> dict:
    f, g, fr = counterexample_pair()
    zf, zg = Z.component_zero_sets(f, fr), Z.component_zero_sets(g, fr)
    rf = Z.zero_bundle_project(zf, 2, require_psrb=False)
    rg = Z.zero_bundle_project(zg, 2, require_psrb=False)
    c = Z.solve_bullet_factor(g, f, fr)
    return {
        "first_slice_equal": bool(zf.s1.matches(zg.s1, tol) and zf.s2.matches(zg.s2, tol)),
        "second_slice_differs": bool(zf.s3.hausdorff(zg.s3) > 1e-6),
        "recover_f": rf.distance(f),
        "recover_g": rg.distance(g),
        "bullet_factor": None if c is None else [c.real, c.imag],
        "bullet_other_slice": Z.solve_bullet_factor(g, f, Z.Frame(Q.E2[1:], Q.E3[1:])) is not None,
    }


def suite_zero_bundle(cfg: RunConfig, rng):
    n = cfg.count(100)
    tol = cfg.tol("zero_bundle")
    worst = 0.0
    for _ in range(n):
        f = Z.random_psrb(rng, int(rng.integers(3, 7)))
        zd = Z.component_zero_sets(f, Q.random_frame(rng))
        worst = max(worst, Z.zero_bundle_project(zd, f.degree).distance(f))
    ce = counterexample_report(tol)
    bad = [not ce["first_slice_equal"], not ce["second_slice_differs"],
           ce["bullet_factor"] is None or abs(complex(*ce["bullet_factor"]) - 7) > tol,
           ce["bullet_other_slice"]]
    return n, [Check("round trip coefficient error", worst, tol),
               Check("counterexample recovery", max(ce["recover_f"], ce["recover_g"]), tol),
               Check("counterexample: one slice confuses, two distinguish", float(sum(bad)), 0, "count")]


# 7 -----------------------------------------------------------------------

GAMMA_SLICES = 16


def suite_gauss_lucas(cfg: RunConfig, rng):
    n = cfg.count(200)
    tol = cfg.tol("hull_inflation")
    fails = 0
    for k in range(n):
        if k % 2:
            f = Z.random_real_monic(rng, int(rng.integers(1, 9)))
        else:
            f = Z.random_spherical_product(rng, int(rng.integers(5, 9)), 2)
        fails += not Z.gauss_lucas_check(f, Q.random_frame(rng), tol)
    m = cfg.count(50)
    sample = Q.fibonacci_sphere(GAMMA_SLICES)
    worst = 0.0
    cross = 0
    for _ in range(m):
        f = Z.random_spherical_product(rng, int(rng.integers(5, 9)))
        fr = Q.random_frame(rng)
        out = Z.morphism_gamma(f, fr, sample)
        worst = max(worst, out["residual"])
        rep = Z.gauss_lucas_report(f, fr, tol)
        cross += not (rep["F"] and rep["G"])
    return n + m, [Check("Gauss-Lucas containment failures", float(fails), 0, "count"),
                   Check("Gamma square residual", worst, cfg.tol("gamma")),
                   Check("Gamma component Gauss-Lucas failures", float(cross), 0, "count")]


# 8 -----------------------------------------------------------------------

def brute_force_extreme(points) -> set:
    """Extreme points by testing every ordered pair as a candidate hull edge (O(n^3))."""
    pts = np.unique(np.asarray(points, dtype=float).reshape(-1, 2), axis=0)
    if len(pts) <= 2:
        return {tuple(p) for p in pts}
    out = set()
    for a in range(len(pts)):
        for b in range(len(pts)):
            if a == b:
                continue
            pa, pb = pts[a], pts[b]
            d, e = pts - pa, pb - pa
            v = e[0] * d[:, 1] - e[1] * d[:, 0]
            side = np.sign(v).astype(int)
            near = np.abs(v) <= 1e-12 * (np.abs(e).sum() * np.abs(d).sum(axis=1))
            near[[a, b]] = False
            side[[a, b]] = 0
            for k in np.flatnonzero(near):
                side[k] = orientation(pa, pb, pts[k])
            if side.min() < 0:
                continue
            on = pts[side == 0]
            lo, hi = np.minimum(pa, pb), np.maximum(pa, pb)
            if np.all((on >= lo) & (on <= hi)):
                out.update({tuple(pa), tuple(pb)})
    return out


def _fd_derivative(f: QPowerSeries, q, h=1e-3):
    """Fourth-order central difference along the real direction (stays in q's slice)."""
    e = h * Q.ONE
    d1 = evaluate(f, q + e) - evaluate(f, q - e)
    d2 = evaluate(f, q + 2 * e) - evaluate(f, q - 2 * e)
    return (8 * d1 - d2) / (12 * h)


def suite_oracles(cfg: RunConfig, rng):
    n = cfg.count(100)
    hull_bad = 0
    for k in range(n):
        m = int(rng.integers(1, 40))
        pts = rng.integers(-4, 5, size=(m, 2)).astype(float) if k % 2 else rng.standard_normal((m, 2))
        hull_bad += {tuple(p) for p in convex_hull_2d(pts)} != brute_force_extreme(pts)
    fd = 0.0
    for _ in range(n):
        f = random_series(rng, int(rng.integers(1, 13)))
        q = random_ball_points(rng, 1, 0.8)[0]
        fd = max(fd, float(Q.norm(evaluate(derivative(f), q) - _fd_derivative(f, q))))
    root_bad = 0
    for _ in range(5 * n):
        c = _rand_complex(rng, int(rng.integers(2, 14)))
        c[-1] = c[-1] if abs(c[-1]) > 0.1 else 1.0
        rs = complex_roots(c)
        root_bad += rs.total != c.size - 1 or not residual_ok(c, rs.points, cfg.tol("root_residual"))
    return 7 * n, [Check("hull vs brute force mismatches", float(hull_bad), 0, "count"),
                   Check("derivative vs finite differences", fd, cfg.tol("finite_difference")),
                   Check("root residual failures", float(root_bad), 0, "count")]


# module invariants --------------------------------------------------------

def suite_algebra(cfg: RunConfig, rng):
    n = cfg.count(200)
    p, q, r = (rng.standard_normal((n, 4)) for _ in range(3))
    assoc = np.max(Q.norm(Q.qmul(Q.qmul(p, q), r) - Q.qmul(p, Q.qmul(q, r))))
    normmul = np.max(np.abs(Q.norm(Q.qmul(p, q)) - Q.norm(p) * Q.norm(q)) / (Q.norm(p) * Q.norm(q)))
    inv = np.max(Q.norm(Q.qmul(p, Q.inverse(p)) - Q.ONE))
    frames = 0.0
    for k in range(n):
        fr = Q.rotate_frame(Q.random_unit_quaternion(rng), Q.random_frame(rng))
        frames = max(frames, abs(np.linalg.det(np.stack([fr.i, fr.j, fr.k])) - 1.0))
    tol = cfg.tol("algebra")
    return n, [Check("associativity", float(assoc), tol), Check("norm multiplicativity", float(normmul), tol),
               Check("inverse", float(inv), tol), Check("rotated frames orthonormal, co-oriented", frames, tol)]


def suite_slice_structure(cfg: RunConfig, rng):
    n = cfg.count(100)
    ident = dcomp = star = 0.0
    for _ in range(n):
        f = random_series(rng, int(rng.integers(0, 13)))
        fr = Q.random_frame(rng)
        z = 0.9 * np.sqrt(rng.uniform(size=8)) * np.exp(2j * np.pi * rng.uniform(size=8))
        ident = max(ident, *slice_identities_check(f, fr, z))
        dc = d_components(f, fr)
        vals = evaluate(f, fr.embed(z))
        dcomp = max(dcomp, float(np.max(np.abs(d_components_pointwise(vals, fr) - dc.values(z.real, z.imag)))))
        g = random_series(rng, int(rng.integers(0, 13)))
        q = random_ball_points(rng, 1, 0.9)[0]
        fq = evaluate(f, q)
        if Q.norm(fq) > 1e-3:
            moved = Q.qmul(Q.qmul(Q.inverse(fq), q), fq)
            star = max(star, float(Q.norm(evaluate(star_product(f, g), q) - Q.qmul(fq, evaluate(g, moved)))))
    return n, [Check("f -/+ ifi identities", ident, cfg.tol("slice_identities")),
               Check("D components pointwise vs split", dcomp, cfg.tol("slice_identities")),
               Check("star product vs pointwise formula", star, cfg.tol("star"))]


def suite_harmonic_extra(cfg: RunConfig, rng):
    n = cfg.count(50)
    fdc = cs = 0.0
    for _ in range(n):
        u = random_harmonic(rng, int(rng.integers(1, 9)))
        a, b = _disk_point(rng, 0.9), _disk_point(rng, 0.9)
        path = random_polyline(rng, a, b, 2, 0.9)
        fdc = max(fdc, abs(conjugate_harmonic_callable(u, path) - conjugate_harmonic(u, path)))
        t = trace_of(u, 1.0, cfg.quadrature_n)
        z = 0.9 * np.sqrt(rng.uniform(size=10)) * np.exp(2j * np.pi * rng.uniform(size=10))
        lam = rng.uniform(-1, 1)
        want = cpolyval(u.completion(), z) + 1j * lam
        cs = max(cs, float(np.max(np.abs(schwarz_complex(t, z, lam) - want))))
    return n, [Check("conjugate from finite differences", fdc, cfg.tol("finite_difference")),
               Check("complex Schwarz vs closed form", cs, cfg.tol("schwarz_paths"))]


def suite_bullet(cfg: RunConfig, rng):
    n = cfg.count(50)
    tol = cfg.tol("bullet")
    solve_err = 0.0
    bad = 0
    for _ in range(n):
        g = Z.random_psrb(rng, int(rng.integers(3, 7)))
        fr1, fr2 = Q.random_frame(rng), Q.random_frame(rng)
        c = complex(*rng.uniform(-2, 2, 2))
        f = Z.SlicePolynomial(bullet_product(g.series(), Z.bullet_unit(c, fr1), fr1).coeffs[:-1])
        got = Z.solve_bullet_factor(f, g, fr1)
        solve_err = max(solve_err, abs(got - c) if got is not None else np.inf)
        bad += Z.solve_bullet_factor(f, g, fr2) is not None
        bad += not Z.bullet_uniqueness_check(g, g, fr1, fr2, 1.0, 1.0, tol)
        bad += Z.bullet_uniqueness_check(f, g, fr1, fr2, c, 1.0, tol)
    return n, [Check("recovered bullet factor", solve_err, tol),
               Check("two-slice uniqueness failures", float(bad), 0, "count")]


def suite_zero_perturbation(cfg: RunConfig, rng):
    n = cfg.count(50)
    least = np.inf
    for _ in range(n):
        f = Z.random_psrb(rng, int(rng.integers(3, 7)))
        fr = Q.random_frame(rng)
        c = np.array(f.coeffs)
        k = int(rng.integers(0, f.degree))
        d = rng.standard_normal(4)
        c[k] += 1e-4 * d / np.linalg.norm(d)
        change = Z.component_zero_sets(f, fr).distance(Z.component_zero_sets(Z.SlicePolynomial(c), fr))
        least = min(least, change)
    return n, [Check("smallest zero-data change under 1e-4 perturbation", float(least),
                     cfg.tol("perturbation"), "min")]


SUITES = [
    ("roundtrip", 1, suite_roundtrip, 5.0),
    ("representation", 2, suite_representation, 2.0),
    ("conjugate", 3, suite_conjugate, 2.0),
    ("schwarz", 4, suite_schwarz, 5.0),
    ("bundle", 5, suite_bundle, 10.0),
    ("zero_bundle", 6, suite_zero_bundle, 10.0),
    ("gauss_lucas", 7, suite_gauss_lucas, 10.0),
    ("oracles", 8, suite_oracles, 5.0),
    ("algebra", None, suite_algebra, None),
    ("slice_structure", None, suite_slice_structure, None),
    ("harmonic_extra", None, suite_harmonic_extra, None),
    ("bullet", None, suite_bullet, None),
    ("zero_perturbation", None, suite_zero_perturbation, None),
]
SUITE_NAMES = [s[0] for s in SUITES]


def run_suite(name: str, cfg: RunConfig) -> SuiteResult:
    idx = SUITE_NAMES.index(name)
    _, crit, fn, budget = SUITES[idx]
    rng = np.random.default_rng([cfg.seed, idx])
    t0 = time.perf_counter()
    count, checks = fn(cfg, rng)
    return SuiteResult(name, crit, checks, count, time.perf_counter() - t0, budget)


def run_all(cfg: RunConfig, names=None) -> list[SuiteResult]:
    return [run_suite(n, cfg) for n in (names or SUITE_NAMES)]


def report(results: list[SuiteResult], cfg: RunConfig) -> dict:
    """Deterministic summary (no timings)."""
    return {
        "seed": cfg.seed,
        "passed": all(r.passed for r in results),
        "suites": [{
            "name": r.name,
            "criterion": r.criterion,
            "passed": r.passed,
            "count": r.count,
            "checks": [{"label": c.label, "kind": c.kind, "value": float(f"{c.value:.3e}"),
                        "tol": c.tol, "passed": c.passed} for c in r.checks],
        } for r in results],
    }
