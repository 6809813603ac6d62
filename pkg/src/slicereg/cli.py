"""Command-line interface: JSON in, JSON (or CSV for point clouds) out.

Exit codes: 0 success, 1 verification failure, 2 unreadable or malformed
input, 3 domain error raised by the library.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time

import numpy as np

from . import bundle as B
from . import quaternion as Q
from . import serialize as S
from . import series as SR
from . import zeros as Z
from .errors import SliceRegError
from .harmonic import (conjugate_harmonic, path_independence_residual, quaternionic_schwarz_coeffs,
                       quaternionic_schwarz_eval, schwarz_complex)
from .hull import convex_hull_2d
from .roots import complex_roots
from .verify import DEFAULT_TOLERANCES, SUITE_NAMES, RunConfig, report, run_all

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_DOMAIN = 0, 1, 2, 3


class InputError(Exception):
    """Input that cannot be decoded into the expected structure."""


class CsvRows(list):
    """Marker for results that may be written as CSV (point clouds only)."""

    def __init__(self, header, rows, payload):
        super().__init__(rows)
        self.header = header
        self.payload = payload


# decoding helpers ---------------------------------------------------------

def _series(obj):
    if isinstance(obj, list):
        return SR.QPowerSeries(np.asarray(obj, dtype=float), 1.0)
    return S.series_from_json(obj)


def _poly(obj):
    """Monic polynomial: full coefficient list with trailing 1 (or a series object)."""
    if isinstance(obj, dict):
        obj = obj["coeffs"]
    return S.polynomial_from_json(obj)


def _frame(obj):
    return Q.STANDARD_FRAME if obj is None else S.frame_from_json(obj)


def _complex(obj):
    if isinstance(obj, (int, float)):
        return complex(obj)
    return complex(float(obj[0]), float(obj[1]))


def _complex_out(z):
    return [float(np.real(z)), float(np.imag(z))]


def _slices(obj):
    if isinstance(obj, int):
        return Q.fibonacci_sphere(obj)
    return np.asarray(obj, dtype=float).reshape(-1, 3)


def _frames(obj):
    if isinstance(obj, int):
        return Q.frame_sample(obj)
    return [S.frame_from_json(f) for f in obj]


def _slice_pair(obj):
    return SR.SlicePair(_frame(obj.get("frame")), S.complex_list_from_json(obj["f1"]),
                        S.complex_list_from_json(obj["f2"]), float(obj.get("radius", 1.0)))


def _slice_pair_out(g: SR.SlicePair):
    return {"frame": S.frame_to_json(g.frame), "f1": S.complex_list_to_json(g.f1),
            "f2": S.complex_list_to_json(g.f2), "radius": float(g.radius)}


def _hulls_csv(hulls):
    rows = [[k, x, y] for k, h in enumerate(hulls) for x, y in h.polygon.tolist()]
    return CsvRows(["slice", "x", "y"], rows, {"hulls": [S.hull_to_json(h) for h in hulls]})


def _zerodata_rows(zd: Z.ZeroData, tag=0):
    rows = []
    for name, s in zd.sets().items():
        if s is not None:
            rows += [[tag, name, float(p.real), float(p.imag), int(m)] for p, m in zip(s.points, s.mult)]
    return rows


# operation table ----------------------------------------------------------

def _op_eval(d):
    return S.quaternion_to_json(SR.evaluate(_series(d["f"]), S.quaternion_from_json(d["q"])))


def _op_representation(d):
    # x and y are implied by the two slice values and are accepted for completeness
    return S.quaternion_to_json(SR.representation(
        S.quaternion_from_json(d["f_plus"]), S.quaternion_from_json(d["f_minus"]),
        Q.check_imaginary_unit(d["i"]), Q.check_imaginary_unit(d["target"])))


def _op_d_components(d):
    dc = SR.d_components(_series(d["f"]), _frame(d.get("frame")))
    return {k: S.harmonic_to_json(getattr(dc, k)) for k in ("d1", "d2", "d3", "d4")}


def _op_slice_identities(d):
    z = np.array([_complex(v) for v in d["z"]]) if isinstance(d["z"][0], list) else _complex(d["z"])
    return list(SR.slice_identities_check(_series(d["f"]), _frame(d.get("frame")), z))


def _op_roundtrip(d):
    f = _series(d["f"])
    fr = _frame(d.get("frame"))
    pts = np.asarray(d["points"], dtype=float).reshape(-1, 4)
    return {"PQ": SR.roundtrip_PQ(f, fr, pts), "QP": SR.roundtrip_QP(SR.split(f, fr))}


def _op_schwarz_eval(d):
    q = np.asarray(d["q"], dtype=float)
    v = quaternionic_schwarz_eval(S.trace_from_json(d["a"]), S.trace_from_json(d["c"]), _frame(d.get("frame")),
                                  q, float(d.get("lambda1", 0.0)), float(d.get("lambda2", 0.0)))
    return S.quaternion_to_json(v)


def _op_complex_roots(d):
    rs = complex_roots(S.complex_list_from_json(d["p"]))
    return S.rootset_to_json(rs)


def _op_zero_bundle_project(d):
    f = Z.zero_bundle_project(S.zerodata_from_json(d["zero_data"]), int(d["degree"]),
                              bool(d.get("require_psrb", True)))
    return S.polynomial_to_json(f)


def _op_morphism_gamma(d):
    out = Z.morphism_gamma(_poly(d["f"]), _frame(d.get("frame")), _slices(d.get("slices", 16)))
    pair = out["hull_pair"]
    return {"zero_data": S.zerodata_to_json(out["zero_data"]),
            "hull_pair": [S.hull_to_json(pair.first), S.hull_to_json(pair.second)],
            "skull": [S.hull_to_json(h) for h in out["skull"]],
            "residual": out["residual"]}


OPERATIONS = {
    "qmul": lambda d: S.quaternion_to_json(Q.qmul(S.quaternion_from_json(d["a"]), S.quaternion_from_json(d["b"]))),
    "imaginary_unit_of": lambda d: S.quaternion_to_json(Q.imaginary_unit_of(S.quaternion_from_json(d["q"]))),
    "rotate": lambda d: S.quaternion_to_json(Q.rotate(Q.as_unit(d["u"]), S.quaternion_from_json(d["w"]))),
    "rotate_frame": lambda d: S.frame_to_json(Q.rotate_frame(d["u"], _frame(d["frame"]))),
    "eval": _op_eval,
    "split": lambda d: _slice_pair_out(SR.split(_series(d["f"]), _frame(d.get("frame")))),
    "extend": lambda d: S.quaternion_to_json(SR.extend(_slice_pair(d["g"]), S.quaternion_from_json(d["q"]))),
    "representation": _op_representation,
    "d_components": _op_d_components,
    "slice_identities_check": _op_slice_identities,
    "star_product": lambda d: S.series_to_json(SR.star_product(_series(d["f"]), _series(d["g"]))),
    "bullet_product": lambda d: S.series_to_json(
        SR.bullet_product(_series(d["f"]), _series(d["g"]), _frame(d.get("frame")))),
    "derivative": lambda d: S.series_to_json(SR.derivative(_series(d["f"]))),
    "roundtrip_PQ": _op_roundtrip,
    "conjugate_harmonic": lambda d: conjugate_harmonic(
        S.harmonic_from_json(d["u"]), S.path_from_json(d["path"]), float(d.get("rho", 1.0))),
    "path_independence_residual": lambda d: path_independence_residual(
        S.harmonic_from_json(d["u"]), S.path_from_json(d["path_a"]), S.path_from_json(d["path_b"]),
        float(d.get("rho", 1.0))),
    "schwarz_complex": lambda d: _complex_out(schwarz_complex(
        S.trace_from_json(d["trace"]), _complex(d["z"]), float(d.get("lambda", 0.0)))),
    "quaternionic_schwarz_coeffs": lambda d: S.series_to_json(quaternionic_schwarz_coeffs(
        S.trace_from_json(d["a"]), S.trace_from_json(d["c"]), _frame(d.get("frame")), d.get("nmax"))),
    "quaternionic_schwarz_eval": _op_schwarz_eval,
    "project": lambda d: S.base_class_to_json(B.project(S.total_from_json(d["element"]))),
    "trivialize": lambda d: S.total_to_json(B.trivialize(
        d["u"], S.base_class_from_json(d["class"]), _frame(d.get("frame")))),
    "section": lambda d: S.total_to_json(B.section(_frame(d.get("frame")), S.base_class_from_json(d["class"]))),
    "compatibility_residual": lambda d: B.compatibility_residual(
        d["u"], d["v"], S.base_class_from_json(d["class"]), _frame(d.get("frame"))),
    "add": lambda d: S.total_to_json(B.add(S.total_from_json(d["A"]), S.total_from_json(d["B"]))),
    "deriv_total": lambda d: S.total_to_json(B.deriv_total(S.total_from_json(d["A"]))),
    "rotate_total": lambda d: S.total_to_json(B.rotate_total(d["u"], S.total_from_json(d["A"]))),
    "fiber_of": lambda d: [S.total_to_json(e) for e in B.fiber_of(
        S.base_class_from_json(d["class"]), _frames(d.get("frames", 8)))],
    "complex_roots": _op_complex_roots,
    "is_psrb": lambda d: Z.is_psrb(np.asarray(d["f"]["coeffs"] if isinstance(d["f"], dict) else d["f"],
                                              dtype=float)),
    "component_zero_sets": lambda d: S.zerodata_to_json(Z.component_zero_sets(_poly(d["f"]), _frame(d.get("frame")))),
    "zero_bundle_project": _op_zero_bundle_project,
    "bullet_uniqueness_check": lambda d: Z.bullet_uniqueness_check(
        _poly(d["f"]), _poly(d["g"]), _frame(d["frame1"]), _frame(d["frame2"]),
        _complex(d.get("c1", 1.0)), _complex(d.get("c2", 1.0))),
    "slice_zero_set": lambda d: S.rootset_to_json(Z.slice_zero_set(_poly(d["f"]), Q.check_imaginary_unit(d["i"]))),
    "convex_hull_2d": lambda d: S.hull_to_json(Z.SliceHull.of(d.get("slice", [1.0, 0.0, 0.0]), d["points"])),
    "skull": lambda d: [S.hull_to_json(h) for h in Z.skull(_poly(d["f"]), _slices(d.get("slices", 16)))],
    "gauss_lucas_check": lambda d: Z.gauss_lucas_check(_poly(d["f"]), _frame(d.get("frame"))),
    "morphism_gamma": _op_morphism_gamma,
}


# subcommands --------------------------------------------------------------

def cmd_eval(args, data):
    if isinstance(data, dict) and "series" in data:
        f, point = _series(data["series"]), data.get("point", data.get("points"))
    else:
        f, point = _series(data), None
    if args.point is not None:
        point = json.loads(args.point)
    if point is None:
        raise InputError("no evaluation point given (use --point or a 'point' key)")
    return S.quaternion_to_json(SR.evaluate(f, S.quaternion_from_json(point)))


def cmd_zeros(args, data):
    if "zero_data" in data:
        f = Z.zero_bundle_project(S.zerodata_from_json(data["zero_data"]), int(data["degree"]),
                                  bool(data.get("require_psrb", True)))
        return {"poly": S.polynomial_to_json(f)}
    fr = _frame(data.get("frame"))
    polys = [data["poly"]] if "poly" in data else data["polys"]
    zds = [Z.component_zero_sets(_poly(p), fr) for p in polys]
    payload = [S.zerodata_to_json(zd) for zd in zds]
    payload = payload[0] if "poly" in data else payload
    rows = [r for k, zd in enumerate(zds) for r in _zerodata_rows(zd, k)]
    return CsvRows(["poly", "set", "re", "im", "mult"], rows, payload)


def cmd_hull(args, data):
    pts = data["points"] if isinstance(data, dict) else data
    poly = convex_hull_2d(np.asarray(pts, dtype=float).reshape(-1, 2))
    return CsvRows(["x", "y"], poly.tolist(), {"polygon": poly.tolist()})


def cmd_skull(args, data):
    return _hulls_csv(Z.skull(_poly(data["poly"]), _slices(data.get("slices", 16))))


def cmd_schwarz(args, data):
    if "trace" in data:
        z = np.array([_complex(v) for v in data["z"]])
        vals = schwarz_complex(S.trace_from_json(data["trace"]), z, float(data.get("lambda", 0.0)))
        return {"values": [_complex_out(v) for v in vals]}
    a, c = S.trace_from_json(data["a"]), S.trace_from_json(data["c"])
    fr = _frame(data.get("frame"))
    out = {"series": S.series_to_json(quaternionic_schwarz_coeffs(a, c, fr, data.get("nmax")))}
    if "points" in data:
        q = np.asarray(data["points"], dtype=float).reshape(-1, 4)
        vals = quaternionic_schwarz_eval(a, c, fr, q, float(data.get("lambda1", 0.0)),
                                         float(data.get("lambda2", 0.0)))
        out["values"] = vals.tolist()
    return out


def cmd_conjugate(args, data):
    u = S.harmonic_from_json(data["harmonic"])
    rho = float(data.get("rho", 1.0))
    out = {"value": conjugate_harmonic(u, S.path_from_json(data["path"]), rho)}
    if "path_b" in data:
        out["path_independence_residual"] = path_independence_residual(
            u, S.path_from_json(data["path"]), S.path_from_json(data["path_b"]), rho)
    return out


def cmd_bundle(args, data):
    if args.action == "project":
        return S.base_class_to_json(B.project(S.total_from_json(data)))
    fr = _frame(data.get("frame"))
    fcl = S.base_class_from_json(data["class"])
    if args.action == "section":
        return S.total_to_json(B.section(fr, fcl))
    return S.total_to_json(B.trivialize(data.get("u", [1.0, 0.0, 0.0, 0.0]), fcl, fr))


def cmd_op(args, data):
    return OPERATIONS[args.name](data)


def _config(args) -> RunConfig:
    tols = {n: getattr(args, f"tol_{n}") for n in DEFAULT_TOLERANCES if getattr(args, f"tol_{n}") is not None}
    return RunConfig(seed=args.seed, samples=args.samples, quadrature_n=args.quadrature_n,
                     tolerances=tols, output_format=args.format)


def cmd_verify(args, stdout, stderr) -> int:
    cfg = _config(args)
    if cfg.output_format == "csv":
        raise InputError("verify reports are JSON only")
    t0 = time.perf_counter()
    results = run_all(cfg, args.suite)
    for r in results:
        tag = f"criterion {r.criterion}" if r.criterion else "invariant"
        stderr.write(f"{r.name:18s} {tag:12s} {'PASS' if r.passed else 'FAIL'} {r.seconds:7.2f} s\n")
    stderr.write(f"total {time.perf_counter() - t0:.2f} s\n")
    rep = report(results, cfg)
    stdout.write(json.dumps(rep, indent=1) + "\n")
    return EXIT_OK if rep["passed"] else EXIT_FAIL


COMMANDS = {
    "eval": cmd_eval, "zeros": cmd_zeros, "hull": cmd_hull, "skull": cmd_skull,
    "schwarz": cmd_schwarz, "conjugate": cmd_conjugate, "bundle": cmd_bundle, "op": cmd_op,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--samples", type=int, default=None, help="override every suite's sample count")
    common.add_argument("--quadrature-n", type=int, default=256)
    common.add_argument("--format", choices=["json", "csv"], default="json")
    for name in DEFAULT_TOLERANCES:
        common.add_argument(f"--tol.{name}", dest=f"tol_{name}", type=float, default=None)

    p = _Parser(prog="slicereg", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    v = sub.add_parser("verify", parents=[common], help="run the verification suites")
    v.add_argument("--suite", action="append", choices=SUITE_NAMES, help="run only these suites")
    for name, helptext in [("eval", "evaluate a power series at a quaternion"),
                           ("zeros", "component zero sets, or reconstruction from them"),
                           ("hull", "planar convex hull"),
                           ("skull", "per-slice hulls of slice zero sets"),
                           ("schwarz", "Schwarz reconstruction from boundary traces"),
                           ("conjugate", "harmonic conjugate along a polyline")]:
        s = sub.add_parser(name, parents=[common], help=helptext)
        s.add_argument("input", nargs="?", default="-", help="JSON file (default: stdin)")
        if name == "eval":
            s.add_argument("--point", default=None, help="quaternion as JSON list")
    b = sub.add_parser("bundle", parents=[common], help="bundle projection, section, trivialization")
    b.add_argument("action", choices=["project", "section", "trivialize"])
    b.add_argument("input", nargs="?", default="-")
    o = sub.add_parser("op", parents=[common], help="call any library operation by name")
    o.add_argument("name", choices=sorted(OPERATIONS))
    o.add_argument("input", nargs="?", default="-")
    return p


def _emit(result, fmt, stdout):
    if fmt == "csv":
        if not isinstance(result, CsvRows):
            raise InputError("CSV output is only available for point clouds (zeros, hull, skull)")
        w = csv.writer(stdout, lineterminator="\n")
        w.writerow(result.header)
        w.writerows(result)
        return
    if isinstance(result, CsvRows):
        result = result.payload
    stdout.write(json.dumps(result) + "\n")


def main(argv=None, stdin=None, stdout=None, stderr=None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if args.command == "verify":
            return cmd_verify(args, stdout, stderr)
        text = stdin.read() if args.input == "-" else open(args.input).read()
        data = json.loads(text)
        buf = io.StringIO()
        _emit(COMMANDS[args.command](args, data), args.format, buf)
        stdout.write(buf.getvalue())
        return EXIT_OK
    except SliceRegError as e:
        stderr.write(json.dumps({"error": type(e).__name__, "message": str(e)}) + "\n")
        return EXIT_DOMAIN
    except (InputError, json.JSONDecodeError, KeyError, IndexError, TypeError, ValueError, OSError) as e:
        stderr.write(json.dumps({"error": type(e).__name__, "message": str(e)}) + "\n")
        return EXIT_PARSE

