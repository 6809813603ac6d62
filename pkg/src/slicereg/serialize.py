"""JSON encodings of the library types (plain lists and dicts, ready for `json.dumps`)."""
from __future__ import annotations

import numpy as np

from .bundle import BaseClass, HarmonicClass, TotalElement
from .harmonic import BoundaryTrace, PlanarPath
from .hull import SliceHull
from .planar import HarmonicPoly
from .quaternion import Frame
from .roots import RootSet
from .series import QPowerSeries
from .zeros import ZERO_SET_NAMES, SlicePolynomial, ZeroData, monic


def _floats(a):
    return np.asarray(a, dtype=float).tolist()


def quaternion_to_json(q):
    return _floats(q)


def quaternion_from_json(obj) -> np.ndarray:
    q = np.asarray(obj, dtype=float)
    if q.shape[-1:] != (4,):
        raise ValueError("a quaternion is a list of four numbers")
    return q


def unit_from_json(obj) -> np.ndarray:
    v = np.asarray(obj, dtype=float)
    if v.shape != (3,):
        raise ValueError("an imaginary unit is a list of three numbers")
    return v


def frame_to_json(fr: Frame):
    return {"i": _floats(fr.i), "j": _floats(fr.j)}


def frame_from_json(obj) -> Frame:
    return Frame(unit_from_json(obj["i"]), unit_from_json(obj["j"]))


def series_to_json(f: QPowerSeries):
    return {"radius": float(f.radius), "coeffs": _floats(f.coeffs)}


def series_from_json(obj) -> QPowerSeries:
    return QPowerSeries(np.asarray(obj["coeffs"], dtype=float), float(obj.get("radius", 1.0)))


def complex_list_to_json(c):
    c = np.asarray(c, dtype=complex)
    return [[float(z.real), float(z.imag)] for z in c]


def complex_list_from_json(obj) -> np.ndarray:
    a = np.asarray(obj, dtype=float).reshape(-1, 2)
    return a[:, 0] + 1j * a[:, 1]


def harmonic_to_json(u: HarmonicPoly):
    return complex_list_to_json(u.coeffs)


def harmonic_from_json(obj) -> HarmonicPoly:
    return HarmonicPoly(complex_list_from_json(obj))


def trace_to_json(t: BoundaryTrace):
    return {"rho": t.rho, "samples": _floats(t.samples)}


def trace_from_json(obj) -> BoundaryTrace:
    return BoundaryTrace(float(obj["rho"]), np.asarray(obj["samples"], dtype=float))


def path_to_json(p: PlanarPath):
    return _floats(p.vertices)


def path_from_json(obj) -> PlanarPath:
    return PlanarPath(np.asarray(obj, dtype=float))


def total_to_json(el: TotalElement):
    return {"a": harmonic_to_json(el.a.rep), "c": harmonic_to_json(el.c.rep),
            "frame": frame_to_json(el.frame), "radius": float(el.radius)}


def total_from_json(obj) -> TotalElement:
    return TotalElement(HarmonicClass(harmonic_from_json(obj["a"])),
                        HarmonicClass(harmonic_from_json(obj["c"])),
                        frame_from_json(obj["frame"]), float(obj.get("radius", 1.0)))


def base_class_to_json(b: BaseClass):
    return series_to_json(b.rep)


def base_class_from_json(obj) -> BaseClass:
    return BaseClass(series_from_json(obj))


def polynomial_to_json(f: SlicePolynomial):
    """Full monic coefficient list ``a_0 .. a_{n-1}, 1``."""
    return _floats(f.full_coeffs)


def polynomial_from_json(obj) -> SlicePolynomial:
    return monic(np.asarray(obj, dtype=float))


def rootset_to_json(s: RootSet | None):
    if s is None:
        return None
    return [[float(p.real), float(p.imag), int(m)] for p, m in zip(s.points, s.mult)]


def rootset_from_json(obj) -> RootSet | None:
    if obj is None:
        return None
    a = np.asarray(obj, dtype=float).reshape(-1, 3)
    return RootSet(a[:, 0] + 1j * a[:, 1], a[:, 2].astype(int))


def zerodata_to_json(zd: ZeroData):
    out = {"frame": frame_to_json(zd.frame)}
    out.update({k: rootset_to_json(v) for k, v in zd.sets().items()})
    return out


def zerodata_from_json(obj) -> ZeroData:
    return ZeroData(frame_from_json(obj["frame"]),
                    *(rootset_from_json(obj.get(k)) for k in ZERO_SET_NAMES))


def hull_to_json(h: SliceHull):
    return {"slice": _floats(h.slice), "polygon": _floats(h.polygon)}


def hull_from_json(obj) -> SliceHull:
    return SliceHull(unit_from_json(obj["slice"]), np.asarray(obj["polygon"], dtype=float).reshape(-1, 2))
