import io
import json
import re
import subprocess
import sys
from pathlib import Path

import pytest

from slicereg.cli import EXIT_DOMAIN, EXIT_FAIL, EXIT_OK, EXIT_PARSE, OPERATIONS, main

EXPECTED_OPS = {
    "qmul", "imaginary_unit_of", "rotate", "rotate_frame", "eval", "split", "extend", "representation",
    "d_components", "slice_identities_check", "star_product", "bullet_product", "derivative", "roundtrip_PQ",
    "conjugate_harmonic", "path_independence_residual", "schwarz_complex", "quaternionic_schwarz_coeffs",
    "quaternionic_schwarz_eval", "project", "trivialize", "section", "compatibility_residual", "add",
    "deriv_total", "rotate_total", "fiber_of", "complex_roots", "is_psrb", "component_zero_sets",
    "zero_bundle_project", "bullet_uniqueness_check", "slice_zero_set", "convex_hull_2d", "skull",
    "gauss_lucas_check", "morphism_gamma",
}
FR = {"i": [1, 0, 0], "j": [0, 1, 0]}
F_PAIR = [[-1, 0, -1, 0], [0, 0, 1, 0], [1, 0, 0, 0]]
G_PAIR = [[-1, 0, -7, 0], [0, 0, 7, 0], [1, 0, 0, 0]]


def run(argv, payload=None):
    out, err = io.StringIO(), io.StringIO()
    text = payload if isinstance(payload, str) else json.dumps(payload)
    code = main(argv, io.StringIO(text or ""), out, err)
    return code, out.getvalue(), err.getvalue()


def test_eval_identity():
    code, out, _ = run(["eval", "--point", "[0, 0, 1, 0]"], {"radius": 2, "coeffs": [[0, 0, 0, 0], [1, 0, 0, 0]]})
    assert code == EXIT_OK and json.loads(out) == [0, 0, 1, 0]


def test_eval_errors():
    code, _, err = run(["eval", "--point", "[0,0,1,0]"], "{not json")
    assert code == EXIT_PARSE and "error" in json.loads(err)
    code, _, err = run(["eval", "--point", "[0, 0, 1, 0]"], {"radius": 1, "coeffs": [[0, 0, 0, 0], [1, 0, 0, 0]]})
    assert code == EXIT_DOMAIN and json.loads(err)["error"] == "OutOfDomain"
    code, _, _ = run(["eval"], {"radius": 1, "coeffs": [[0, 0, 0, 0]]})
    assert code == EXIT_PARSE


@pytest.mark.parametrize("argv", [[], ["nonsense"], ["eval", "--seed", "x"], ["verify", "--suite", "nope"]])
def test_bad_arguments(argv):
    assert run(argv, {})[0] == EXIT_PARSE


def test_skull_segments():
    code, out, _ = run(["skull"], {"poly": [[-1, 0, 0, 0], [0, 0, 0, 0], [1, 0, 0, 0]], "slices": 32})
    hulls = json.loads(out)["hulls"]
    assert code == EXIT_OK and len(hulls) == 32
    for h in hulls:
        assert sorted(map(tuple, h["polygon"])) == [(-1.0, 0.0), (1.0, 0.0)]


def test_bundle_project():
    el = {"a": [[0, 0], [1, 0]], "c": [[0, 0]], "frame": FR}
    code, out, _ = run(["bundle", "project"], el)
    res = json.loads(out)
    assert code == EXIT_OK
    assert res["coeffs"][1] == pytest.approx([1, 0, 0, 0]) and res["coeffs"][0] == [0, 0, 0, 0]


def test_bundle_section_and_trivialize():
    cls = {"radius": 1, "coeffs": [[0, 0, 0, 0], [0, 0, 0, 0], [1, 0, 0, 0]]}
    code, out, _ = run(["bundle", "section"], {"class": cls, "frame": FR})
    assert code == EXIT_OK and json.loads(out)["a"][2] == pytest.approx([1, 0])
    code, out, _ = run(["bundle", "trivialize"], {"class": cls, "frame": FR, "u": [0, 0, 0, 1]})
    assert code == EXIT_OK and json.loads(out)["frame"]["i"] == pytest.approx([-1, 0, 0])


def test_zeros_on_counterexample_pair():
    code, out, _ = run(["zeros"], {"polys": [F_PAIR, G_PAIR], "frame": FR})
    zf, zg = json.loads(out)
    assert code == EXIT_OK
    assert zf["s1"] == zg["s1"] and zf["s2"] == zg["s2"]
    assert zf["s3"] != zg["s3"]
    code, out, _ = run(["zeros"], {"zero_data": zg, "degree": 2, "require_psrb": False})
    assert code == EXIT_OK and json.loads(out)["poly"][1][2] == pytest.approx(7.0)
    code, _, err = run(["zeros"], {"zero_data": zg, "degree": 2})
    assert code == EXIT_DOMAIN and json.loads(err)["error"] == "NotPSRB"


def test_csv_output():
    code, out, _ = run(["hull", "--format", "csv"], {"points": [[0, 0], [1, 0], [0, 1], [0.2, 0.2]]})
    lines = out.strip().splitlines()
    assert code == EXIT_OK and lines[0] == "x,y" and len(lines) == 4
    code, out, _ = run(["zeros", "--format", "csv"], {"poly": F_PAIR, "frame": FR})
    assert code == EXIT_OK and out.startswith("poly,set,re,im,mult")
    assert run(["bundle", "project", "--format", "csv"], {"a": [[0, 0]], "c": [[0, 0]], "frame": FR})[0] == EXIT_PARSE
    assert run(["verify", "--format", "csv"])[0] == EXIT_PARSE


def test_schwarz_and_conjugate():
    n = 64
    import numpy as np
    cos = np.cos(2 * np.pi * np.arange(n) / n).tolist()
    code, out, _ = run(["schwarz"], {"trace": {"rho": 1, "samples": cos}, "z": [[0.3, 0]]})
    assert code == EXIT_OK and json.loads(out)["values"][0] == pytest.approx([0.3, 0], abs=1e-10)
    code, out, _ = run(["schwarz"], {"a": {"rho": 1, "samples": cos}, "c": {"rho": 1, "samples": [0] * n},
                                     "frame": FR, "points": [[0, 0, 0, 0.4]]})
    assert code == EXIT_OK and json.loads(out)["values"][0] == pytest.approx([0, 0, 0, 0.4], abs=1e-9)
    code, out, _ = run(["conjugate"], {"harmonic": [[0, 0], [0, 0], [1, 0]], "path": [[0, 0], [1, 2]], "rho": 3,
                                       "path_b": [[0, 0], [1, 0], [1, 2]]})
    res = json.loads(out)
    assert code == EXIT_OK and res["value"] == pytest.approx(4.0)
    assert res["path_independence_residual"] <= 1e-10


def test_operation_table_is_complete():
    assert EXPECTED_OPS <= set(OPERATIONS)


@pytest.mark.parametrize("name, payload, check", [
    ("qmul", {"a": [0, 1, 0, 0], "b": [0, 0, 1, 0]}, lambda r: r == [0, 0, 0, 1]),
    ("complex_roots", {"p": [[-1, 0], [0, 0], [1, 0]]}, lambda r: len(r) == 2),
    ("is_psrb", {"f": [[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0]]}, lambda r: r is True),
    ("gauss_lucas_check", {"f": [[0, 0, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 0], [1, 0, 0, 0]]}, lambda r: r is True),
    ("slice_zero_set", {"f": F_PAIR, "i": [1, 0, 0]}, lambda r: len(r) == 1 and r[0][0] == pytest.approx(1)),
    ("bullet_uniqueness_check", {"f": F_PAIR, "g": F_PAIR, "frame1": FR,
                                 "frame2": {"i": [0, 1, 0], "j": [0, 0, 1]}}, lambda r: r is True),
])
def test_op_dispatch(name, payload, check):
    code, out, err = run(["op", name], payload)
    assert code == EXIT_OK, err
    assert check(json.loads(out))


def test_byte_identical_output():
    payload = {"polys": [F_PAIR, G_PAIR], "frame": FR}
    assert run(["zeros"], payload)[1] == run(["zeros"], payload)[1]
    argv = ["verify", "--suite", "representation", "--suite", "oracles", "--samples", "5"]
    assert run(argv)[1] == run(argv)[1]


def test_verify_unreachable_tolerance():
    code, out, _ = run(["verify", "--suite", "roundtrip", "--samples", "3", "--tol.roundtrip", "1e-30"])
    rep = json.loads(out)
    assert code == EXIT_FAIL and rep["passed"] is False


@pytest.mark.parametrize("seed", range(5))
def test_verify_seed_stability(seed):
    code, out, _ = run(["verify", "--seed", str(seed), "--samples", "10",
                        "--suite", "roundtrip", "--suite", "bundle", "--suite", "zero_bundle"])
    assert code == EXIT_OK and json.loads(out)["passed"]


def test_module_entry_point(tmp_path: Path):
    path = tmp_path / "f.json"
    path.write_text(json.dumps({"radius": 2, "coeffs": [[1, 0, 0, 0]]}))
    res = subprocess.run([sys.executable, "-m", "slicereg", "eval", str(path), "--point", "[0.1, 0, 0, 0]"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and json.loads(res.stdout) == [1, 0, 0, 0]
    res = subprocess.run([sys.executable, "-m", "slicereg", "--help"], capture_output=True, text=True)
    assert res.returncode == 0 and re.search(r"verify", res.stdout)
