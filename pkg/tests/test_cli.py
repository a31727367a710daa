import json
import subprocess
import sys

import pytest

import fixtures as fx
from polyface import cli
from polyface import hrep as H
from polyface.poly import Poly, conv


def run(capsys, *argv):
    status = cli.main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return status, out, err


def js(out):
    obj = json.loads(out)
    assert obj.pop("schema") == 1
    return obj


def test_info(capsys):
    status, out, _ = run(capsys, "info", fx.DATA / "fig1.h")
    assert status == 0
    assert js(out) == {"dim": 2, "empty": False, "compact": True, "pdim": 3, "geometric_dim": 2,
                       "hull": {"origin": ["0", "0"], "dir": [["1", "0"], ["0", "1"]]}}


def test_lp(capsys):
    status, out, _ = run(capsys, "lp", fx.DATA / "fig1.h", "--min", "0,1")
    assert status == 0
    assert js(out) == {"status": "optimal", "point": ["2", "1"], "value": "1",
                       "dual": ["1/9", "0", "0", "0", "2/9"]}
    status, out, _ = run(capsys, "lp", fx.DATA / "halfplane.h", "--min", "0,1")
    assert status == 0 and js(out)["status"] == "unbounded"


def test_project_and_roundtrip(capsys, tmp_path):
    status, out, _ = run(capsys, "project", fx.DATA / "cube.h", "--drop", "1")
    assert status == 0
    assert Poly(H.parse_hformat(out)) == fx.square()
    f = tmp_path / "sq.h"
    f.write_text(out)
    status, out2, _ = run(capsys, "project", f, "--drop", "2")
    assert status == 0 and Poly(H.parse_hformat(out2)) == conv([(fx.qv((0,))), fx.qv((1,))])


def test_image(capsys):
    status, out, _ = run(capsys, "image", fx.DATA / "fig1.h", "--matrix", fx.DATA / "project_x.mat")
    assert status == 0
    assert Poly(H.parse_hformat(out)) == conv([fx.qv((1,)), fx.qv((8,))])


def test_conv_is_nonredundant(capsys):
    status, out, _ = run(capsys, "conv", fx.DATA / "fig2.v")
    assert status == 0
    P = H.parse_hformat(out)
    assert len(P) == 8 and Poly(P) == fx.fig2()


def test_faces_and_hasse(capsys):
    status, out, _ = run(capsys, "faces", fx.DATA / "fig2.v")
    obj = js(out)
    assert status == 0 and len(obj["faces"]) == 30 and obj["top"] == 29
    status, out, _ = run(capsys, "hasse", fx.DATA / "fig1.h")
    assert status == 0 and out.startswith("graph ") and out.count(" -- ") == 20
    status, out, _ = run(capsys, "hasse", fx.DATA / "fig1.h", "--json")
    assert len(js(out)["hasse"]) == 20


def test_vertices_facets(capsys):
    status, out, _ = run(capsys, "vertices", fx.DATA / "fig1.h")
    assert js(out)["vertices"] == [["1", "3"], ["2", "1"], ["3", "8"], ["6", "2"], ["8", "6"]]
    status, out, _ = run(capsys, "facets", fx.DATA / "cube.h")
    assert status == 0 and len(js(out)["facets"]) == 6


def test_check(capsys):
    status, out, _ = run(capsys, "check", fx.DATA / "fig2.v")
    obj = js(out)
    assert status == 0 and obj["ok"] and all(v is True for v in obj["checks"].values())
    status, out, _ = run(capsys, "check", fx.DATA / "cube.h", "--diamond")
    assert status == 0 and js(out)["checks"] == {"diamond": True}
    status, out, _ = run(capsys, "--seed", 3, "check", "--random", "6,3,3")
    obj = js(out)
    assert status == 0 and obj["ok"] and obj["random"]["seed"] == 3


def test_vertex_figure(capsys):
    status, out, _ = run(capsys, "vertex-figure", fx.DATA / "fig2.v", "--vertex", "3,1,1")
    obj = js(out)
    assert status == 0 and obj["isomorphic"] and obj["sliced_f_vector"][:2] == [4, 4]


def test_balinski(capsys):
    status, out, _ = run(capsys, "balinski", fx.DATA / "cube.h", "--remove", "1,0,0;0,1,1",
                         "--from", "0,0,0", "--to", "1,1,1", "--verify")
    obj = js(out)
    assert status == 0 and obj["n_connected"] is True
    assert obj["points"][0] == ["0", "0", "0"] and obj["points"][-1] == ["1", "1", "1"]
    assert not set(obj["path"]) & set(obj["removed"])


@pytest.mark.parametrize("argv", [
    ["info", "/nonexistent.h"],
    ["lp", "DATA/fig1.h", "--min", "0,x"],
    ["project", "DATA/cube.h", "--drop", "a"],
    ["check", "--random", "1,2"],
])
def test_exit_parse_errors(capsys, argv):
    argv = [a.replace("DATA", str(fx.DATA)) for a in argv]
    status, _, err = run(capsys, *argv)
    assert status == 2 and "parse error" in err


def test_exit_parse_error_location(capsys, tmp_path):
    f = tmp_path / "bad.h"
    f.write_text("dim 2\nineq 1 2 >= 1/0\n")
    status, _, err = run(capsys, "info", f)
    assert status == 2 and "line 2, column 13" in err


@pytest.mark.parametrize("argv", [
    ["lp", "DATA/fig1.h", "--min", "1"],
    ["project", "DATA/cube.h", "--drop", "4"],
    ["vertex-figure", "DATA/cube.h", "--vertex", "0,0,1/2"],
    ["balinski", "DATA/cube.h", "--remove", "0,0,0", "--from", "1,1,1", "--to", "1,0,0"],
    ["check", "DATA/halfplane.h", "--atomistic"],
    ["check"],
    ["facets", "DATA/empty.h"],
])
def test_exit_usage_errors(capsys, tmp_path, argv):
    (tmp_path / "empty.h").write_text("dim 1\nineq 1 >= 1\nineq -1 >= 0\n")
    argv = [a.replace("DATA/empty.h", str(tmp_path / "empty.h")).replace("DATA", str(fx.DATA)) for a in argv]
    status, _, err = run(capsys, *argv)
    assert status == 3 and "precondition" in err


def test_exit_failed_check(capsys, monkeypatch):
    monkeypatch.setattr(cli, "check_diamond", lambda L: False)
    status, out, _ = run(capsys, "check", fx.DATA / "cube.h", "--diamond")
    assert status == 4 and js(out)["ok"] is False


def test_exit_invariant(capsys, monkeypatch):
    monkeypatch.setattr(cli, "verify_outcome", lambda lp, out: False)
    status, _, err = run(capsys, "lp", fx.DATA / "fig1.h", "--min", "1,1")
    assert status == 4 and "invariant" in err


def test_fm_threshold_flag(capsys):
    a = run(capsys, "--fm-threshold", 1, "conv", fx.DATA / "octahedron.v")[1]
    b = run(capsys, "conv", fx.DATA / "octahedron.v")[1]
    assert Poly(H.parse_hformat(a)) == Poly(H.parse_hformat(b))


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "polyface", "vertices", str(fx.DATA / "segment.v")],
                         capture_output=True, text=True)
    assert out.returncode == 0
    assert json.loads(out.stdout)["vertices"] == [["0", "0"], ["3/2", "1"]]
