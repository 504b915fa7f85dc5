from __future__ import annotations

import io
import json

import pytest

from tropical.cli import main

from conftest import CONIC, DOUBLE_CONIC, LINE


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def ok(*argv):
    code, out, err = run(*argv)
    assert code == 0, err
    return json.loads(out)


def test_roots():
    doc = ok("roots", "x^3+2x^2+3x+(-1)")
    assert [r["value"] for r in doc["roots"]] == ["-4", "1", "2"]


def test_factor():
    doc = ok("factor", "x^2+0")
    assert doc["lead"] == "0"
    assert doc["roots"] == [{"order": 2, "value": "0"}]


def test_eval():
    assert ok("eval", "0", "-x", "5", "-y", "-7")["value"] == "0"
    assert ok("eval", "x^3+2x^2+3x+(-1)", "-x", "0")["value"] == "3"
    assert ok("eval", "1+x+y", "-x", "2", "-y=-inf")["value"] == "2"


def test_curve_and_degree():
    assert ok("curve", LINE)["vertices"] == [["-3/2", "11/2"]]
    assert ok("degree", CONIC)["degree"] == 2
    assert ok("degree", "0+x+y+xy")["degree"] == "undefined"
    assert ok("balance", DOUBLE_CONIC)["balanced"] is True


def test_intersections():
    assert ok("bezout", "0+0x+0y", CONIC)["total"] == 2
    assert ok("selfint", CONIC)["total"] == 4
    assert ok("stable", "0+0x+0y", "0+1x+0y")["points"][0]["point"] == ["-1", "0"]
    assert ok("intersect", "0+0x+0y", "0+(-2)x+(-1)y")["points"][0]["point"] == ["1", "1"]


def test_transverse_failure_exit_code():
    code, _, err = run("intersect", "0+0x+0y", "0+0x+0y")
    assert code == 2 and "overlap" in err


def test_patchwork_and_components(tmp_path):
    assert ok("components", LINE, "--model", "projective")["pseudolines"] == [True]
    doc = ok("components", CONIC, "--model", "all")
    assert set(doc["models"]) == {"punctured", "plane", "projective"}
    assert ok("harnack", CONIC)["best"] == 2
    svg = tmp_path / "real.svg"
    ok("patchwork", CONIC, "--signs", "+-+-+-", "--svg", str(svg))
    assert svg.read_bytes().startswith(b"<?xml")
    code, _, err = run("patchwork", CONIC, "--signs", "++")
    assert code == 2
    code, _, _ = run("patchwork", DOUBLE_CONIC)
    assert code == 2


def test_signs_file(tmp_path):
    f = tmp_path / "s.json"
    f.write_text(json.dumps({"0,0": 1, "1,0": -1, "0,1": 1}))
    assert ok("components", LINE, "--signs-file", str(f))["components"] == 1


def test_amoeba_and_dequant():
    doc = ok("amoeba", "0+0x+0y", "--t", "10", "--n-modulus", "21", "--n-arg", "20")
    assert doc["skipped"] == 0 and doc["distance"] > 0
    doc = ok("amoeba", CONIC, "--study", "10,100", "--n-modulus", "21", "--n-arg", "20")
    assert len(doc["rows"]) == 2
    assert ok("dequant", "0", "0", "--t", "2")["value"] == 1.0


def test_file_argument(tmp_path):
    f = tmp_path / "p.txt"
    f.write_text(LINE + "\n")
    assert ok("curve", "@" + str(f))["degree"] == 1


def test_min_convention():
    assert ok("roots", "--min-convention", "x^2+(-1)x+1")["roots"] == [
        {"order": 1, "value": "-1"}, {"order": 1, "value": "2"}]


def test_errors():
    assert run("roots", "1 - 2")[0] == 2
    assert run("roots", "x+y")[0] == 2
    assert run("curve", "--bogus", "1+x")[0] == 2
    assert run()[0] == 2
    assert run("stable", "0+x+y+xy", CONIC)[0] == 2
    assert run("--help")[0] == 0


def test_deterministic_output():
    assert run("selfint", CONIC) == run("selfint", CONIC)
