import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from fig8char.cli import main, read_repr, write_repr

FIXTURE = Path(__file__).parent / "fixtures" / "example_rep.json"


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


def test_classify_intersections():
    code, text = run("classify", "--coords", "4,4,8,8,3,3,3,3")
    assert code == 0
    assert text.splitlines()[0] == "XTR XPR V0"
    assert "x1=2" in text
    code, text = run("classify", "--coords", "2,2,2,2,1,1,1,1")
    assert code == 0 and text.splitlines()[0] == "XPR V0 V1 V2"


def test_classify_empty_and_bad_input():
    assert run("classify", "--coords", "1,1,1,1,1,1,1,1")[0] == 3
    assert run("classify", "--coords", "1,2,x")[0] == 2
    assert run("classify", "--coords", "1,2,3")[0] == 2
    assert run("classify", "--coords", "1,1,1,1,1,1,1,s")[0] == 2


def test_classify_from_file(tmp_path):
    f = tmp_path / "pt.json"
    f.write_text(json.dumps({"coords": ["2", "2", "2", "2", "1", "1", "1", "1"]}))
    code, text = run("classify", "--file", str(f))
    assert code == 0 and "V1" in text


def test_trace_fixture():
    code, text = run("trace", "--rep", str(FIXTURE))
    assert code == 0
    assert text.strip() == "3,3,6,6,7/2-1/2*s,7/2+1/2*s,1,1 eta=3"
    code, text = run("trace", "--rep", str(FIXTURE), "--orbit")
    assert code == 0 and "y3=27" in text


def test_trace_relation_failure(tmp_path):
    data = json.loads(FIXTURE.read_text())
    data["generators"]["T"][0][0] = "1"
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(data))
    assert run("trace", "--rep", str(bad))[0] == 4


def test_trace_malformed(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run("trace", "--rep", str(bad))[0] == 2
    bad.write_text(json.dumps({"field": {"base": "Q"}, "alphabet": "ST", "generators": {}}))
    assert run("trace", "--rep", str(bad))[0] == 2


def test_roundtrip_is_bit_exact(tmp_path):
    rep, normalized = read_repr(FIXTURE)
    out = tmp_path / "again.json"
    write_repr(out, rep, normalized)
    assert out.read_text() == FIXTURE.read_text()


@pytest.mark.parametrize("component,params,extra", [
    ("XTR", "3,3", []),
    ("XPR", "11,22,3", []),
    ("V0", "2,5", []),
    ("V2", "3,5", ["--branch", "-"]),
    ("V1", "2,5", []),
    ("SLICE", "1,-3,7,2", ["--target", "V2"]),
])
def test_construct_then_trace(tmp_path, component, params, extra):
    out = tmp_path / "rep.json"
    code, _ = run("construct", "--component", component, "--params", params,
                  "--out", str(out), *extra)
    assert code == 0
    code, text = run("trace", "--rep", str(out), "--orbit")
    assert code == 0 and "alpha=" in text


def test_construct_excluded_and_arity():
    assert run("construct", "--component", "V0", "--params", "3,3")[0] == 5
    assert run("construct", "--component", "V0", "--params", "3")[0] == 2


def test_construct_xtr_trace(tmp_path):
    out = tmp_path / "xtr.json"
    assert run("construct", "--component", "XTR", "--params", "3,3", "--out", str(out))[0] == 0
    assert run("trace", "--rep", str(out))[1].strip() == "3,3,3,3,3,3,3,3 eta=3"


def test_construct_slice_example(tmp_path):
    out = tmp_path / "v1.json"
    # (x0, x1, y0, y1) = g(3, 3, 7/2 + s/2) with s^2 = -7
    params = "3/2-1/2*s,1,1/2+1/2*s,3/2+1/2*s"
    code, _ = run("construct", "--component", "SLICE", "--params", params, "--sqrt", "-7",
                  "--target", "V1", "--out", str(out))
    assert code == 0
    code, text = run("trace", "--rep", str(out))
    assert code == 0 and text.startswith("3,3,3,3,1,1,")


def test_symmetry():
    code, text = run("symmetry", "--op", "h", "--coords", "3,3,3,3,1,1,2,2")
    assert code == 0 and text.strip() == "3,3,6,6,2,2,1,1"
    code, text = run("symmetry", "--op", "f", "--coords", "1,2,3,4,5,6,7,8")
    assert text.strip() == "2,1,4,3,6,5,7,8"
    code, text = run("symmetry", "--op", "w", "--coords", "1,0,0,0,5,6,7,8", "--orbit")
    assert code == 0 and text.splitlines()[0].startswith("w,")


def test_suite_command():
    code, text = run("suite", "--list")
    assert code == 0 and len(text.splitlines()) == 16
    code, text = run("suite", "--name", "intersection-table", "--json")
    assert code == 0 and json.loads(text)["result"] == "PASS"
    assert run("suite", "--name", "nope")[0] == 2
    assert run("suite")[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "fig8char", "classify", "--coords",
                           "1,1,1,1,1,1,1,1"], capture_output=True, text=True, check=False)
    assert proc.returncode == 3
