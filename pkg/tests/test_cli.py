import json

import pytest

from ghilb.cli import main, run_command
from ghilb.exact import Matrix
from ghilb.liealg import build_spec, principal_nilpotent


def write_pair(tmp_path, a, b, name="pair.json"):
    path = tmp_path / name
    path.write_text(json.dumps({"A": a.to_json(), "B": b.to_json()}))
    return str(path)


def strip_timing(payload):
    return {k: v for k, v in payload.items() if k != "timing"}


def test_construct_slice_charpoly(capsys):
    code, payload = run_command(["construct", "--spec", "B2", "--slice", "t2=1,t4=2"])
    assert code == 0
    assert payload["result"]["charpoly"] == "x^5 - 2*x^3 + 4*x"
    assert all(c["status"] == "pass" for c in payload["checks"])
    assert json.loads(capsys.readouterr().out)["suite"] == "construct"


def test_construct_triple_and_spec_data():
    code, payload = run_command(["construct", "--spec", "D4", "--object", "triple"])
    assert code == 0
    assert payload["result"]["spec"] == {"name": "D4", "m": 8, "dim": 28, "rank": 4, "exponents": [1, 3, 5, 3]}


def test_classify_noncommuting_exits_2(tmp_path, capsys):
    path = write_pair(tmp_path, Matrix.unit(3, 0, 1), Matrix.unit(3, 1, 0))
    code, err = run_command(["classify", "--spec", "A2", "--pair", path])
    assert code == 2 and err["error"] == "NonCommuting"
    assert json.loads(capsys.readouterr().err)["error"] == "NonCommuting"


@pytest.mark.parametrize(
    "argv",
    [
        ["construct", "--spec", "E8"],
        ["classify", "--spec", "A2"],
        ["classify", "--spec", "A2", "--pair", "/nonexistent.json"],
        ["construct", "--spec", "B2", "--slice", "t3=1"],
        ["frobnicate"],
    ],
)
def test_bad_input_exits_2(argv, capsys):
    code, _ = run_command(argv)
    assert code == 2


def test_hilb_classify_alias(tmp_path):
    path = write_pair(tmp_path, Matrix.unit(3, 0, 1), Matrix.unit(3, 0, 2))
    code, payload = run_command(["hilb", "classify", "--spec", "A2", "--pair", path])
    assert code == 0
    cls = payload["result"]["class"]
    assert (cls["dimZ"], cls["in_hilb"], cls["cyclic"]["status"]) == (2, True, "probably-no")


def test_mu2_and_ideal(tmp_path):
    spec = build_spec("A3")
    f = principal_nilpotent(spec)
    path = write_pair(tmp_path, f, f.scale(3) + f @ f @ f)
    code, payload = run_command(["mu2", "--spec", "A3", "--pair", path])
    assert code == 0 and payload["result"]["mu2"] == "3"
    code, payload = run_command(["ideal", "--spec", "A3", "--pair", path])
    assert code == 0
    assert payload["result"]["ideal"]["staircase"] == [[0, 0], [1, 0], [2, 0], [3, 0]]


def test_haiman_and_symplectic(tmp_path):
    pts = tmp_path / "pts.json"
    pts.write_text(json.dumps([["1", "1"], ["2", "2"]]))
    code, payload = run_command(["haiman", "--diagram", "1,1", "--points", str(pts)])
    assert code == 0 and len(payload["result"]["coords"]) == 2
    code, payload = run_command(["symplectic-check", "--k", "2", "--l", "2"])
    assert code == 0 and payload["result"]["sign"] == 1
    code, _ = run_command(["symplectic-check", "--diagram", "2,1"])
    assert code == 2


def test_spectral_exit_codes():
    assert run_command(["spectral", "--spec", "A3"])[0] == 0
    assert run_command(["spectral", "--spec", "A3", "--antiholomorphic"])[0] == 1


def test_gcx_and_real():
    assert run_command(["gcx", "verify", "--shape", "D3", "--seeds", "1"])[0] == 0
    code, payload = run_command(["real", "sl2r-check"])
    assert code == 0 and payload["result"]["scalar at s=1/2"] == "-7/25+24/25*i"


def test_reports_are_deterministic(tmp_path):
    argv = ["gcx", "verify", "--shape", "C2", "--seed", "42", "--seeds", "2"]
    first = strip_timing(run_command(argv)[1])
    second = strip_timing(run_command(argv)[1])
    assert first == second


def test_out_file_and_text_format(tmp_path):
    out = tmp_path / "r.txt"
    code = main(["construct", "--spec", "C2", "--slice", "t2=1", "--format", "text", "--out", str(out)])
    assert code == 0
    text = out.read_text()
    assert text.startswith("construct (seed 0)") and "[PASS] charpoly" in text
