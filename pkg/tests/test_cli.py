import json
import math
import subprocess
import sys

import pytest

from angle_space.cli import main


def run(capsys, *args):
    code = main(list(args))
    out, err = capsys.readouterr()
    return code, out, err


def test_angle_l1(capsys):
    code, out, _ = run(capsys, "angle", "--weight", "lp:1", "--x", "1,0", "--y", "1,1")
    d = json.loads(out)
    assert code == 0 and d["csb_ok"]
    assert d["angle_rad"] == 0.722734 and d["angle_deg"] == 41.4096


def test_angle_csb_violation_exit_2(capsys):
    code, out, _ = run(capsys, "angle", "--weight", "polygon:0.5", "--x", "0.1,0.55",
                       "--y", "-0.1,0.55")
    d = json.loads(out)
    assert code == 2 and d["angle_rad"] is None and d["product"] == 1.2


def test_angle_generalized(capsys):
    code, out, _ = run(capsys, "angle", "--weight", "polygon:0.5", "--generalized",
                       "--x", "1,0", "--y", "0,1", "--precision", "17")
    assert code == 0 and json.loads(out)["angle_rad"] == pytest.approx(math.pi / 2, abs=1e-12)


def test_csb_tol_override(capsys):
    code, _, _ = run(capsys, "angle", "--weight", "polygon:0.5", "--x", "0.1,0.55",
                     "--y", "-0.1,0.55", "--csb-tol", "0.5")
    assert code == 0


def test_theta_curve_l1(capsys):
    code, out, err = run(capsys, "theta-curve", "--weight", "lp:1", "--x", "1,0", "--y", "0,1",
                         "--t-min", "-2", "--t-max", "2", "--steps", "5", "--precision", "17")
    rows = out.strip().splitlines()
    assert rows[0] == "t,theta_rad" and code == 0 and err == ""
    t1 = [r for r in rows[1:] if r.startswith("1,")][0]
    assert float(t1.split(",")[1]) == pytest.approx(math.acos(0.75), abs=1e-12)


def test_theta_curve_l2_closed_form(capsys):
    _, out, _ = run(capsys, "theta-curve", "--weight", "lp:2", "--x", "1,0", "--y", "0,1",
                    "--steps", "101", "--precision", "17")
    for row in out.strip().splitlines()[1:]:
        t, th = map(float, row.split(","))
        assert th == pytest.approx(math.acos(t / math.sqrt(1 + t * t)), abs=1e-10)


def test_theta_curve_axis_warns(capsys):
    code, out, err = run(capsys, "theta-curve", "--weight", "axis", "--x", "1,0", "--y", "1,1",
                         "--t-min", "-3", "--t-max", "1", "--steps", "9")
    assert "warning" in err and code == 0
    assert "-1,nan" in out


def test_sphere_polygon(capsys):
    _, out, _ = run(capsys, "sphere", "--weight", "polygon:0.5", "--n", "6")
    rows = out.strip().splitlines()
    assert rows[0] == "x1,x2"
    pts = {tuple(map(float, r.split(","))) for r in rows[1:]}
    assert pts == {(0, 0.5), (1, 1), (1, -1), (0, -0.5), (-1, -1), (-1, 1)}


def test_convexify_polygon(capsys):
    _, out, _ = run(capsys, "convexify", "--weight", "polygon:0.5")
    assert out.strip().splitlines()[1:] == ["-1,-1", "1,-1", "1,1", "-1,1"]


def test_polar_roundtrip(capsys):
    _, out, _ = run(capsys, "polar", "encode", "--weight", "lp:1", "--b1", "1,0", "--b2", "0,1",
                    "--v", "1,1")
    assert json.loads(out) == {"rho": 2.0, "alpha": 0.722734}
    _, out, _ = run(capsys, "polar", "decode", "--weight", "lp:1", "--rho", "2",
                    "--alpha", str(math.acos(0.75)))
    assert json.loads(out)["v"] == [1.0, 1.0]


def test_polar_missing_args(capsys):
    code, _, err = run(capsys, "polar", "encode", "--weight", "lp:1")
    assert code == 1 and "--v" in err


def test_corner_auto(capsys):
    code, out, _ = run(capsys, "corner", "--weight", "polygon:0.5")
    d = json.loads(out)
    assert code == 2 and d["heuristic_detection"]
    assert any(c["witness"]["product"] == 1.2 for c in d["corners"])


def test_corner_fake_spec(capsys):
    code, out, _ = run(capsys, "corner", "--weight", "lp:1", "--y-hat", "0,1", "--x-bar", "1,0",
                       "--m-minus", "-1", "--m-plus", "1")
    assert code == 0 and json.loads(out)["corners"][0]["verified"] is False


def test_axioms_l1(capsys):
    code, out, _ = run(capsys, "axioms", "--weight", "lp:1", "--n", "2000")
    st = {a["id"]: a["status"] for a in json.loads(out)["axioms"]}
    assert st == {**{f"An{i}": "pass" for i in range(1, 8)}, "An8": "fail", "An9": "fail",
                  "An10": "fail", "An11": "pass"}


def test_axioms_byte_identical(capsys):
    a = run(capsys, "axioms", "--weight", "lp:1.5", "--n", "300", "--seed", "3")[1]
    b = run(capsys, "axioms", "--weight", "lp:1.5", "--n", "300", "--seed", "3")[1]
    assert a == b


def test_seed_env_fallback(capsys, monkeypatch):
    monkeypatch.setenv("ANGLE_SPACE_SEED", "42")
    _, out, _ = run(capsys, "axioms", "--weight", "lp:2", "--n", "20")
    assert json.loads(out)["seed"] == 42
    monkeypatch.setenv("ANGLE_SPACE_SEED", "x")
    assert run(capsys, "axioms", "--weight", "lp:2", "--n", "20")[0] == 1


def test_prove_lemmas(capsys):
    code, out, _ = run(capsys, "prove-lemmas", "--n", "1000")
    d = json.loads(out)
    assert code == 0 and d["ok"] and d["phor_example"] == [2.6, 2.4]


def test_usage_errors(capsys):
    assert run(capsys, "angle", "--weight", "lp:x", "--x", "1,0", "--y", "1,1")[0] == 1
    assert run(capsys, "angle", "--weight", "lp:1", "--x", "1,0")[0] == 1
    assert run(capsys, "angle", "--weight", "lp:1", "--x", "1", "--y", "1,1")[0] == 1
    assert run(capsys, "nonsense")[0] == 1
    code, _, err = run(capsys, "angle", "--weight", "axis", "--x", "0,1", "--y", "1,1")
    assert code == 1 and "ZeroSetVector" in err


def test_weight_error_reports_position(capsys):
    _, _, err = run(capsys, "sphere", "--weight", "polygon:abc")
    assert "position 8" in err


def test_out_file(capsys, tmp_path):
    f = tmp_path / "o.json"
    code, out, _ = run(capsys, "angle", "--weight", "lp:2", "--x", "1,0", "--y", "0,1",
                       "--out", str(f))
    assert code == 0 and out == ""
    assert json.loads(f.read_text())["angle_deg"] == 90.0


def test_console_entry_point():
    r = subprocess.run([sys.executable, "-m", "angle_space", "angle", "--weight", "lp:1",
                        "--x", "1,0", "--y", "0,1"], capture_output=True, text=True)
    assert r.returncode == 0 and json.loads(r.stdout)["angle_deg"] == 90.0
