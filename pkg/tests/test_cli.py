import json
import math

import pytest

from phasequant.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_star_json(capsys):
    code, out, _ = run_cli(capsys, "star", "q", "p")
    assert code == 0
    data = json.loads(out)
    assert data["variables"] == ["q", "p"]
    assert {"re": "0", "im": "1/2", "hbar": 1, "exps": [0, 0]} in data["terms"]


def test_star_hbar_substitution(capsys):
    code, out, _ = run_cli(capsys, "--hbar", "1/2", "star", "q", "p")
    data = json.loads(out)
    assert {"re": "0", "im": "1/4", "hbar": 0, "exps": [0, 0]} in data["terms"]


def test_moyal_bracket(capsys):
    code, out, _ = run_cli(capsys, "moyal-bracket", "q^2", "p^2")
    data = json.loads(out)
    assert data["terms"] == [{"re": "4", "im": "0", "hbar": 0, "exps": [1, 1]}]


def test_groenewold(capsys):
    code, out, _ = run_cli(capsys, "groenewold")
    data = json.loads(out)
    assert data["terms"] == [{"re": "-3/2", "im": "0", "hbar": 2, "exps": [0, 0]}]


def test_weyl_and_wigner_map_invert(capsys):
    code, out, _ = run_cli(capsys, "weyl", "q^2*p")
    op = json.loads(out)
    assert {"re": "0", "im": "-1", "hbar": 1, "word": {"qexps": [1], "pexps": [0]}} in op["terms"]
    code, out, _ = run_cli(capsys, "wigner-map", "q^2*p - i*hbar*q")
    back = json.loads(out)
    assert back["terms"] == [{"re": "1", "im": "0", "hbar": 0, "exps": [2, 1]}]


def test_prequant(capsys):
    code, out, _ = run_cli(capsys, "prequant", "q")
    data = json.loads(out)
    assert data["operator"]["zeroth_order"] == [
        {"re": "1", "im": "0", "hbar": 0, "exps": [1, 0]}
    ]


def test_circle(capsys):
    code, out, _ = run_cli(capsys, "circle", "--lam", "1/2", "--window", "1")
    data = json.loads(out)
    assert data["spectrum"]["0"] == "1/2*hbar"
    assert data["spectrum"]["-1"] == "-1/2*hbar"


def test_fock_report(capsys):
    code, out, _ = run_cli(capsys, "fock", "--modes", "2", "--cutoff", "4")
    assert code == 0
    assert json.loads(out)["all_pass"]


def test_su2_report(capsys):
    code, out, _ = run_cli(capsys, "su2", "--N", "3")
    assert code == 0
    assert json.loads(out)["all_pass"]


def test_car_report(capsys):
    code, out, _ = run_cli(capsys, "car", "--modes", "4")
    assert code == 0
    assert json.loads(out)["all_pass"]


def test_wigner_csv(capsys):
    code, out, _ = run_cli(capsys, "wigner", "--state", "0", "--grid=0:0:1")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "x,p,F"
    x, p, F = (float(v) for v in lines[1].split(","))
    assert abs(F - 1.0 / math.pi) < 1e-9


def test_wigner_figure(capsys, tmp_path):
    target = tmp_path / "w.png"
    code, out, _ = run_cli(
        capsys, "wigner", "--state", "1", "--grid=-2:2:11", "--figure", str(target)
    )
    assert code == 0
    assert target.exists() and target.stat().st_size > 0


def test_sphere(capsys):
    code, out, _ = run_cli(capsys, "sphere", "--N", "2")
    assert code == 0
    data = json.loads(out)
    assert abs(data["normalized_integral"] - 2.0) < 1e-9
    assert abs(data["halved_normalization"] - 1.0) < 1e-9


def test_loop(capsys, tmp_path):
    path = tmp_path / "loop.json"
    path.write_text(json.dumps([[1, 1], [-1, 1], [-1, -1], [1, -1]]))
    code, out, _ = run_cli(capsys, "loop", "--path", str(path))
    assert code == 0
    assert json.loads(out)["winding"] == 1


def test_kgeom(capsys):
    code, out, _ = run_cli(capsys, "kgeom")
    assert code == 0
    assert json.loads(out)["all_pass"]


def test_zeta(capsys):
    code, out, _ = run_cli(capsys, "zeta", "--beta", "2", "--cutoff", "100000")
    data = json.loads(out)
    lo, hi = data["bracket"]
    assert lo <= math.pi**2 / 6 <= hi


def test_run_suite_exit_codes(capsys):
    code, out, _ = run_cli(capsys, "run", "kgeom")
    assert code == 0
    report = json.loads(out)
    assert all(c["status"] == "pass" for c in report["checks"])


def test_run_deterministic(capsys):
    _, out1, _ = run_cli(capsys, "run", "moyal")
    _, out2, _ = run_cli(capsys, "run", "moyal")
    assert out1 == out2


def test_run_csv_format(capsys):
    code, out, _ = run_cli(capsys, "--format", "csv", "run", "kgeom")
    assert code == 0
    assert out.splitlines()[0] == "id,anchor,status,tolerance,witness"


def test_parse_error_exit_code(capsys):
    code, _, err = run_cli(capsys, "star", "q +* p", "p")
    assert code == 2
    assert "parse error" in err


def test_unknown_variable_exit_code(capsys):
    code, _, err = run_cli(capsys, "star", "x", "p")
    assert code == 2


def test_config_file_and_flag_override(capsys, tmp_path):
    cfg = tmp_path / "pq.cfg"
    cfg.write_text("hbar = 1/2\n# comment line\nformat = csv\n")
    code, out, _ = run_cli(capsys, "--config", str(cfg), "star", "q", "p")
    assert out.splitlines()[0] == "re,im,hbar,exps"
    assert "0,1/4,0" in out
    # the flag wins over the file
    code, out, _ = run_cli(capsys, "--config", str(cfg), "--format", "json", "star", "q", "p")
    json.loads(out)


def test_env_override(capsys, monkeypatch):
    monkeypatch.setenv("PHASEQUANT_HBAR", "1/4")
    _, out, _ = run_cli(capsys, "star", "q", "p")
    data = json.loads(out)
    assert {"re": "0", "im": "1/8", "hbar": 0, "exps": [0, 0]} in data["terms"]


def test_bad_config_file(capsys, tmp_path):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("this is not key value\n")
    code, _, err = run_cli(capsys, "--config", str(cfg), "groenewold")
    assert code == 2


def test_usage_error_unknown_suite():
    with pytest.raises(SystemExit) as err:
        main(["run", "nosuch"])
    assert err.value.code == 2
