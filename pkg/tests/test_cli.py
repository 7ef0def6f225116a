import json
import subprocess
import sys

import pytest

from tamecalc.cli import main
from tamecalc.config import DEFAULT_CONFIG, Config, build_metric, build_presentation, load_config
from tamecalc.errors import ConfigError


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def write_config(tmp_path, metric, algebra=None):
    cfg = {"algebra": algebra or {"type": "nc-torus", "n": 2, "theta": [["0", "1/4"], ["-1/4", "0"]]},
           "metric": metric}
    path = tmp_path / "config.json"
    path.write_text(json.dumps(cfg))
    return str(path)


def test_scalar_conformal(capsys, tmp_path):
    cfg = write_config(tmp_path, {"type": "conformal", "k": "U1", "k_inv": "U1'"})
    code, out, _ = run(capsys, "-c", cfg, "scalar")
    assert code == 0
    assert json.loads(out) == {"scal": "0"}


def test_gauss_bonnet_badmetric(capsys, tmp_path):
    cfg = write_config(tmp_path, {"type": "badmetric", "k": "U2"})
    code, out, _ = run(capsys, "-c", cfg, "gauss-bonnet")
    assert code == 0
    data = json.loads(out)
    assert data["integral"] == "1/4"
    assert data["form"] == "e1^e2*(1/4)"


def test_verify_all_default(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "all")
    assert code == 0
    assert json.loads(out)["pass"] is True


@pytest.mark.parametrize("expr,expected", [
    ("U1*U2 - w(1/4)*U2*U1", "0"),
    ("(U1 + U2)^2", "U2^2 + (1 - i)*U1*U2 + U1^2"),
])
def test_eval(capsys, expr, expected):
    code, out, _ = run(capsys, "eval", expr)
    assert code == 0
    assert json.loads(out) == {"expr": expected}


def test_eval_other_backends(capsys, tmp_path):
    cfg = write_config(tmp_path, {"type": "g0"}, {"type": "cuntz", "n": 2})
    assert run(capsys, "-c", cfg, "eval", "S1*(S1)")[1].strip() == '{"expr":"1"}'
    cfg = write_config(tmp_path, {"type": "g0"}, {"type": "free-group", "n": 2})
    assert run(capsys, "-c", cfg, "eval", "g1'*g1")[1].strip() == '{"expr":"1"}'


def test_christoffel_and_curvature(capsys, tmp_path):
    cfg = write_config(tmp_path, {"type": "conformal", "k": "U1"})
    code, out, _ = run(capsys, "-c", cfg, "christoffel")
    data = json.loads(out)
    assert code == 0
    assert data["christoffel"] == {"G^1_11": "1/2", "G^1_22": "-1/2", "G^2_12": "1/2", "G^2_21": "1/2"}
    assert data["metric"] == {"type": "conformal", "k": "U1"}
    code, out, _ = run(capsys, "-c", cfg, "curvature")
    assert code == 0 and "Omega" in json.loads(out)


def test_exit_codes(capsys, tmp_path):
    bad = write_config(tmp_path, {"type": "matrix", "entries": [["U1", "0"], ["0", "U2"]]})
    code, out, err = run(capsys, "-c", bad, "scalar")
    assert code == 2 and out == "" and "NotStronglySigmaCompatible" in err
    assert run(capsys, "eval", "U3")[0] == 3
    assert run(capsys, "eval", "U1 +")[0] == 3
    assert run(capsys, "-c", str(tmp_path / "missing.json"), "scalar")[0] == 2
    rank3 = write_config(tmp_path, {"type": "g0"}, {"type": "free-group", "n": 3})
    assert run(capsys, "-c", rank3, "gauss-bonnet")[0] == 2


def test_failed_check_exit_code(capsys, tmp_path, monkeypatch):
    import tamecalc.cli as cli
    monkeypatch.setattr(cli, "run_suites", lambda names, P, g, seed: {"pass": False, "suites": {}})
    assert run(capsys, "verify")[0] == 1


def test_output_is_deterministic(capsys, tmp_path):
    cfg = write_config(tmp_path, {"type": "conformal", "k": "U1 U2"})
    first = run(capsys, "-c", cfg, "--seed", "3", "verify", "--suite", "algebra")[1]
    second = run(capsys, "-c", cfg, "--seed", "3", "verify", "--suite", "algebra")[1]
    assert first == second
    assert "\n" not in first.strip()
    pretty = run(capsys, "-c", cfg, "--pretty", "scalar")[1]
    assert pretty.startswith("{\n")


def test_float_mode(capsys, tmp_path):
    cfg = write_config(tmp_path, {"type": "badmetric", "k": "U2"},
                       {"type": "nc-torus", "n": 2, "theta": "0.1"})
    code, out, _ = run(capsys, "-c", cfg, "--float", "gauss-bonnet")
    assert code == 0
    assert abs(float(json.loads(out)["integral"]) - 0.25) < 1e-12


def test_formal_backend_verify(capsys, tmp_path):
    cfg = write_config(tmp_path, {"type": "conformal", "k": "k", "k_inv": "k'"}, {"type": "formal", "n": 2})
    code, out, _ = run(capsys, "-c", cfg, "verify")
    assert code == 0
    assert set(json.loads(out)["suites"]) == {"levi-civita", "bianchi", "algebra"}


def test_config_validation():
    with pytest.raises(ConfigError):
        Config.from_dict({"metric": {}})
    with pytest.raises(ConfigError):
        Config.from_dict({"algebra": {"type": "cuntz", "n": 2}, "colour": 1})
    with pytest.raises(ConfigError):
        build_presentation(Config.from_dict({"algebra": {"type": "cuntz", "n": 2, "theta": "1/4"}}))
    with pytest.raises(ConfigError):
        build_presentation(Config.from_dict({"algebra": {"type": "nc-torus", "n": 2}}))
    with pytest.raises(ConfigError):
        build_presentation(Config.from_dict({"algebra": {"type": "torus", "n": 2}}))
    cfg = Config.from_dict({"algebra": {"type": "free-group", "n": 2}, "metric": {"type": "nope"}})
    with pytest.raises(ConfigError):
        build_metric(cfg, build_presentation(cfg))


def test_default_config():
    cfg = load_config(None)
    assert cfg.seed == 0 and not cfg.float_mode
    P = build_presentation(cfg)
    assert P.kind == "nc-torus" and P.n == 2
    assert build_metric(cfg, P).describe() == {"type": "g0"}
    assert DEFAULT_CONFIG["algebra"]["type"] == "nc-torus"


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "tamecalc.cli", "eval", "U1 U1'"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout == '{"expr":"1"}\n'
