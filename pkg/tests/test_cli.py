import json
import subprocess
import sys

import pytest

from youngcurv.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_lr_text(capsys):
    code, out, _ = run(capsys, "lr", "--left", "2,1", "--right", "1")
    assert code == 0
    assert out.strip() == "[2 1][1] = [3 1] + [2 2] + [2 1 1]"


def test_lr_json(capsys):
    code, out, _ = run(capsys, "lr", "--left", "1,1", "--right", "1", "--json")
    data = json.loads(out)
    assert code == 0
    assert data["text"].endswith("[2 1] + [1 1 1]")


def test_symmetrizer(capsys):
    code, out, _ = run(capsys, "symmetrizer", "--tableau", "1,3;2,4", "--json")
    data = json.loads(out)
    assert code == 0
    assert len(data["element"]["terms"]) == 16
    assert data["essential_factor"] == "12"


def test_idempotents_single_nu(capsys):
    code, out, _ = run(capsys, "idempotents", "--nu", "-1", "--json")
    assert code == 0
    assert json.loads(out)["pass"] is True


def test_decompose(capsys):
    code, out, _ = run(capsys, "decompose", "--r", "3")
    assert code == 0
    assert "= 6" in out


def test_span_gamma(capsys):
    code, out, _ = run(capsys, "span", "--generator", "gamma", "--dim", "3", "--samples", "15", "--json")
    assert code == 0
    assert json.loads(out)["rank"] == 6


def test_verify_minkowski(capsys, tmp_path):
    target = tmp_path / "res.json"
    code, _, _ = run(capsys, "verify", "--metric", "minkowski", "--point", "0,1,1,1",
                     "--output", str(target))
    assert code == 0
    assert json.loads(target.read_text())["pass"] is True


def test_verify_bad_metric_is_usage_error(capsys):
    code, _, err = run(capsys, "verify", "--metric", "godel")
    assert code == 2
    assert "error" in err


def test_singular_point_is_usage_error(capsys):
    code, _, _ = run(capsys, "verify", "--metric", "schwarzschild", "--point", "0,2,1,0.5")
    assert code == 2


def test_malformed_partition(capsys):
    code, _, _ = run(capsys, "lr", "--left", "1,x", "--right", "1")
    assert code == 2


def test_missing_required_argument(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["lr", "--left", "1"])
    assert exc.value.code == 2


def test_config_file_and_override(capsys, tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"seed": 5, "metric": "langevin", "point": [0, 2, 0, 0]}))
    code, out, _ = run(capsys, "span", "--generator", "alpha", "--dim", "3", "--samples", "12",
                       "--config", str(cfg), "--json")
    assert code == 0 and json.loads(out)["seed"] == 5
    code, out, _ = run(capsys, "span", "--generator", "alpha", "--dim", "3", "--samples", "12",
                       "--config", str(cfg), "--seed", "9", "--json")
    assert json.loads(out)["seed"] == 9
    code, out, _ = run(capsys, "verify", "--config", str(cfg), "--json")
    data = json.loads(out)
    assert code == 0 and data["metric"] == "langevin"


def test_bad_config_and_tolerance(capsys, tmp_path):
    code, _, _ = run(capsys, "report", "--config", str(tmp_path / "missing.json"))
    assert code == 2
    code, _, _ = run(capsys, "verify", "--tol", "formula=-1")
    assert code == 2


def test_seed_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("YOUNGCURV_SEED", "17")
    code, out, _ = run(capsys, "span", "--generator", "gamma", "--dim", "2", "--samples", "3", "--json")
    assert json.loads(out)["seed"] == 17


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "youngcurv", "lr", "--left", "1", "--right", "1"],
                          capture_output=True, text=True, check=True)
    assert proc.stdout.strip() == "[1][1] = [2] + [1 1]"
