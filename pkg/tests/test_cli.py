import json
import subprocess
import sys

import pytest

from oscover.cli import main, run
from oscover.piclattice import PicClass

LAMBDA = '{"c":13,"fibers":[3,0,0,0],"s":[-1,0,0,0],"r":[0,-5,-5,-5]}'


def test_genus():
    res = run(["genus", "--class", LAMBDA])
    assert res.status == "ok" and res.payload["genus"] == 7


def test_check_cover_pass_and_fail():
    ok = run(["check-cover", "--d", "2", "--n", "13", "--rho", "1", "--g", "7", "--gamma", "0,5,5,5"])
    assert ok.status == "ok" and ok.payload["passed"]
    bad = run(["check-cover", "--d", "2", "--n", "13", "--g", "8", "--gamma", "0,5,5,5"])
    assert bad.exit_code == 0 and bad.payload["violations"] == ["genus_bound"]


def test_intersect_and_round_trip():
    res = run(["intersect", "--a", LAMBDA, "--b", LAMBDA])
    assert res.payload == {"intersection": 2, "linearly_equivalent": True}
    assert PicClass.from_json(run(["genus", "--class", LAMBDA]).payload["class"]) == PicClass.from_json(LAMBDA)


def test_build_family_json():
    res = run(["build-family", "--d", "2", "--mu", "0,1,1,1", "--family", "A", "--k", "0"])
    assert res.status == "ok"
    doc = res.payload
    assert (doc["n"], doc["g"], doc["gamma"]) == (13, 7, [0, 5, 5, 5])
    assert doc["readings"]["Z_prime_fiber"]["adopted"] == 1
    assert doc["readings"]["F_j_multiplicity"]["adopted"] == 2
    assert all(c["ok"] for c in doc["verification"])
    assert "certificates" in doc


def test_build_family_english_eps():
    res = run(["build-family", "--d", "2", "--mu", "0,1,1,1", "--eps", "0,1,1,1", "--eps-convention", "english"])
    assert res.payload["gamma"] == [0, 5, 5, 5]


def test_domain_error_exit_code():
    res = run(["build-family", "--d", "2", "--mu", "1,1,1,1"])
    assert res.status == "domain-error" and res.exit_code == 1
    assert res.diagnostics[0]["severity"] == "error"


@pytest.mark.parametrize("argv", [
    ["frobnicate"],
    ["check-cover", "--d", "2", "--n", "13", "--g", "7", "--gamma", "0,5,5"],
    ["genus", "--class", "{bad"],
    ["build-family", "--d", "2", "--mu", "0,1,1,1", "--signs", "1,2,1,1"],
])
def test_usage_errors(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        run(argv)
    assert exc.value.code == 2


def test_enumerate_csv_and_out(tmp_path, capsys):
    assert main(["enumerate", "--d-max", "2", "--mu-max", "1", "--genus-max", "10"]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[0].startswith("d,mu0,mu1,mu2,mu3,family,k")
    assert "2,0,1,1,1,A,0,0,5,5,5,13,7,1" in out

    path = tmp_path / "t.json"
    assert main(["enumerate", "--d-max", "1", "--mu-max", "2", "--genus-max", "2",
                 "--format", "json", "--out", str(path)]) == 0
    assert json.loads(path.read_text())


def test_verify_paper_small():
    res = run(["verify-paper", "--d-max", "2", "--mu-max", "2", "--trials", "200"])
    assert res.status == "ok" and res.exit_code == 0
    assert {c["key"] for c in res.payload["criteria"]} >= {f"C{i}" for i in range(1, 10)}


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "oscover", "genus", "--class", LAMBDA],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["payload"]["genus"] == 7
