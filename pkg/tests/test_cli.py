import json
import os
import subprocess
import sys

import pytest

from zetashift.cli import real, run, threads_from


def out(capsys, argv):
    code = run(argv)
    return code, capsys.readouterr()


def test_pairs_optimize_golden(capsys):
    code, io = out(capsys, ["pairs", "optimize", "--sigma", "1/2", "--depth", "6", "--named"])
    assert code == 0
    d = json.loads(io.out)
    assert (d["pair"]["kappa"], d["pair"]["lambda"], d["theta"]) == ("9/26", "7/13", "23/70")


def test_ledger_golden(capsys):
    code, io = out(capsys, ["pairs", "ledger", "--name", "Theorem1"])
    assert code == 0 and '"1273/4053"' in io.out


def test_partition_csv(capsys, tmp_path):
    code, io = out(capsys, ["phi", "partition", "--phi", "exp:1", "--T", "10", "--format", "csv"])
    assert code == 0
    rows = io.out.splitlines()
    assert rows[0] == "k,T_k,inv_psi"
    assert [r.split(",")[1] for r in rows[1:]] == [str(k) for k in range(10, 21)]
    path = tmp_path / "p.csv"
    assert run(["phi", "partition", "--phi", "exp:1", "--T", "10", "--out", str(path)]) == 0
    assert path.read_text() == io.out


@pytest.mark.parametrize("argv,code", [
    ([], 1),
    (["bogus"], 1),
    (["pairs", "explode"], 1),
    (["pairs", "optimize", "--sigma", "0.5x"], 2),
    (["pairs", "optimize", "--sigma", "1", "--depth", "0"], 2),
    (["pairs", "generate", "--depth", "20"], 2),
    (["zeta", "eval", "--sigma", "1", "--t", "0"], 3),
    (["zeta", "eval", "--sigma", "0.5", "--t", "2e6"], 3),
    (["scan", "run", "--center", "0.55"], 2),
    (["phi", "scan", "--phi", "exp:1", "--T", "8"], 3),
    (["phi", "partition", "--phi", "poly:0,0,1"], 2),
    (["pairs", "ledger", "--format", "xml"], 1),
])
def test_exit_codes(capsys, argv, code):
    assert run(argv) == code


def test_config_file(tmp_path, capsys):
    cfg = tmp_path / "c.json"
    cfg.write_text(json.dumps({"sigma": "1/2", "depth": 3}))
    code, io = out(capsys, ["pairs", "optimize", "--config", str(cfg)])
    assert code == 0 and json.loads(io.out)["theta"] == "1/3"
    # flags beat the file
    code, io = out(capsys, ["pairs", "optimize", "--config", str(cfg), "--depth", "6", "--named"])
    assert json.loads(io.out)["theta"] == "23/70"
    cfg.write_text(json.dumps({"nope": 1}))
    assert run(["pairs", "optimize", "--config", str(cfg)]) == 2
    assert run(["pairs", "optimize", "--config", str(tmp_path / "missing.json")]) == 2


def test_zeta_eval(capsys):
    code, io = out(capsys, ["zeta", "eval", "--sigma", "2", "--t", "0"])
    d = json.loads(io.out)
    assert code == 0 and abs(d["value"]["re"] - 1.64493406684823) < 1e-12


def test_suite_determinism(capsys):
    argv = ["zeta", "decomp", "--suite", "--count", "2", "--seed", "11"]
    _, a = out(capsys, argv)
    _, b = out(capsys, argv)
    assert a.out == b.out and json.loads(a.out)["seed"] == 11


def test_scan_and_phi_commands(capsys):
    code, io = out(capsys, ["scan", "curve", "--T", "100", "--H", "5", "--format", "csv"])
    assert code == 0 and io.out.startswith("epsilon,density\n")
    code, io = out(capsys, ["phi", "growth", "--phi", "exppoly:base=e,coeffs=0,0,1", "--T", "5"])
    assert code == 0 and json.loads(io.out)["ok"] is True
    code, io = out(capsys, ["ms", "mv", "--sigma", "3/4", "--H", "10"])
    assert code == 0 and json.loads(io.out)["constant"] <= 10


def test_threads_resolution(monkeypatch):
    monkeypatch.setenv("ZETASHIFT_THREADS", "3")
    assert threads_from(None) == 3
    assert threads_from("2") == 2
    monkeypatch.delenv("ZETASHIFT_THREADS")
    assert threads_from(None) == (os.cpu_count() or 1)


def test_real_parses_rationals():
    assert real("3/4") == 0.75 and real("0.5") == 0.5


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "zetashift", "pairs", "ledger", "--name", "Theorem1"],
                       capture_output=True, text=True)
    assert r.returncode == 0 and "1273/4053" in r.stdout
    r = subprocess.run([sys.executable, "-m", "zetashift", "nope"], capture_output=True, text=True)
    assert r.returncode == 1
