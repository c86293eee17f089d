import json
import subprocess
import sys

import pytest

from catalan_cf import config
from catalan_cf.cli import main
from catalan_cf.verify import THEOREMS, table, verify


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


@pytest.fixture(autouse=True)
def fresh_config(monkeypatch):
    monkeypatch.delenv(config.ENV_CAP, raising=False)
    monkeypatch.delenv(config.ENV_CONFIG, raising=False)
    config.set_active(None)
    yield
    config.set_active(None)


# -- verify / table -------------------------------------------------------

def test_verify_examples():
    assert verify("t1.1", 6).passed
    assert verify("T1.1", 0).passed
    r = verify("t1.3", 5)
    assert r.passed
    assert all(c.routes["listed_expansion"] for c in r.cells)


def test_verify_unknown_and_cap():
    with pytest.raises(KeyError):
        verify("t9.9")
    with pytest.raises(config.CapExceededError):
        verify("t1.1", 40)


def test_env_cap_override(monkeypatch):
    monkeypatch.setenv(config.ENV_CAP, "3")
    config.set_active(None)
    with pytest.raises(config.CapExceededError):
        verify("t1.1", 4)
    assert verify("t1.1", 3).passed


def test_report_is_deterministic():
    a = verify("t6.1", 4).to_json()
    b = verify("t6.1", 4).to_json()
    a.pop("wall_time"), b.pop("wall_time")
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)
    assert set(a) >= {"theorem", "n_range", "status", "cells"}


def test_tables_golden():
    assert table("barc", 5) == ["1,1", "2,2", "3,4,1", "4,8,5,1", "5,16,17,7,2"]
    assert table("tildec", 5) == ["1,1", "2,1,1", "3,1,3,1", "4,1,6,5,2", "5,1,10,15,12,3,1"]
    assert table("barC", 1) == ["1,1"]
    rows = table("bexpansion", 2)
    assert rows == ["1,(1+t)", "2,(1+t)^2 + (p + q)*t"]


# -- config ---------------------------------------------------------------

def test_config_file(tmp_path, monkeypatch):
    path = tmp_path / "cf.ini"
    path.write_text("[caps]\nbruteforce = 9\npathsum = 8\n\n[nmax]\nt1.1 = 3\n\n"
                    "[specialize]\nu = 1\nw = 1\n")
    cfg = config.Config.load(path)
    assert (cfg.bruteforce_cap, cfg.pathsum_cap) == (9, 8)
    assert cfg.nmax == {"t1.1": 3} and cfg.specialize == {"u": 1, "w": 1}
    config.set_active(cfg)
    assert verify("t1.1").nmax == 3
    with pytest.raises(FileNotFoundError):
        config.Config.load(tmp_path / "missing.ini")


# -- commands -------------------------------------------------------------

def test_expand(capsys):
    code, out = run(capsys, "expand", "--cf", "typeA", "--order", "5",
                    *[f"--set={x}=1" for x in "pqtuw"])
    assert code == 0
    assert [line.split(": ")[1] for line in out.splitlines()] == ["1", "1", "2", "5", "14", "42"]
    code, out = run(capsys, "expand", "--cf", "typeB", "--order", "1", "--csv")
    assert out.splitlines() == ["n,coeff,p,q,t,u,v,w", "0,1,0,0,0,0,0,0",
                                "1,1,0,0,0,1,0,0", "1,1,0,0,1,0,1,0"]
    code, out = run(capsys, "expand", "--cf", "typeC", "--order", "2", "--json")
    data = json.loads(out)
    assert data["coefficients"][1] == [{"c": "1", "e": [0, 0, 0, 1, 0, 0]},
                                       {"c": "1", "e": [0, 0, 1, 0, 1, 0]}]


def test_expand_uses_config_specialization(capsys, tmp_path):
    path = tmp_path / "cf.ini"
    path.write_text("[specialize]\np = 1\nq = 1\nt = 1\nu = 1\nv = 1\nw = 1\n")
    code, out = run(capsys, "--config", str(path), "expand", "--cf", "typeB", "--order", "3")
    assert [line.split(": ")[1] for line in out.splitlines()] == ["1", "2", "6", "20"]


def test_stats(capsys):
    code, out = run(capsys, "stats", "--perm", "472589316", "--boundary", "zero", "--json")
    data = json.loads(out)
    assert data["des"] == 3 and data["pk"] == 3 and data["vincular3"] == 9
    code, out = run(capsys, "stats", "--perm", "12", "--boundary", "inf", "--json")
    assert json.loads(out)["da"] == 2


def test_enumerate(capsys):
    code, out = run(capsys, "enumerate", "--class", "a321", "--n", "5", "--json")
    assert json.loads(out)["count"] == 42
    code, out = run(capsys, "enumerate", "--class", "b4", "--n", "2", "--poly")
    assert out.strip() == "t^2*v^2 + p*t*w + q*t*w + 2*t*u*v + u^2"
    code, out = run(capsys, "enumerate", "--class", "a312", "--n", "1", "--csv")
    assert out.splitlines() == ["perm,word", "12,\"l1,f1\"", "21,\"r1,f1\""]


def test_encode_decode(capsys):
    assert run(capsys, "encode", "--perm", "423615")[1].strip() == "m1,m1,l2,f1,f2,f1"
    assert run(capsys, "decode", "--word", "m1,m1,l2,f1,f2,f1")[1].strip() == "423615"
    code, _ = run(capsys, "decode", "--word", "m1,f1")
    assert code == 2


def test_biject(capsys):
    code, out = run(capsys, "biject", "--map", "phi2", "--perm", "213", "--json")
    assert json.loads(out) == {"map": "phi2", "path": "U D", "perm": "213",
                               "weight": "p*t*w", "xi": [0, 1]}
    code, out = run(capsys, "biject", "--map", "psi", "--perm", "312", "--json")
    assert json.loads(out)["p"] == [0, 0]
    code, _ = run(capsys, "biject", "--map", "phi1", "--perm", "321")
    assert code == 2


def test_pathsum_gamma_orbit(capsys):
    assert run(capsys, "pathsum", "--type", "c", "--n", "1")[1].strip() == "t*v + u"
    code, out = run(capsys, "gamma", "--n", "4", "--json")
    data = json.loads(out)
    assert code == 0 and data["agree"]
    assert data["perms"][2] == "p^4 + p^3*q + p^2 + 2*p*q + q^2"
    code, out = run(capsys, "orbit", "--perm", "472589316", "--json")
    data = json.loads(out)
    assert len(data["members"]) == 16 and "472589316" in data["members"]


def test_verify_command(capsys, tmp_path):
    report = tmp_path / "r.json"
    code, out = run(capsys, "verify", "--theorem", "t1.1", "--nmax", "5", "--json", str(report))
    assert code == 0 and "PASS" in out
    data = json.loads(report.read_text())
    assert data["status"] == "pass" and data["reports"][0]["theorem"] == "t1.1"
    code, _ = run(capsys, "verify", "--theorem", "t1.1", "--nmax", "99")
    assert code == 2


def test_verify_all_parallel_keeps_order(capsys, tmp_path, monkeypatch):
    cfg = tmp_path / "small.ini"
    cfg.write_text("[nmax]\n" + "".join(f"{th} = {4 if th != 'l1.1' else 8}\n" for th in THEOREMS))
    report = tmp_path / "all.json"
    code, out = run(capsys, "--config", str(cfg), "verify", "--all", "--jobs", "3",
                    "--json", str(report))
    assert code == 0
    names = [r["theorem"] for r in json.loads(report.read_text())["reports"]]
    assert names == list(THEOREMS)


def test_table_command(capsys):
    code, out = run(capsys, "table", "--which", "barc", "--nmax", "5", "--csv")
    assert out.splitlines()[3] == "4,8,5,1"
    code, out = run(capsys, "table", "--which", "tildec", "--nmax", "5", "--json")
    assert json.loads(out)["rows"][4] == {"n": 5, "value": "1,10,15,12,3,1"}


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "catalan_cf", "encode", "--perm", "1"],
                         capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "f1"
