import json
import subprocess
import sys

import pytest

from fqdioph.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_construct(capsys):
    code, out, _ = run(capsys, "construct", "--field", "3^10", "--json")
    rep = json.loads(out)
    assert code == 0 and len(rep["elements"]) >= 3 and rep["bound_satisfied"]
    assert rep["field"] == "3^10/19"


def test_construct_small_q_is_usage_error(capsys):
    assert run(capsys, "construct", "--field", "5^1")[0] == 2


def test_construct_case2(capsys):
    code, out, _ = run(capsys, "construct", "--field", "23^1", "--method", "case2", "--json")
    assert code == 0 and json.loads(out)["elements"] == [1, 2, 12]


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--field", "1009", "--elements", "1,3,8,120", "--json")
    assert code == 0 and len(json.loads(out)["certificate"]) == 6
    code, out, _ = run(capsys, "verify", "--field", "7", "--elements", "1,2", "--json")
    assert code == 1 and json.loads(out)["violating_elements"] == [1, 2]
    assert run(capsys, "verify", "--field", "7", "--elements", "1,1")[0] == 2


def test_report_reverifies(capsys):
    _, out, _ = run(capsys, "construct", "--field", "5^4", "--json")
    rep = json.loads(out)
    elems = ",".join(map(str, rep["elements"]))
    assert run(capsys, "verify", "--field", rep["field"], "--elements", elems)[0] == 0


def test_exact_m(capsys, tmp_path):
    code, out, _ = run(capsys, "exact-m", "--field", "7", "--json",
                       "--cache", str(tmp_path / "c.jsonl"))
    rec = json.loads(out)
    assert code == 0 and rec["M"] == 3 and rec["q"] == 7
    assert run(capsys, "exact-m", "--field", "5003")[0] == 2


def test_cyclo(capsys):
    assert run(capsys, "cyclo", "--n", "12")[1].strip() == "1 0 -1 0 1"
    assert run(capsys, "cyclo", "--n", "10", "--mod", "5")[1].strip() == "1 4 1 4 1"
    assert run(capsys, "cyclo", "--n", "3", "--mod", "4")[0] == 2


def test_check(capsys):
    code, out, _ = run(capsys, "check", "bounds")
    assert code == 0 and out.startswith("PASS")
    assert run(capsys, "check", "bogus")[0] == 2


def test_charsum(capsys):
    code, out, _ = run(capsys, "charsum", "weil", "--field", "5", "--poly", "0,1,1", "--json")
    assert code == 0 and json.loads(out)["results"][0]["sum"] == -1
    assert run(capsys, "charsum", "weil", "--field", "5", "--poly", "0,0,1")[0] == 2
    code, out, _ = run(capsys, "charsum", "pattern", "--field", "3^2", "--shifts", "0",
                       "--signs", "+", "--json")
    assert code == 0 and json.loads(out)["N"] == 4


def test_field_info(capsys):
    code, out, _ = run(capsys, "field-info", "--field", "3^2", "--json")
    info = json.loads(out)
    assert code == 0 and info["modulus_str"] == "t^2 + 1"


def test_bad_arguments(capsys):
    assert run(capsys, "construct")[0] == 2
    assert run(capsys, "nonsense")[0] == 2
    assert run(capsys, "construct", "--field", "12")[0] == 2


def _scan(tmp_path, capsys, name, *extra):
    out = tmp_path / name
    code = main(["scan", "--out", str(out), *extra])
    capsys.readouterr()
    return code, out.read_text()


def test_scan_deterministic(tmp_path, capsys):
    args = ("--p", "3,5", "--q-max", "5000")
    c1, a = _scan(tmp_path, capsys, "a.jsonl", *args)
    c2, b = _scan(tmp_path, capsys, "b.jsonl", *args, "--workers", "2")
    assert c1 == c2 == 0 and a == b
    lines = [json.loads(x) for x in a.splitlines()]
    assert lines[-1]["summary"]["failures"] == 0
    assert [r["q"] for r in lines[:-1]] == sorted(r["q"] for r in lines[:-1])


def test_scan_resume(tmp_path, capsys):
    args = ("--p", "3,7", "--q-max", "3000")
    _, full = _scan(tmp_path, capsys, "full.jsonl", *args)
    partial = tmp_path / "part.jsonl"
    head = full.splitlines()[:2]
    partial.write_text("\n".join(head + ['{"resume": {"completed": 2, "total": 4}}']) + "\n")
    main(["scan", "--out", str(partial), "--resume", *args])
    capsys.readouterr()
    assert partial.read_text() == full


def test_scan_residue_3(tmp_path, capsys):
    code, text = _scan(tmp_path, capsys, "r3.jsonl", "--p", "3,11", "--residues", "3",
                       "--q-max", "20000")
    recs = [json.loads(x) for x in text.splitlines()[:-1]]
    assert code == 0 and recs
    assert all(r["method"] == "mod8_3" and r["bound_claim"] == "remark-3.6" for r in recs)


def test_scan_empty_p(capsys):
    assert run(capsys, "scan", "--p", "")[0] == 2
    assert run(capsys, "scan", "--p", "3", "--residues", "")[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "fqdioph", "cyclo", "--n", "6"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "1 -1 1"
