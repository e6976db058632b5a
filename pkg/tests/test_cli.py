import csv
import io
import json
import subprocess
import sys

import pytest

from hookspecht import cli
from hookspecht.module import DEFAULT_SIGNS


def run_json(argv, capsys):
    code = cli.run(argv)
    out = capsys.readouterr()
    return code, (json.loads(out.out) if out.out.strip().startswith("{") else None), out.err


def strip_volatile(doc):
    recs = []
    for r in doc["records"]:
        r = {k: v for k, v in r.items() if k not in ("timing_ms", "cache")}
        recs.append(r)
    return dict(doc, records=recs)


def test_basis_m_zero(capsys):
    code, doc, _ = run_json(["basis", "--e", "3", "--kappa", "0,1", "--n", "5", "--m", "0"], capsys)
    assert code == 0 and doc["schema"] == 1 and doc["passed"]
    rec, = doc["records"]
    assert rec["details"]["leg"] == [] and rec["details"]["residues"] == [0, 1, 2, 0, 1]


def test_negative_kappa_is_reduced(capsys):
    code, doc, _ = run_json(["basis", "--e", "3", "--kappa=-3,4", "--n", "2", "--m", "1"], capsys)
    assert code == 0
    assert doc["records"][0]["params"]["kappa"] == [0, 1]


def test_matrix(capsys):
    code, doc, _ = run_json(["matrix", "--e", "3", "--kappa", "0,0", "--n", "6", "--m", "1",
                             "--gen", "psi:3"], capsys)
    assert code == 0
    d = doc["records"][0]["details"]
    # psi_3 v(5) = -v(3)
    assert [d["basis"].index([3]), d["basis"].index([5]), "-1"] in d["entries"]


@pytest.mark.parametrize("gen", ["psi:0", "y:9", "e:1,2", "q:1"])
def test_bad_generator_is_usage_error(gen, capsys):
    code = cli.run(["matrix", "--e", "3", "--kappa", "0,0", "--n", "4", "--m", "1", "--gen", gen])
    assert code == 2


def test_verify_klr(capsys):
    code, doc, _ = run_json(["verify-klr", "--e", "4", "--kappa", "1,3", "--n", "6", "--m", "2"], capsys)
    assert code == 0 and doc["passed"]
    assert doc["records"][0]["status"] == "pass"


def test_comp_series_case_four(capsys):
    code, doc, _ = run_json(["comp-series", "--e", "3", "--kappa", "0,2", "--n", "6", "--m", "3"], capsys)
    assert code == 0
    rec, = [r for r in doc["records"] if r["check"] == "series"]
    assert rec["details"]["factor_dims"] == [6, 4, 4, 6]


def test_verify_homs_skips_when_nothing_applies(capsys):
    code, doc, _ = run_json(["verify-homs", "--e", "3", "--kappa", "0,0", "--n", "5"], capsys)
    assert code == 0 and doc["records"][0]["status"] == "skipped"
    code, doc, _ = run_json(["verify-homs", "--e", "3", "--kappa", "0,2", "--n", "6"], capsys)
    assert code == 0 and doc["records"][0]["status"] == "pass"


@pytest.mark.parametrize("argv", [
    ["basis", "--e", "2", "--kappa", "0,0", "--n", "3", "--m", "1"],
    ["basis", "--e", "3", "--kappa", "0", "--n", "3", "--m", "1"],
    ["basis", "--e", "3", "--kappa", "0,0", "--n", "3", "--m", "5"],
    ["basis", "--e", "3", "--kappa", "0,0", "--n", "3", "--m", "1", "--field", "fp:4"],
    ["sweep", "--e", "3", "--n", "2-20"],
    ["sweep", "--e", "3", "--n", "2-3", "--checks", "klr,bogus"],
    ["frobnicate"],
    [],
])
def test_usage_errors(argv, capsys):
    assert cli.run(argv) == 2


def test_examples(capsys):
    code, doc, _ = run_json(["example", "residues-5-3"], capsys)
    assert code == 0 and all(r["status"] == "pass" for r in doc["records"])
    for name, dims in [("case2-n5", [6, 4]), ("case3-n5", [6, 4]), ("case4-n6", [6, 4, 4, 6])]:
        code, doc, _ = run_json(["example", name], capsys)
        assert code == 0
        assert doc["records"][0]["details"]["factor_dims"] == dims


def test_csv_output(capsys):
    assert cli.run(["sweep", "--e", "3", "--kappa", "0,1", "--n", "2-3", "--format", "csv"]) == 0
    rows = list(csv.DictReader(io.StringIO(capsys.readouterr().out)))
    assert rows and {r["status"] for r in rows} <= {"pass", "skipped"}
    assert {"klr", "sparsity", "series", "homs"} <= {r["check"] for r in rows}


def test_sweep_output_file(tmp_path, capsys):
    out = tmp_path / "r.json"
    assert cli.run(["sweep", "--e", "3,4", "--n", "2-3", "--checks", "klr", "-o", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert doc["config"]["e_list"] == [3, 4]
    assert len(doc["records"]) == sum(e * e * (n + 1) for e in (3, 4) for n in (2, 3))


def test_cache_rerun_is_identical(tmp_path, capsys):
    argv = ["sweep", "--e", "3", "--n", "2-4", "--cache-dir", str(tmp_path / "c")]
    _, first, _ = run_json(argv, capsys)
    _, second, _ = run_json(argv, capsys)
    assert {r.get("cache") for r in first["records"] if r["check"] != "homs"} == {"miss"}
    assert {r.get("cache") for r in second["records"] if r["check"] != "homs"} == {"hit"}
    assert json.dumps(strip_volatile(first), sort_keys=True) == json.dumps(strip_volatile(second), sort_keys=True)


def test_cache_dir_from_environment(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("SPECHT_CACHE_DIR", str(tmp_path / "env"))
    assert cli.run(["verify-klr", "--e", "3", "--kappa", "0,1", "--n", "4", "--m", "2"]) == 0
    assert any((tmp_path / "env").iterdir())
    flag = tmp_path / "flag"
    assert cli.run(["verify-klr", "--e", "3", "--kappa", "0,1", "--n", "4", "--m", "2",
                    "--cache-dir", str(flag)]) == 0
    assert any(flag.iterdir())


def test_failing_sweep_names_first_failure(monkeypatch, capsys):
    monkeypatch.setitem(DEFAULT_SIGNS, "rel1", -1)
    code, doc, err = run_json(["sweep", "--e", "3", "--kappa", "0,0", "--n", "2-3", "--checks", "klr"],
                              capsys)
    assert code == 1 and not doc["passed"]
    first = doc["first_failure"]
    ce = first["details"]["counterexample"]
    assert first["check"] == "klr" and ce["relation"] and "basis_vector" in ce
    assert "first failure" in err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "hookspecht", "basis", "--e", "3", "--kappa", "0,0",
                           "--n", "3", "--m", "1", "--format", "csv"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[0].startswith("e,kappa,n,m")
