import json

import pytest

from mldlab.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out


def payload_of(out):
    return json.dumps(json.loads(out)["payload"], sort_keys=True)


def test_mld_command(capsys):
    code, out = run_cli(capsys, "mld", "--r", "13", "--w", "3,4,5")
    assert code == 0 and out.strip() == "12/13 (k=1)"
    code, out = run_cli(capsys, "mld", "--r", "7", "--w", "2,3,1")
    assert code == 0 and out.strip() == "6/7 (k=1)"
    code, out = run_cli(capsys, "mld", "--r", "1", "--w", "", "--dim", "3")
    assert code == 0 and out.strip() == "3"


def test_mld_usage_error(capsys):
    with pytest.raises(SystemExit) as err:
        main(["mld", "--r", "13", "--w", "3,x,5"])
    assert err.value.code == 2


def test_scan_csv_header(capsys):
    code, out = run_cli(capsys, "scan", "--rmax", "13", "--interval", "12/13,1",
                        "--isolated", "--format", "csv", "--jobs", "1")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "r,weights,mld_num,mld_den,k"
    assert lines[1] == "13,1 4 11,12,13,4"  # the canonical class attains 12/13 at k=4


def test_scan_empty_summary(capsys):
    code, out = run_cli(capsys, "scan", "--rmax", "20", "--interval", "12/13,1",
                        "--open-left", "--isolated", "--jobs", "1")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines == ["# records=0 rmax=20 dim=3"]


def test_scan_values_mode(capsys):
    code, out = run_cli(capsys, "scan", "--rmax", "13", "--interval", "12/13,1",
                        "--isolated", "--mode", "values", "--jobs", "1")
    assert code == 0
    assert out.strip().splitlines()[0] == "12/13"


def test_scan_accum_mode(capsys):
    code, out = run_cli(capsys, "scan", "--rmax", "20", "--mode", "accum",
                        "--target", "5/6", "--windows", "1/42,1/12", "--jobs", "1")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("1/42,") and lines[1].startswith("1/12,")


def test_regions_system_witness_exit(capsys):
    code, out = run_cli(capsys, "regions", "system", "--gamma", "[[2,1]]",
                        "--expect-empty")
    assert code == 1
    doc = json.loads(out)
    assert doc["payload"]["verdict"] == "witness"
    assert doc["payload"]["witness"] == ["0", "0", "0"]


def test_regions_system_empty_exit(capsys):
    gamma = json.dumps([[n, 1] for n in range(2, 13)])
    code, out = run_cli(capsys, "regions", "system", "--gamma", gamma,
                        "--expect-empty")
    assert code == 0
    assert json.loads(out)["payload"]["verdict"] == "empty"


def test_regions_vl_steps(capsys):
    code, out = run_cli(capsys, "regions", "vl-steps", "--from", "4", "--to", "5")
    assert code == 0
    doc = json.loads(out)
    assert doc["payload"]["all_equal"] is True


def test_regions_cases_subrange(capsys):
    code, out = run_cli(capsys, "regions", "cases", "--k", "4", "--case", "1..2")
    assert code == 0
    doc = json.loads(out)
    assert doc["payload"]["witnesses"] == 0
    assert len(doc["payload"]["verdicts"]) == 2


def test_verify_terminal_cli(capsys):
    code, out = run_cli(capsys, "verify", "terminal", "--rmax", "12", "--jobs", "1")
    assert code == 0
    assert json.loads(out)["payload"]["count"] == 0


def test_verify_fourfold_cli(capsys):
    code, out = run_cli(capsys, "verify", "fourfold", "--rmax", "15", "--jobs", "1")
    assert code == 0
    assert json.loads(out)["payload"]["count"] == 0


def test_verify_transfer_cli(capsys):
    code, out = run_cli(capsys, "verify", "transfer", "--tuple", "7:5,4,6,2:2",
                        "--eps", "1/100")
    assert code == 0
    payload = json.loads(out)["payload"]
    assert payload["case"] == "case2"
    assert payload["gamma"] == [6]


def test_verify_fivefold_cli(capsys):
    code, out = run_cli(capsys, "verify", "fivefold", "--rmax", "8",
                        "--eps", "1/100", "--cond", "4a", "--jobs", "1")
    assert code == 0
    payload = json.loads(out)["payload"]
    assert payload["count"] == len(payload["candidates"])
    assert all(c["mld"] == "13/7" for c in payload["candidates"] if c["r"] == 7)


def test_hyperquot_type_cli(capsys):
    code, out = run_cli(capsys, "hyperquot", "type", "--r", "11",
                        "--a", "3,8,1,0", "--e", "0")
    assert code == 0 and out.strip() == "1a a=3"
    code, out = run_cli(capsys, "hyperquot", "type", "--r", "7",
                        "--a", "1,2,3,4", "--e", "5")
    assert code == 0 and out.strip() == "none"


def test_hyperquot_identity5_cli(capsys):
    code, out = run_cli(capsys, "hyperquot", "identity5", "--r", "5",
                        "--a", "2,3,1,0", "--e", "0")
    assert code == 0 and out.strip() == "ok"
    code, out = run_cli(capsys, "hyperquot", "identity5", "--r", "5",
                        "--a", "1,1,1,1", "--e", "0")
    assert code == 0 and out.strip().startswith("failures at j = 1")


def test_hyperquot_psi_cli(tmp_path, capsys):
    datum = {"r": 5, "a": [2, 3, 1, 0], "e": 0, "support": [[1, 1, 0, 0]]}
    path = tmp_path / "datum.json"
    path.write_text(json.dumps(datum))
    code, out = run_cli(capsys, "hyperquot", "psi", "--datum", str(path),
                        "--eps", "1/100")
    assert code == 0
    payload = json.loads(out)["payload"]
    assert payload["psi1"] == [] and payload["psi2"] == []
    assert payload["rest_count"] == 8


def test_jobs_determinism_small(capsys):
    args = ["scan", "--rmax", "40", "--interval", "5/6,1", "--open-left"]
    _, out1 = run_cli(capsys, *args, "--jobs", "1")
    _, out2 = run_cli(capsys, *args, "--jobs", "2")
    assert out1 == out2

    _, out1 = run_cli(capsys, "verify", "terminal", "--rmax", "10", "--jobs", "1")
    _, out2 = run_cli(capsys, "verify", "terminal", "--rmax", "10", "--jobs", "2")
    assert payload_of(out1) == payload_of(out2)


def test_box_limit_exit_code(capsys, monkeypatch):
    monkeypatch.setenv("MLDLAB_BOX_LIMIT", "2")
    code, out = run_cli(capsys, "regions", "s-grid", "--nmax", "20", "--jobs", "1")
    assert code == 3
