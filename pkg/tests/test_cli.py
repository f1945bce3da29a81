import json
import os

import pytest

from sodlab.cli import jsonable, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_straighten_output(capsys):
    code, out = run(capsys, "bwb", "straighten", "--weight", "0,2")
    assert code == 0
    assert out.splitlines()[0] == "NonVanishing dominant=(1,1) shift=1"
    code, out = run(capsys, "bwb", "straighten", "--weight", "0,1")
    assert out.splitlines()[0] == "Vanishing"
    code, out = run(capsys, "bwb", "straighten", "--weight", "2,1,0")
    assert out.splitlines()[0] == "NonVanishing dominant=(2,1,0) shift=0"


def test_straighten_oracle_flag(capsys):
    code, out = run(capsys, "bwb", "straighten", "--weight", "0,2", "--oracle")
    assert code == 0
    assert "oracle: agree" in out


def test_usage_errors_exit_2():
    with pytest.raises(SystemExit) as err:
        main(["verify", "not-a-suite"])
    assert err.value.code == 2
    with pytest.raises(SystemExit) as err:
        main(["bwb", "straighten", "--weight", "a,b"])
    assert err.value.code == 2


def test_sod_list_counts(capsys):
    code, out = run(capsys, "sod", "list", "--r", "0", "--d", "3")
    assert code == 0
    assert len(out.strip().splitlines()) == 1
    code, out = run(capsys, "sod", "list", "--r", "2", "--d", "1")
    assert len(out.strip().splitlines()) == 3


def test_sod_list_json_roundtrip(capsys):
    code, out = run(capsys, "sod", "list", "--r", "4", "--d", "4", "--json")
    assert code == 0
    report = json.loads(out)
    assert json.loads(json.dumps(report)) == report
    comps = report["results"]["components"]
    assert len(comps) == 16
    assert comps[0] == {
        "i": 0, "lambda": [0], "aSequence": [0, 0, 0, 0],
        "target": "Grass(E^∨[1]; 4)",
        "kernel": "S^(0)(E^univ_(4,4)) ⊗ det(Q)^0",
    }
    assert comps[-1]["i"] == 4
    assert report["elapsedMillis"] >= 0


def test_verify_report_out_file(tmp_path, capsys):
    out_path = tmp_path / "report.json"
    code, _ = run(capsys, "verify", "serre", "--out", str(out_path))
    assert code == 0
    report = json.loads(out_path.read_text())
    assert report["command"] == "verify serre"
    assert all(c["status"] == "pass" for c in report["checks"])


def test_verify_exit_code_and_statuses(capsys):
    code, out = run(capsys, "verify", "kapranov", "--n", "3", "--d", "1")
    assert code == 0
    assert "pass" in out


def test_verify_semiorth(capsys):
    code, out = run(capsys, "verify", "semiorth",
                    "--n", "2", "--m", "1", "--d", "1", "--cutoff", "6")
    assert code == 0
    assert "concentrated" in out


def test_verify_jobs_env(capsys, monkeypatch):
    monkeypatch.setenv("SODLAB_JOBS", "1")
    code, _ = run(capsys, "verify", "serre")
    assert code == 0


def test_failing_check_exits_1(capsys, monkeypatch):
    import sodlab.cli as cli_mod

    def broken(params):
        return [{"name": "forced", "status": "fail", "detail": "injected"}]

    monkeypatch.setitem(cli_mod.SUITE_RUNNERS, "serre", broken)
    code, out = run(capsys, "verify", "serre")
    assert code == 1
    assert "fail" in out


def test_inconclusive_does_not_fail():
    from sodlab.cli import exit_code
    checks = [{"name": "x", "status": "inconclusive", "detail": ""},
              {"name": "y", "status": "pass", "detail": ""}]
    assert exit_code(checks) == 0
    checks.append({"name": "z", "status": "fail", "detail": ""})
    assert exit_code(checks) == 1


def test_apps_curves_cli(capsys):
    code, out = run(capsys, "apps", "curves", "--g", "5", "--d", "5", "--r", "1")
    assert code == 0
    assert "1 x G^1_3  (index 0)  vdim=-1" in out
    assert "1 x G^0_3  (index 1)  vdim=3" in out


def test_apps_vdim_cli(capsys):
    code, out = run(capsys, "apps", "vdim", "--dimx", "10", "--r", "1",
                    "--dplus", "2", "--dminus", "1")
    assert code == 0
    assert "Grass(E;2): 8" in out
    assert "Incidence: 8" in out


def test_apps_blowup_json(capsys):
    code, out = run(capsys, "apps", "blowup", "--r", "2", "--json")
    report = json.loads(out)
    assert report["results"]["totalComponents"] == 4


def test_figures_and_csv(tmp_path, capsys):
    figdir = tmp_path / "figs"
    code, _ = run(capsys, "sod", "list", "--r", "2", "--d", "2",
                  "--figures", str(figdir))
    assert code == 0
    assert (figdir / "components.csv").exists()
    assert (figdir / "components.png").exists()
    code, _ = run(capsys, "verify", "serre", "--figures", str(figdir))
    assert code == 0
    assert (figdir / "verify-serre.csv").exists()
    assert (figdir / "verify-serre.png").exists()
    code, _ = run(capsys, "apps", "curves", "--g", "5", "--d", "5", "--r", "1",
                  "--figures", str(figdir))
    assert code == 0
    assert (figdir / "apps-curves.csv").exists()
    assert (figdir / "apps-curves.png").exists()


def test_jsonable_big_integers():
    small = 2 ** 53 - 1
    big = 2 ** 53
    payload = jsonable({"a": small, "b": big, "c": [-big, {"d": 7}]})
    assert payload["a"] == small
    assert payload["b"] == str(big)
    assert payload["c"][0] == str(-big)
    assert payload["c"][1]["d"] == 7
