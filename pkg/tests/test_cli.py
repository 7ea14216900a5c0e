import json
import subprocess
import sys

import pytest

from goldilocks.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_table_csv(capsys):
    code, out, _ = run(capsys, "table", "--max-n", "5", "--genus", "positive", "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["n,count,count/S_n", "1,1,1", "2,2,2", "3,9,5", "4,96,17", "5,2690,92"]


def test_table_both_markdown(capsys):
    code, out, _ = run(capsys, "table", "--max-n", "4")
    assert code == 0
    assert "| 0 | 4 | 27 | 5 |" in out and "| positive | 3 | 9 | 5 |" in out


def test_table_json(capsys):
    code, out, _ = run(capsys, "table", "--max-n", "4", "--genus", "0", "--format", "json")
    assert json.loads(out) == [{"n": 3, "genus": "0", "count": 1, "orbit_count": 1},
                               {"n": 4, "genus": "0", "count": 27, "orbit_count": 5}]


def test_count(capsys):
    assert run(capsys, "count", "--n", "4", "--genus", "0", "--engine", "both") == (0, "27\n", "")
    assert run(capsys, "count", "--n", "3", "--genus", "positive", "--orbits")[1] == "9 5\n"
    code, out, _ = run(capsys, "count", "--n", "2", "--genus", "positive", "--format", "json")
    assert json.loads(out)["count"] == 2


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", "--truth-table", "00010111")
    body = json.loads(out)
    assert code == 0 and body["goldilocks"] is True and body["chow"] == "4;6,6,6"
    code, out, _ = run(capsys, "classify", "--truth-table", "0001", "--target", "semi_goldilocks")
    assert json.loads(out)["certificate"] is None


def test_realize(capsys):
    code, out, _ = run(capsys, "realize", "--truth-table", "0110")
    body = json.loads(out)
    assert body["feasible"] is False and body["witness"]["c"]
    code, out, _ = run(capsys, "realize", "--truth-table", "0001", "--constraints", "positive,small")
    assert json.loads(out)["feasible"] is True


def test_chamber(capsys):
    code, out, _ = run(capsys, "chamber", "--weights", "3/4,3/4,3/4", "--genus", "0")
    body = json.loads(out)
    assert body["truth_table"] == "00010111" and body["goldilocks"] and not body["on_wall"]


def test_identity_and_asymptotics(capsys):
    code, out, _ = run(capsys, "identity-check", "--n", "3")
    assert code == 0 and json.loads(out)["rhs"] == 104
    code, out, _ = run(capsys, "asymptotics", "--n", "4")
    assert code == 0 and json.loads(out)["gold_zero"] == 27


@pytest.mark.parametrize("argv,code", [
    (["count", "--n", "x", "--genus", "0"], 1),
    (["count", "--n", "3", "--genus", "7"], 1),
    (["classify", "--truth-table", "012"], 1),
    (["realize", "--truth-table", "0001", "--constraints", "huge"], 1),
    (["chamber", "--weights", "2,1", "--genus", "positive"], 1),
    (["count", "--n", "9", "--genus", "positive"], 3),
    (["count", "--n", "7", "--genus", "positive", "--engine", "direct"], 3),
    ([], 1),
])
def test_exit_codes(capsys, argv, code):
    assert run(capsys, *argv)[0] == code


def test_json_errors_on_stderr(capsys):
    code, out, err = run(capsys, "count", "--n", "9", "--genus", "0", "--format", "json")
    assert code == 3 and out == ""
    assert json.loads(err)["error"] == "BudgetError"


def test_internal_mismatch_exit_code(capsys, monkeypatch):
    from goldilocks import chambers

    monkeypatch.setattr(chambers, "count_sd", lambda *a, **k: (1, 1))
    assert run(capsys, "count", "--n", "3", "--genus", "positive")[0] == 2


def test_config_file(tmp_path, capsys):
    cfg = tmp_path / "g.conf"
    cfg.write_text("sd_cap = 3\n")
    assert run(capsys, "--config", str(cfg), "count", "--n", "4", "--genus", "0", "--engine", "sd")[0] == 3
    bad = tmp_path / "bad.conf"
    bad.write_text("colour = red\n")
    assert run(capsys, "--config", str(bad), "count", "--n", "2", "--genus", "0")[0] == 1


def test_console_script_module():
    out = subprocess.run([sys.executable, "-m", "goldilocks.cli", "count", "--n", "3", "--genus", "0"],
                         capture_output=True, text=True)
    assert out.returncode == 0 and out.stdout == "1\n"


@pytest.mark.parametrize("workers", ["1", "4", "8"])
def test_workers_do_not_change_counts(capsys, workers):
    code, out, _ = run(capsys, "count", "--n", "5", "--genus", "positive", "--workers", workers)
    assert (code, out) == (0, "2690\n")


def test_selftest(capsys):
    code, out, _ = run(capsys, "selftest")
    assert code == 0
    assert out.count("PASS") == len(out.splitlines()) > 5
