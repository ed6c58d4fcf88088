import csv
import io
import json

import pytest

from wilkercert import cli
from wilkercert.certifier import get_case
from wilkercert.cli import EXIT_FAIL, EXIT_INCONCLUSIVE, EXIT_OK, EXIT_USAGE, RunConfig, UsageError, run


def _run(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_series_prints_exact_fractions(capsys):
    code, out, _ = _run(capsys, "series", "--expr", "wilker-ratio", "--order", "14")
    assert code == EXIT_OK
    assert out.split() == ["8/45", "-8/945", "16/14175", "8/467775", "3184/638512875", "272/638512875",
                           "7264/162820783125"]


def test_series_tan_and_json(capsys):
    code, out, _ = _run(capsys, "series", "--expr", "tan", "--order", "8", "--format", "json")
    assert code == EXIT_OK
    assert json.loads(out)["coefficients"] == ["1", "1/3", "2/15", "17/315"]


def test_unknown_subcommand_is_usage_error(capsys):
    code, _, err = _run(capsys, "bogus")
    assert code == EXIT_USAGE and "invalid choice" in err


@pytest.mark.parametrize("argv", [
    ["series", "--expr", "nope", "--order", "6"],
    ["series", "--expr", "tan", "--order", "1"],
    ["certify"],
    ["certify", "--case", "nope"],
    ["certify", "--case", "tan-tail-lower", "--n", "99"],
    ["certify", "--case", "wilker", "--precision", "8"],
    ["certify", "--case", "wilker", "--delta0", "2"],
    ["certify", "--case", "wilker", "--delta0", "x"],
    ["sweep", "--case", "wilker", "--grid", "1"],
    ["appendix", "--check", "B", "--n-max", "3"],
    ["report", "--format", "json"],
    [],
])
def test_usage_errors(capsys, argv):
    code, _, err = _run(capsys, *argv)
    assert code == EXIT_USAGE
    assert err.startswith("wilkercert: error:") or "usage" in err or err


def test_certify_proved_json(capsys):
    code, out, _ = _run(capsys, "certify", "--case", "wilker-sharp-lower", "--format", "json")
    assert code == EXIT_OK
    d = json.loads(out)
    assert d["status"] == "PROVED" and d["case"] == "wilker-sharp-lower"


def test_certify_refuted_exit_code(capsys):
    code, out, _ = _run(capsys, "certify", "--case", "wilker-quartic-upper")
    assert code == EXIT_FAIL
    assert "REFUTED" in out and "1/8" in out


def test_certify_inconclusive_exit_code(capsys):
    code, out, _ = _run(capsys, "certify", "--case", "kernel-g", "--max-depth", "1", "--precision", "32")
    assert code == EXIT_INCONCLUSIVE


def test_certify_family_without_n_runs_default_range(capsys):
    code, out, _ = _run(capsys, "certify", "--case", "tan-tail-upper", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == EXIT_OK
    assert [r["n"] for r in rows] == ["1", "2", "3", "4", "5"]


def test_constants_output(capsys, tmp_path):
    target = tmp_path / "c.md"
    code, out, _ = _run(capsys, "constants", "--out", str(target))
    text = target.read_text()
    assert code == EXIT_OK and out == ""
    row = next(line for line in text.splitlines() if line.startswith("| wilker-sharp "))
    assert "16/14175" in row and "0.001128" in row and "0.001209" in row
    assert "0.0012901" in text and "0.0008234" in text


def test_bernoulli_listing(capsys):
    code, out, _ = _run(capsys, "bernoulli", "--upto", "25", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert code == EXIT_OK
    assert rows[1][:2] == ["1", "1/6"] and rows[6][:2] == ["6", "691/2730"]
    assert all(r[2].startswith("holds") for r in rows[1:])


@pytest.mark.parametrize("which", ["A", "B", "C"])
def test_appendix_checks(capsys, which):
    code, out, _ = _run(capsys, "appendix", "--check", which)
    assert code == EXIT_OK
    assert "MISMATCH" not in out


def test_sweep_csv(capsys):
    code, out, _ = _run(capsys, "sweep", "--case", "huygens-sharp", "--grid", "5")
    rows = list(csv.reader(io.StringIO(out)))
    assert code == EXIT_OK
    assert rows[0] == ["x", "gap_lower", "gap_upper", "dominance"]
    assert len(rows) == 6
    assert "huygens-sharp-lower/huygens-cubic-lower:yes" in rows[1][3]


def test_sweep_reports_dominance_failure(capsys):
    code, out, _ = _run(capsys, "sweep", "--case", "wilker-sharp", "--grid", "60")
    assert code == EXIT_FAIL
    assert "wilker-sharp-lower/wilker-classic-lower:no" in out


def test_list_catalog(capsys):
    code, out, _ = _run(capsys, "list", "--format", "json")
    data = json.loads(out)
    assert code == EXIT_OK
    assert {d["id"] for d in data} >= {"wilker", "wilker-sharp-lower", "chain-4", "wilker-quartic-upper"}


def test_run_config_validation():
    with pytest.raises(UsageError):
        RunConfig(grid=1)
    assert RunConfig().certify_config().precision_schedule == (64, 128, 256, 512)


def test_report_is_deterministic(monkeypatch, tmp_path):
    cases = tuple(get_case(c) for c in ("wilker", "tan-tail-lower", "wilker-quartic-upper"))
    monkeypatch.setattr(cli, "CASES", cases)
    monkeypatch.setattr(cli, "DEFAULT_N", {"tan-tail": range(1, 3)})
    cfg = RunConfig(grid=3)
    first, code = cli.build_report(cfg)
    second, _ = cli.build_report(cfg)
    assert first == second
    assert code == EXIT_OK  # the expected refutation counts as agreement
    assert "| wilker-quartic-upper |  | background | REFUTED | REFUTED |" in first
