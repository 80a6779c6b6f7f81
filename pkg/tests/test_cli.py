import csv
import io
import json

import pytest

from cli import EXIT_ERROR, EXIT_INVALID, EXIT_MISMATCH, EXIT_OK, EXIT_USAGE, main
from utils.filters import CATALOG


@pytest.fixture(autouse=True)
def no_config(monkeypatch, tmp_path):
    monkeypatch.delenv("MNSD_CONFIG", raising=False)
    monkeypatch.setenv("DATABASE_URL", f"sqlite:///{tmp_path / 'reports.db'}")


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_classify_table(capsys):
    code, out, _ = run(capsys, "classify", "--dim", "441", "--filters", "full")
    assert code == EXIT_OK
    assert "(1,3;3,16;7,6)" in out
    assert "(1,441)" in out
    assert "Drinfeld center" in out


def test_classify_even_dimension(capsys):
    code, _, err = run(capsys, "classify", "--dim", "442")
    assert code == EXIT_INVALID
    assert "odd-dimensional" in err


def test_classify_compare_clean(capsys):
    code, out, _ = run(capsys, "classify", "--dim", "729", "--filters", "basic", "--f2-mode", "legacy", "--compare-paper")
    assert code == EXIT_OK
    assert "no discrepancies" in out


def test_classify_compare_mismatch(capsys):
    code, out, _ = run(capsys, "classify", "--dim", "729", "--filters", "basic", "--f2-mode", "strict", "--compare-paper")
    assert code == EXIT_MISMATCH
    assert "(1,9;3,44;9,4)" in out


def test_classify_compare_outside_fixture(capsys):
    code, _, err = run(capsys, "classify", "--dim", "9", "--compare-paper")
    assert code == EXIT_ERROR
    assert "No final reference list" in err


def test_classify_json(capsys):
    code, out, _ = run(capsys, "classify", "--dim", "1323", "--format", "json", "--compare-paper")
    assert code == EXIT_OK
    document = json.loads(out)
    report = document['reports'][0]
    assert report['survivors'] == ["(1,9;3,48;7,18)", "(1,1323)"]
    assert 'elapsed' not in report
    assert document['discrepancy']['extra_in_engine'] == []
    for rejection in report['rejections']:
        for verdict in rejection['verdicts']:
            assert set(verdict) == {'filter', 'status', 'reason', 'citation'}
            assert verdict['citation'] in CATALOG


def test_classify_timing(capsys):
    _, out, _ = run(capsys, "classify", "--dim", "441", "--format", "json", "--timing")
    assert 'elapsed' in json.loads(out)['reports'][0]


def test_classify_csv(capsys):
    code, out, _ = run(capsys, "classify", "--dim", "1575", "--format", "csv")
    assert code == EXIT_OK
    rows = list(csv.DictReader(io.StringIO(out)))
    f17 = [row for row in rows if row['type'] == "(1,21;3,56;5,42)"]
    assert f17[0]['filter'] == "f17_modular_factor"
    assert f17[0]['stage'] == "final"
    assert {row['status'] for row in rows} == {"survivor", "rejected"}


def test_classify_explain_lists_every_rejecting_filter(capsys):
    code, out, _ = run(capsys, "classify", "--dim", "1323", "--explain")
    assert code == EXIT_OK
    assert "f15_adjoint_feasible" in out
    assert "f16_adjoint_prop39" in out


def test_scan_small(capsys):
    code, out, _ = run(capsys, "scan", "--max", "10")
    assert code == EXIT_OK
    lines = [line for line in out.splitlines() if "survivors:" in line]
    assert len(lines) == 5
    assert "(none)" in out


@pytest.mark.parametrize("bound", ["0", "-4", "ten"])
def test_scan_bad_bound(capsys, bound):
    code, _, err = run(capsys, "scan", "--max", bound)
    assert code == EXIT_USAGE
    assert err


def test_scan_f2_diff(capsys):
    code, out, _ = run(capsys, "scan", "--max", "731", "--filters", "basic", "--f2-diff", "--format", "json")
    assert code == EXIT_OK
    diff = json.loads(out)['f2_diff']
    assert diff == [{'dimension': 729, 'legacy_only': [], 'strict_only': ["(1,9;3,44;9,4)", "(1,9;3,62;9,2)"]}]


def test_scan_json_is_deterministic(capsys):
    first = run(capsys, "scan", "--max", "500", "--format", "json")[1]
    second = run(capsys, "scan", "--max", "500", "--format", "json", "--workers", "3")[1]
    assert first == second


@pytest.mark.slow
def test_full_scan_json_is_deterministic(capsys):
    first = run(capsys, "scan", "--max", "2025", "--format", "json")[1]
    second = run(capsys, "scan", "--max", "2025", "--format", "json")[1]
    assert first == second
    flagged = sorted({r['dimension'] for r in json.loads(first)['reports']
                      if any(not s.startswith(f"(1,{r['dimension']})") for s in r['survivors'])})
    assert flagged == [441, 729, 1125, 1323, 1521]


def test_explain_command(capsys):
    code, out, _ = run(capsys, "explain", "--dim", "243", "--type", "(1,9;3,26)")
    assert code == EXIT_OK
    line = next(line for line in out.splitlines() if line.startswith("f13_rank_window"))
    assert "reject" in line
    assert "either pointed or perfect" in line
    assert "Lemma 4.3 proof" in line


def test_explain_pointed_type(capsys):
    code, out, _ = run(capsys, "explain", "--dim", "441", "--type", "(1,441)", "--format", "json")
    assert code == EXIT_OK
    statuses = {v['status'] for v in json.loads(out)['verdicts']}
    assert statuses <= {"pass", "inapplicable"}


@pytest.mark.parametrize("type_text", ["(1,3;3,16;7,7)", "(3,16;1,3)"])
def test_explain_bad_type(capsys, type_text):
    code, _, err = run(capsys, "explain", "--dim", "441", "--type", type_text)
    assert code == EXIT_INVALID
    assert err.startswith("error:")


def test_filters_command(capsys):
    code, out, _ = run(capsys, "filters")
    assert code == EXIT_OK
    for filter_id in CATALOG:
        assert filter_id in out
    assert "Theorem 2.2 / Remark 2.5" in out


def test_missing_command(capsys):
    assert run(capsys)[0] == EXIT_USAGE
    assert run(capsys, "classify")[0] == EXIT_USAGE


def test_config_file_supplies_defaults(capsys, tmp_path):
    config = tmp_path / "mnsd.conf"
    config.write_text("format = json\nfilters = basic\n")
    code, out, _ = run(capsys, "classify", "--dim", "225", "--config", str(config))
    assert code == EXIT_OK
    assert json.loads(out)['reports'][0]['survivors'] == ["(1,3;3,8;5,6)", "(1,225)"]

    code, out, _ = run(capsys, "classify", "--dim", "225", "--config", str(config), "--filters", "full")
    assert json.loads(out)['reports'][0]['survivors'] == ["(1,225)"]


def test_output_file(capsys, tmp_path):
    target = tmp_path / "report.json"
    code, out, _ = run(capsys, "classify", "--dim", "441", "--format", "json", "--output", str(target))
    assert code == EXIT_OK
    assert out == ""
    assert json.loads(target.read_text())['reports'][0]['dimension'] == 441


def test_scan_store(capsys, tmp_path):
    code, _, _ = run(capsys, "scan", "--max", "30", "--store")
    assert code == EXIT_OK
    assert (tmp_path / "reports.db").exists()
