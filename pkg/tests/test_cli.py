"""Command-line interface: exit codes, report files, determinism."""

import json

import pytest

from subord.cli import CSV_COLUMNS, main


def run(argv, capsys=None):
    code = main(list(argv))
    if capsys is not None:
        capsys.readouterr()  # keep test output clean
    return code


# ---------------------------------------------------------------------------
# exit code 0
# ---------------------------------------------------------------------------

def test_wiener_norm_exits_clean(tmp_path, capsys):
    out = tmp_path / "report.json"
    assert run(["wiener-norm", "--multiplier", "exp_abs_ft", "--out", str(out)],
               capsys) == 0
    report = json.loads(out.read_text())
    assert report["passed"] is True
    assert report["estimate"]["total"] == pytest.approx(2.0, abs=1e-3)


def test_compare_reflexive_run(tmp_path, capsys):
    out = tmp_path / "report.json"
    csv_path = tmp_path / "cases.csv"
    code = run(["compare", "--m1", "exp_abs_ft", "--m2", "exp_abs_ft",
                "--out", str(out), "--csv", str(csv_path)], capsys)
    assert code == 0
    lines = csv_path.read_text().splitlines()
    assert lines[0] == ",".join(CSV_COLUMNS)
    # every data row keeps the fixed column count: no stray commas in values
    for row in lines[1:]:
        assert len(row.split(",")) == len(CSV_COLUMNS)


def test_gw_compare_default_run(tmp_path, capsys):
    out = tmp_path / "report.json"
    code = run(["gw-compare", "--alpha", "1", "--beta", "2", "--out", str(out)],
               capsys)
    assert code == 0
    report = json.loads(out.read_text())
    assert len(report["cases"]) >= 54
    assert report["constant"] == pytest.approx(2.0004268003491954, rel=1e-9)


def test_multiplier_spec_with_parameters(tmp_path, capsys):
    out = tmp_path / "report.json"
    code = run(["wiener-norm", "--multiplier", "gw_symbol:alpha=1", "--out", str(out)],
               capsys)
    assert code == 0
    report = json.loads(out.read_text())
    assert report["estimate"]["total"] == pytest.approx(1.0, abs=1e-3)


def test_lemma2_reports_decomposition(tmp_path, capsys):
    out = tmp_path / "report.json"
    code = run(["lemma2", "--Q", "[0,1]", "--P1", "[0,0,1]", "--P2", "[1]",
                "--out", str(out)], capsys)
    assert code == 0
    report = json.loads(out.read_text())
    assert report["neighborhoods"] == [[0.0, 1.0]]
    assert report["identity_residual"] <= 1e-10


def test_polynomials_accept_re_im_pairs(tmp_path, capsys):
    # coefficient entries may be [re, im] pairs
    out = tmp_path / "report.json"
    code = run(["lemma2", "--Q", "[[0,0],[1,0]]", "--P1", "[0,0,1]", "--P2", "[1]",
                "--out", str(out)], capsys)
    assert code == 0


def test_diffop_verify_full_run(tmp_path, capsys):
    out = tmp_path / "report.json"
    csv_path = tmp_path / "cases.csv"
    code = run(["diffop-verify", "--Q", "[0,1]", "--P1", "[0,0,1]", "--P2", "[1]",
                "--grid-N", "262144", "--q", "2",
                "--out", str(out), "--csv", str(csv_path)], capsys)
    assert code == 0
    report = json.loads(out.read_text())
    assert report["constant"] == pytest.approx(1.5894533544400302, rel=1e-6)
    # exponent triples are ;-separated to stay CSV-safe
    row = csv_path.read_text().splitlines()[1]
    assert "q=2;p1=2;p2=2" in row


# ---------------------------------------------------------------------------
# exit code 1: hypothesis violations
# ---------------------------------------------------------------------------

def test_lemma2_hypothesis_violation(tmp_path, capsys):
    out = tmp_path / "report.json"
    code = run(["lemma2", "--Q", "[1]", "--P1", "[0,1]", "--P2", "[0,1]",
                "--out", str(out)], capsys)
    assert code == 1
    report = json.loads(out.read_text())  # report still written
    assert report["passed"] is False
    assert any("y=0" in v["detail"] for v in report["violations"])


def test_gw_compare_rejects_unordered_pair(tmp_path, capsys):
    out = tmp_path / "report.json"
    code = run(["gw-compare", "--alpha", "2", "--beta", "1", "--out", str(out)],
               capsys)
    assert code == 1
    assert json.loads(out.read_text())["error"]["type"] == "InvalidParameterError"


def test_unknown_multiplier_is_a_hypothesis_error(capsys):
    assert run(["wiener-norm", "--multiplier", "no_such_symbol"], capsys) == 1


# ---------------------------------------------------------------------------
# exit code 2: numerical failures
# ---------------------------------------------------------------------------

def test_diffop_verify_underresolved_grid(tmp_path, capsys):
    # the default grid cannot carry the spline suite under a second-order
    # symbol: the bandwidth gate fires, reported as a numerical failure
    out = tmp_path / "report.json"
    code = run(["diffop-verify", "--Q", "[0,1]", "--P1", "[0,0,1]", "--P2", "[1]",
                "--out", str(out)], capsys)
    assert code == 2
    assert json.loads(out.read_text())["error"]["type"] == "BandwidthExceededError"


# ---------------------------------------------------------------------------
# exit code 3: config errors (no report file)
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("argv", [
    ["gw-compare", "--alpha", "1", "--beta", "2", "--grid-N", "1000"],
    ["gw-compare", "--alpha", "1", "--beta", "2", "--grid-N", "0"],
    ["gw-compare", "--alpha", "1", "--beta", "x"],
    ["lemma2", "--Q", "not json", "--P1", "[0,1]", "--P2", "[1]"],
    ["lemma2", "--Q", "[]", "--P1", "[0,1]", "--P2", "[1]"],
    ["lemma2", "--Q", "[[1,2,3]]", "--P1", "[0,1]", "--P2", "[1]"],
    ["no-such-command"],
    ["gw-compare", "--alpha", "1", "--beta", "2", "--eps", "1,spam"],
    ["wiener-norm", "--multiplier", "gw_symbol:alpha"],
])
def test_config_errors(argv, tmp_path, capsys):
    out = tmp_path / "report.json"
    assert run(argv + ["--out", str(out)], capsys) == 3
    assert not out.exists()


def test_json_config_overrides_flags(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text('{"grid-N": 32768, "beta": 3}')
    out = tmp_path / "report.json"
    code = run(["gw-compare", "--alpha", "1", "--beta", "2", "--eps", "1",
                "--p", "2", "--json-config", str(cfg), "--out", str(out)], capsys)
    assert code == 0
    report = json.loads(out.read_text())
    assert report["beta"] == 3.0
    assert report["grid"]["size"] == 32768


def test_json_config_rejects_unknown_key(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text('{"grid-M": 1}')
    assert run(["gw-compare", "--alpha", "1", "--beta", "2",
                "--json-config", str(cfg)], capsys) == 3


# ---------------------------------------------------------------------------
# determinism
# ---------------------------------------------------------------------------

def test_selftest_passes_and_is_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert run(["selftest", "--out", str(a)], capsys) == 0
    assert run(["selftest", "--out", str(b)], capsys) == 0
    assert a.read_bytes() == b.read_bytes()


def test_reports_without_out_flag_go_to_stdout(capsys):
    code = main(["wiener-norm", "--multiplier", "constant:value=1"])
    captured = capsys.readouterr()
    assert code == 0
    report = json.loads(captured.out)
    assert report["estimate"]["total"] == 1.0
