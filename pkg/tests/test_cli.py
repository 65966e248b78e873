"""Command-line interface: exit codes, JSON payloads, and format switches."""

import json

import pytest

from rosenlab import cli
from rosenlab.field import field_new
from rosenlab.verify import SuiteResult


def run_cli(capsys, argv):
    code = cli.main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def strict_json(text):
    """Reject NaN/Infinity literals: payloads must be portable JSON."""
    def bad(token):
        raise ValueError(f"non-portable JSON constant {token}")
    return json.loads(text, parse_constant=bad)


# ---------------------------------------------------------------------------
# usage errors -> exit 2
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("argv", [
    ["expand", "-m", "2", "1/2"],                      # m too small
    ["expand", "-m", "4", "--precision", "8", "1/2"],  # precision too small
    ["expand", "-m", "4", "5"],                        # outside interval
    ["expand", "-m", "4", "not-a-number"],
    ["criteria", "/nonexistent/input.json"],
    ["sturmian", "--rcf", "1", "--len", "10"],         # too few RCF terms
    ["sturmian", "--rcf", "0,1,2", "--len", "10"],     # nonpositive quotient
    ["sturmian", "--rcf", "1,1,1,1", "--letters", "+1:1"],
    ["verify", "--suite", "bogus"],                    # argparse choices
    ["no-such-command"],
    [],
])
def test_usage_errors_exit_two(capsys, argv):
    code, _out, _err = run_cli(capsys, argv)
    assert code == 2


def test_help_exits_zero(capsys):
    code, out, _ = run_cli(capsys, ["--help"])
    assert code == 0
    assert "expand" in out and "criteria" in out


# ---------------------------------------------------------------------------
# expand
# ---------------------------------------------------------------------------

def test_expand_periodic_json(capsys):
    code, out, _ = run_cli(capsys,
                           ["expand", "-m", "4", "1/2", "--format", "json"])
    assert code == 0
    obj = strict_json(out)
    assert obj["schema"] == "rosen-lab/v1"
    assert obj["m"] == 4 and obj["mode"] == "exact"
    assert obj["status"] == "periodic"
    assert obj["quotients"] == "+1:1,+1:1,+1:2"
    assert (obj["mu"], obj["nu"]) == (1, 2)
    assert obj["x"] == "1/2" and obj["reduced_by"] == 0
    # q_3 = 7*lam and the short expansion yields no growth estimate
    assert obj["convergents"][3]["q"]["coeffs"] == ["0", "7"]
    assert obj["growth"]["b_est"] is None


def test_expand_zero_is_finite(capsys):
    code, out, _ = run_cli(capsys,
                           ["expand", "-m", "4", "0", "--format", "json"])
    assert code == 0
    obj = strict_json(out)
    assert obj["status"] == "finite" and obj["length"] == 0


def test_expand_reduce_translates_first(capsys):
    code, out, _ = run_cli(capsys, ["expand", "-m", "4", "5", "--reduce"])
    assert code == 0
    assert "translated by -4 * lam" in out
    assert "(-1:1,+1:7)*" in out


def test_expand_certified_real(capsys):
    argv = ["expand", "-m", "4", "0.3333333333333333333333",
            "--real", "-n", "20", "--format", "json"]
    code, out, _ = run_cli(capsys, argv)
    assert code == 0
    obj = strict_json(out)
    assert obj["status"] == "truncated"     # a decimal literal is never exact
    assert obj["length"] == 20
    assert obj["precision_used"] == 96
    assert obj["notice"]


def test_expand_certified_real_reports_precision_exhaustion(capsys):
    # at m=5 the default 96-bit cap cannot certify past a few steps
    argv = ["expand", "-m", "5", "0.3333333333333333333333",
            "--real", "-n", "20", "--format", "json"]
    code, out, _ = run_cli(capsys, argv)
    assert code == 0
    obj = strict_json(out)
    assert obj["status"] == "truncated"
    assert obj["length"] < 20
    assert obj["notice"]

    argv_hi = argv + ["--precision", "4096"]
    code, out, _ = run_cli(capsys, argv_hi)
    obj = strict_json(out)
    assert obj["length"] == 20
    assert obj["precision_used"] <= 4096


def test_expand_csv_header(capsys):
    code, out, _ = run_cli(capsys,
                           ["expand", "-m", "4", "1/2", "--format", "csv"])
    assert code == 0
    assert out.splitlines()[0] == "n,q_n,q_n_nth_root,loglog_q_over_n"


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def test_verify_json_reports_ok(capsys):
    argv = ["verify", "-m", "4", "--suite", "det", "-n", "3",
            "--format", "json"]
    code, out, _ = run_cli(capsys, argv)
    assert code == 0
    obj = strict_json(out)
    assert obj["ok"] is True
    assert obj["results"][0]["suite"] == "det"
    assert obj["results"][0]["cases"] == 3


def test_verify_csv_header(capsys):
    argv = ["verify", "-m", "4", "--suite", "det", "-n", "2",
            "--format", "csv"]
    code, out, _ = run_cli(capsys, argv)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "suite,m,cases,failures,ok,seconds"
    assert lines[1].startswith("det,4,2,0,1,")


def test_verify_failure_exits_one(capsys, monkeypatch):
    fake = SuiteResult(suite="det", m=4, cases=3, failures=1,
                       counters={}, notes=["injected failure"], seconds=0.0)
    monkeypatch.setattr(cli, "run_suites", lambda *a, **k: [fake])
    code, out, _ = run_cli(capsys, ["verify", "-m", "4", "--suite", "det"])
    assert code == 1
    assert "FAIL" in out and "injected failure" in out


def test_verify_same_seed_is_deterministic(capsys):
    argv = ["verify", "-m", "5", "--suite", "mirror", "-n", "4",
            "--seed", "17", "--format", "json"]
    code1, out1, _ = run_cli(capsys, argv)
    code2, out2, _ = run_cli(capsys, argv)
    a, b = strict_json(out1), strict_json(out2)
    for r in (a, b):
        for res in r["results"]:
            res.pop("seconds", None)
    assert a == b


# ---------------------------------------------------------------------------
# sturmian
# ---------------------------------------------------------------------------

def test_sturmian_golden_word_json(capsys):
    argv = ["sturmian", "-m", "4", "--rcf", "1,1,1,1,1,1,1,1,1",
            "--len", "10", "--format", "json"]
    code, out, _ = run_cli(capsys, argv)
    assert code == 0
    obj = strict_json(out)
    assert obj["schema"] == "rosen-lab/v1"
    assert obj["word"] == ("+1:1,+1:2,+1:1,+1:1,+1:2,"
                          "+1:1,+1:2,+1:1,+1:1,+1:2")
    assert obj["complexity"][0] == {"n": 1, "p_n": 2, "expected": 2}


def test_sturmian_increasing_slope_fires_stammering(capsys):
    argv = ["sturmian", "-m", "4", "--rcf", "1,2,3,4,5,6,7,8,9,10,11,12,13,14",
            "--len", "120", "--format", "json"]
    code, out, _ = run_cli(capsys, argv)
    assert code == 0
    obj = strict_json(out)
    for row in obj["complexity"]:
        assert row["p_n"] == row["expected"] == row["n"] + 1
    st = obj["stammering"]
    assert st["fires"] and st["statistic"] > st["threshold"]
    assert obj["prefix_repetitions"][2] == {
        "n": 3, "found": True, "u": 0, "v": 3, "s": "11/3",
        "prefix_length": 11}


def test_sturmian_csv(capsys):
    argv = ["sturmian", "-m", "4", "--rcf", "1,1,1,1,1,1,1,1,1,1,1,1",
            "--len", "30", "--format", "csv"]
    code, out, _ = run_cli(capsys, argv)
    assert code == 0
    assert out.splitlines()[0] == "n,p_n,expected"


def test_sturmian_bracket_too_loose_for_length(capsys):
    # five golden-ratio terms cannot certify a 30-letter word
    argv = ["sturmian", "-m", "4", "--rcf", "1,1,1,1,1", "--len", "30"]
    code, _out, err = run_cli(capsys, argv)
    assert code == 2
    assert "error:" in err


# ---------------------------------------------------------------------------
# criteria
# ---------------------------------------------------------------------------

def test_criteria_accepts_expansion_dump(capsys, tmp_path):
    code, out, _ = run_cli(capsys,
                           ["expand", "-m", "4", "1/2", "--format", "json"])
    src = tmp_path / "expansion.json"
    src.write_text(out)
    code, out, _ = run_cli(capsys,
                           ["criteria", str(src), "--format", "json"])
    assert code == 0
    obj = strict_json(out)
    assert obj["schema"] == "rosen-lab/v1"
    assert set(obj) >= {"growth_rate", "stammering", "degree", "m"}
    # three quotients are far too few for either criterion
    assert not obj["growth_rate"]["fires"]
    assert not obj["stammering"]["fires"]


def test_criteria_numeric_q_list_fires_growth(capsys, tmp_path):
    src = tmp_path / "q.json"
    src.write_text(json.dumps(
        {"q": [2 ** (4 ** n) for n in range(6)], "D": 2, "m": 4}))
    code, out, _ = run_cli(capsys,
                           ["criteria", str(src), "--format", "json"])
    assert code == 0
    obj = strict_json(out)
    assert obj["growth_rate"]["fires"]
    assert obj.get("stammering") is None    # no word, no repetition data
    assert obj["degree"] == 2


def test_criteria_field_element_q_list(capsys, tmp_path):
    d4 = field_new(4)
    els = [(d4.lam() ** n * (n + 1)).to_json() for n in range(12)]
    src = tmp_path / "q_elements.json"
    src.write_text(json.dumps({"q": els, "D": 2}))
    code, out, _ = run_cli(capsys,
                           ["criteria", str(src), "--format", "json"])
    assert code == 0
    obj = strict_json(out)
    assert obj["m"] == 4                    # inferred from the elements
    assert not obj["growth_rate"]["fires"]  # geometric growth stays quiet


def test_criteria_plain_word_fires_stammering(capsys, tmp_path):
    src = tmp_path / "word.txt"
    src.write_text(",".join(["+1:1,+1:2"] * 8) + "\n")
    code, out, _ = run_cli(capsys,
                           ["criteria", str(src), "-m", "4",
                            "--format", "json"])
    assert code == 0
    obj = strict_json(out)
    st = obj["stammering"]
    assert st["fires"] and st["statistic"] == pytest.approx(8.0)
    assert any("u = 0" in flag for flag in st["flags"])


def test_criteria_csv(capsys, tmp_path):
    src = tmp_path / "word.txt"
    src.write_text(",".join(["+1:1,+1:2"] * 8) + "\n")
    code, out, _ = run_cli(capsys,
                           ["criteria", str(src), "-m", "4",
                            "--format", "csv"])
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "criterion,statistic,threshold,fires"
    assert lines[2].startswith("stammering,8.0,")
