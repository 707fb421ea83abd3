"""Command-line interface tests.

Everything drives run(argv) in-process and checks stdout, stderr, and the
exit code; one test confirms the installed console entry point resolves.
"""

import argparse
import json
import subprocess
import sys

import pytest

from parthom.cli import build_parser, run


def invoke(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def invoke_json(capsys, *argv):
    code, out, err = invoke(capsys, *argv, "--json")
    return code, json.loads(out), err


# ---------------------------------------------------------------------------
# plain verbs


def test_group_order_text(capsys):
    code, out, _ = invoke(capsys, "group-order", "--group", "agl1:5")
    assert code == 0 and out == "20\n"


def test_group_order_json(capsys):
    code, payload, _ = invoke_json(capsys, "group-order", "--group", "m:12")
    assert code == 0
    assert payload == {"group": "m:12", "degree": 12, "order": 95040}


def test_orbit_whole_domain(capsys):
    code, out, _ = invoke(capsys, "orbit", "--group", "c:5", "--point", "1")
    assert code == 0 and out == "1,2,3,4,5\n"


def test_orbit_fixed_point(capsys):
    code, payload, _ = invoke_json(capsys, "orbit", "--group", "fix+c:5",
                                   "--point", "6")
    assert code == 0
    assert payload["orbit"] == [6] and payload["size"] == 1


def test_orbit_point_out_of_range(capsys):
    code, out, err = invoke(capsys, "orbit", "--group", "c:5", "--point", "7")
    assert code == 2 and out == ""
    assert "out of range" in err


def test_orbit_cap_exceeded(capsys):
    code, _, err = invoke(capsys, "orbit", "--group", "s:8", "--point", "1",
                          "--cap", "3")
    assert code == 2 and "cap exceeded" in err


def test_check_homog(capsys):
    code, out, _ = invoke(capsys, "check-homog", "--group", "agl1:5",
                          "--t", "3")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("3-homogeneous true")
    assert lines[1].startswith("3-transitive false")


def test_check_lambda_json(capsys):
    code, payload, _ = invoke_json(capsys, "check-lambda", "--group",
                                   "psl2:5", "--lambda", "3,3")
    assert code == 0
    assert payload["lambda"] == "3,3"
    assert payload["homogeneous"]["verdict"] is True
    assert payload["transitive"]["verdict"] is False
    assert payload["transitive"]["orbit_size"] == 10
    assert payload["transitive"]["expected"] == 20


# ---------------------------------------------------------------------------
# pair checks


def test_check_pair_false_still_exits_zero(capsys):
    code, out, _ = invoke(capsys, "check-pair", "--group", "agl1:5",
                          "--lambda", "2,2,1")
    assert code == 0
    assert out.splitlines() == ["pair false",
                                "witness partition-homogeneity"]


def test_check_pair_with_map_and_clause(capsys):
    code, payload, _ = invoke_json(capsys, "check-pair", "--group", "agl1:5",
                                   "--map", "1,1,3,4,5", "--clause")
    assert code == 0
    assert payload["verdict"] is True and payload["witness"] is None
    assert payload["lambda"] == "2,1,1,1"
    assert payload["clause"] == "3"


def test_check_pair_requires_exactly_one_target(capsys):
    with pytest.raises(SystemExit) as exc:
        run(["check-pair", "--group", "agl1:5"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        run(["check-pair", "--group", "agl1:5", "--lambda", "5",
             "--map", "1,1,3,4,5"])
    assert exc.value.code == 2


def test_check_pair_degree_mismatch(capsys):
    code, _, err = invoke(capsys, "check-pair", "--group", "agl1:5",
                          "--map", "1,1,3")
    assert code == 2 and "expected 5 images" in err


def test_classify_text(capsys):
    code, out, _ = invoke(capsys, "classify", "--group", "agl1:5")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 6
    assert lines[0] == "5 true clause=2"
    assert "2,2,1 false witness=partition-homogeneity clause=none" in lines


def test_classify_json_row_count(capsys):
    code, payload, _ = invoke_json(capsys, "classify", "--group", "pgl2:8")
    assert code == 0
    rows = payload["rows"]
    assert len(rows) == 29
    # 13, not the recorded 12: the constant type passes too (see README)
    assert sum(r["verdict"] for r in rows) == 13


def test_classify_no_clauses(capsys):
    code, out, _ = invoke(capsys, "classify", "--group", "c:4",
                          "--no-clauses")
    assert code == 0 and "clause=" not in out


# ---------------------------------------------------------------------------
# fixtures, oracle, catalog


def test_verify_fixtures_all_mismatch_exit(capsys):
    code, out, _ = invoke(capsys, "verify-fixtures", "--all")
    assert code == 1
    assert out.splitlines()[-1] == "MISMATCH"
    assert "verdict-mismatch lambda=9 expected=false computed=true" in out


def test_verify_fixtures_clean_table(capsys):
    code, out, _ = invoke(capsys, "verify-fixtures", "--group", "agl1:5")
    assert code == 0
    assert out.splitlines() == ["agl1:5 rows 6 mismatches 0", "ok"]


def test_verify_fixtures_unknown_table(capsys):
    code, _, err = invoke(capsys, "verify-fixtures", "--group", "s:3")
    assert code == 2 and "no fixture table" in err


def test_verify_fixtures_json_round_trip(capsys):
    code, payload, _ = invoke_json(capsys, "verify-fixtures", "--group",
                                   "pgl2:8")
    assert code == 1
    assert payload["ok"] is False
    assert payload["tables"][0]["mismatches"][0]["lambda"] == "9"


def test_oracle_semigroup(capsys):
    code, payload, _ = invoke_json(capsys, "oracle-semigroup", "--group",
                                   "agl1:5", "--map", "1,1,3,4,5")
    assert code == 0
    assert payload["group_closure"] == 3005
    assert payload["symmetric_closure"] == 3005
    assert payload["equal"] is True


def test_oracle_semigroup_proper_subset(capsys):
    code, out, _ = invoke(capsys, "oracle-semigroup", "--group", "agl1:5",
                          "--map", "1,1,3,3,5")
    assert code == 0
    lines = dict(line.rsplit(" ", 1) for line in out.splitlines())
    assert lines["equal"] == "false"
    assert int(lines["group-closure"]) < int(lines["symmetric-closure"])


def test_validate_catalog(capsys):
    code, out, err = invoke(capsys, "validate-catalog")
    assert code == 0
    assert out.splitlines()[-1] == "ok"
    # progress goes to the diagnostic stream, stdout stays machine-clean
    assert "ok   " in err
    code, out, err = invoke(capsys, "validate-catalog", "--quiet")
    assert code == 0 and err == ""


# ---------------------------------------------------------------------------
# error surface


def test_unknown_family(capsys):
    code, _, err = invoke(capsys, "group-order", "--group", "zz:9")
    assert code == 2 and "unknown family" in err


def test_malformed_lambda(capsys):
    code, _, err = invoke(capsys, "check-lambda", "--group", "agl1:5",
                          "--lambda", "3,2,1")
    assert code == 2 and "sum" in err


def test_unknown_verb_is_usage_error():
    with pytest.raises(SystemExit) as exc:
        run(["frobnicate"])
    assert exc.value.code == 2


def test_every_verb_has_json_flag():
    parser = build_parser()
    subparsers = next(a for a in parser._actions
                      if isinstance(a, argparse._SubParsersAction))
    for name, sub in subparsers.choices.items():
        flags = {s for a in sub._actions for s in a.option_strings}
        assert "--json" in flags, name


def test_console_entry_point():
    out = subprocess.run([sys.executable, "-m", "parthom.cli", "group-order",
                          "--group", "c:7"], capture_output=True, text=True)
    assert out.returncode == 0 and out.stdout.strip() == "7"
