import json
import subprocess
import sys
from pathlib import Path

import pytest

from syzygy import FieldSpec, ParseError, build
from syzygy.cli import EXIT_FAIL, EXIT_OK, EXIT_PARSE, EXIT_TRUNCATED, main
from syzygy.config import Config, parse_field
from syzygy.io import format_ideal_file, parse_ideal_text

IDEALS = Path(__file__).resolve().parents[1] / "ideals"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_betti_skew_lines_file(capsys):
    code, out, _ = run(capsys, "betti", str(IDEALS / "skew_lines.ideal"))
    assert code == EXIT_OK
    assert "1: - 4 4 1" in out


def test_betti_json(capsys):
    code, out, _ = run(capsys, "betti", "rnc(3)", "--json")
    d = json.loads(out)
    assert code == EXIT_OK and d["schema"] == 1 and [2, 1, 2] in d["entries"]
    assert d["invariants"]["a"] == 2


def test_betti_truncation_exit_code(capsys):
    code, out, _ = run(capsys, "betti", "elliptic_nc5", "--qmax", "1")
    assert code == EXIT_TRUNCATED and "truncated" in out


def test_bounds(capsys):
    code, out, _ = run(capsys, "bounds", "--e", "3")
    lines = out.splitlines()
    assert code == EXIT_OK
    assert lines[1].split()[-3:] == ["6", "8", "3"]
    assert lines[2].split()[-3:] == ["5", "5", "0"]


def test_pei_subcommand(capsys):
    code, out, _ = run(capsys, "pei", "rnc(4)", "--seed", "2", "--json")
    d = json.loads(out)
    assert code == EXIT_OK and d["s"] == 1 and d["t"] == 3
    assert all(d["certified"].values())


def test_pei_explicit_point(capsys):
    code, out, _ = run(capsys, "pei", "rnc(3)", "--point", "1,0,0,0", "--generators")
    assert code == EXIT_OK and "K~_1 generators" in out


def test_project_trace_is_json_lines(capsys):
    code, out, _ = run(capsys, "project", "rnc(4)", "--seed", "5")
    recs = [json.loads(line) for line in out.splitlines()]
    assert code == EXIT_OK and len(recs) == 3
    assert [r["deg"] for r in recs[1:]] == [4, 3]
    assert all(r["delta"] == 0 for r in recs)


def test_catalog_emit_roundtrip(capsys):
    code, out, _ = run(capsys, "catalog", "emit", "elliptic_nc5")
    assert code == EXIT_OK
    assert parse_ideal_text(out) == build("elliptic_nc5").ideal


def test_catalog_list(capsys):
    code, out, _ = run(capsys, "catalog", "list")
    assert code == EXIT_OK and "skew_lines" in out


def test_parse_error_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.ideal"
    bad.write_text("vars x0 .. x2\n# comment\nx0*x1 + * x2\n")
    code, _, err = run(capsys, "betti", str(bad))
    assert code == EXIT_PARSE and "line 3" in err


def test_verify_single_ideal(capsys, tmp_path):
    report = tmp_path / "r.md"
    code, out, _ = run(capsys, "verify", "--ideal", str(IDEALS / "rnc3.ideal"), "--points", "2",
                       "--report", str(report))
    assert code == EXIT_OK and report.read_text().startswith("# verify")


def test_verify_failure_exit_code(capsys):
    code, out, _ = run(capsys, "verify", "--ideal", str(IDEALS / "skew_lines.ideal"), "--points", "1")
    # skew lines asserted to be a variety violates the bound
    assert code == EXIT_FAIL and "reproduce" in out


def test_seed_from_environment(monkeypatch):
    monkeypatch.setenv("SYZYGY_SEED", "17")
    assert Config.from_env().seed == 17
    assert Config.from_env(seed=3).seed == 3


def test_help_documents_conventions():
    for sub in ("betti", "pei", "project", "bounds", "verify"):
        res = subprocess.run([sys.executable, "-m", "syzygy", sub, "--help"], capture_output=True, text=True)
        assert res.returncode == 0
        assert "regularity" in res.stdout and "saturat" in res.stdout


def test_field_parsing():
    assert parse_field("QQ") == FieldSpec(0)
    assert parse_field("GF 101") == parse_field("GF(101)") == FieldSpec(101)
    with pytest.raises(ValueError):
        parse_field("GF 100")


def test_ideal_file_header_and_comments():
    I = parse_ideal_text("# cubic\nfield GF 7\nvars a b c\na*c - b^2  # inline\n")
    assert I.ring.names == ("a", "b", "c") and I.field == FieldSpec(7)
    assert format_ideal_file(I).splitlines()[:2] == ["field GF 7", "vars a b c"]
    assert parse_ideal_text("field QQ\nvars x0 .. x1\n1/2*x0^2 - x1^2\n").field == FieldSpec(0)


@pytest.mark.parametrize("text, line", [("field GF 9\n", 1), ("vars x0 .. x1\nx0*x9\n", 2),
                                        ("x0\nvars x0 .. x1\n", 2), ("field QQ\nvars x0 .. x1\nx0^^2\n", 3)])
def test_ideal_file_errors(text, line):
    with pytest.raises(ParseError) as info:
        parse_ideal_text(text)
    assert info.value.line == line
