"""CLI behavior: subcommands, formats, exit codes, resume."""

import csv
import io
import json

import pytest

from permrat.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_permcheck_permuting_case(capsys):
    code, out, _ = run_cli(capsys, "permcheck", "--p", "5", "--n", "2", "--b-trace", "1")
    assert code == 0
    doc = json.loads(out)
    assert doc["is_permutation"] is True
    assert doc["b"]["index"] == 3
    assert doc["modulus"] == [2, 0, 1]


def test_permcheck_witness_case(capsys):
    code, out, _ = run_cli(capsys, "permcheck", "--p", "5", "--n", "2", "--b-index", "1")
    assert code == 0
    doc = json.loads(out)
    assert doc["is_permutation"] is False
    assert doc["witness"]["i1"] < doc["witness"]["i2"]


def test_permcheck_requires_valid_parameter(capsys):
    # trace-zero b is a usage error, not a crash
    code, _out, err = run_cli(capsys, "permcheck", "--p", "5", "--n", "5", "--b-index", "1")
    assert code == 2
    assert "trace" in err


def test_permcheck_scan_cap(capsys):
    code, _out, err = run_cli(capsys, "permcheck", "--p", "5", "--n", "2",
                              "--b-trace", "1", "--scan-cap", "10")
    assert code == 2 and "cap" in err
    code, _out, err = run_cli(capsys, "permcheck", "--p", "5", "--n", "2",
                              "--b-trace", "1", "--scan-cap", str(1 << 40))
    assert code == 2 and "hard limit" in err


def test_count_builtin_sextic(capsys):
    code, out, _ = run_cli(capsys, "count", "--builtin", "G", "--p", "5", "--tau", "2")
    assert code == 0
    doc = json.loads(out)
    assert doc["affine"] == 1 and doc["infinity"] == 3 and doc["degree"] == 6


def test_count_builtin_collision_curve(capsys):
    code, out, _ = run_cli(capsys, "count", "--builtin", "F", "--p", "5", "--n", "2",
                           "--b-trace", "1")
    assert code == 0
    doc = json.loads(out)
    assert doc["affine"] == 5 and doc["infinity"] == 2


def test_count_poly_file(capsys, tmp_path):
    path = tmp_path / "poly.txt"
    path.write_text("X^2 + Y^2 - 1\n")
    code, out, _ = run_cli(capsys, "count", "--p", "13", "--poly-file", str(path))
    assert code == 0
    doc = json.loads(out)
    # the circle over F_13 has q - chi(-1)-adjusted point count; verify directly
    expected = sum(1 for x in range(13) for y in range(13) if (x * x + y * y - 1) % 13 == 0)
    assert doc["affine"] == expected


def test_count_missing_parameter_is_usage_error(capsys):
    code, _out, err = run_cli(capsys, "count", "--builtin", "G", "--p", "5")
    assert code == 2 and "tau" in err


def test_bad_flags_exit_two(capsys):
    assert main(["permcheck", "--p", "5"]) == 2          # missing --n
    assert main(["no-such-command"]) == 2


def test_reps_output(capsys):
    code, out, _ = run_cli(capsys, "reps", "--p", "5", "--n", "5")
    assert code == 0
    doc = json.loads(out)
    assert [r["index"] for r in doc["reps"]] == [2500, 1875]
    assert [r["trace"] for r in doc["reps"]] == [1, 2]


def test_verify_exit_zero_and_json_roundtrip(capsys):
    code, out, _ = run_cli(capsys, "verify", "lemmaL", "--p-max", "13")
    assert code == 0
    doc = json.loads(out)
    assert doc["ok"] is True
    assert json.loads(json.dumps(doc)) == doc


def test_verify_csv_format(capsys):
    code, out, _ = run_cli(capsys, "verify", "lemmaL", "--p-max", "13", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0][0] == "key"
    assert len(rows) == 1 + 4  # header + primes 5, 7, 11, 13


def test_verify_human_format(capsys):
    code, out, _ = run_cli(capsys, "verify", "lemma22", "--p-max", "7", "--format", "human")
    assert code == 0
    assert "[pass]" in out and "campaign: lemma22" in out


def test_conjecture_subcommand(capsys):
    code, out, _ = run_cli(capsys, "conjecture", "--n", "3", "--primes", "5")
    assert code == 0
    doc = json.loads(out)
    assert doc["counterexamples"] == []
    assert all(c["witness"] for c in doc["cases"])


def test_output_bytes_are_stable(capsys):
    _, out1, _ = run_cli(capsys, "verify", "thm31", "--p-max", "7", "--full-primes", "")
    _, out2, _ = run_cli(capsys, "verify", "thm31", "--p-max", "7", "--full-primes", "")
    assert out1 == out2
    _, out4, _ = run_cli(capsys, "verify", "thm31", "--p-max", "7", "--full-primes", "",
                         "--jobs", "2")
    assert out1 == out4


def test_cli_resume_byte_identical(capsys, tmp_path):
    prog = tmp_path / "prog"
    _, ref, _ = run_cli(capsys, "verify", "lemmaL", "--p-max", "31")
    code, out, _ = run_cli(capsys, "verify", "lemmaL", "--p-max", "31",
                           "--progress-file", str(prog))
    assert code == 0 and out == ref
    lines = prog.read_text().splitlines()
    prog.write_text("\n".join(lines[:3]) + "\n")
    code, out, _ = run_cli(capsys, "verify", "lemmaL", "--p-max", "31",
                           "--progress-file", str(prog))
    assert code == 0 and out == ref


def test_cli_resume_fingerprint_mismatch(capsys, tmp_path):
    prog = tmp_path / "prog"
    run_cli(capsys, "verify", "lemmaL", "--p-max", "13", "--progress-file", str(prog))
    code, _out, err = run_cli(capsys, "verify", "lemmaL", "--p-max", "17",
                              "--progress-file", str(prog))
    assert code == 2
    assert "configuration" in err


def test_weil_audit_small(capsys):
    code, out, _ = run_cli(capsys, "weil-audit", "--p-max", "7", "--f-degrees", "2",
                           "--ident-p-max", "3", "--eq28-p-max", "5")
    assert code == 0
    doc = json.loads(out)
    assert doc["ok"] is True
