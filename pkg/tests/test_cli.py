"""Tests for the command-line interface: subcommands, formats, exit codes."""

import json

import pytest

from tlh.algebra import AlgebraElement, evaluate_word
from tlh.cli import main
from tlh.diagram import Diagram, generator_U
from tlh.ring import GoldenScalar, LaurentPoly


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def records(out):
    return [json.loads(line) for line in out.splitlines()]


def test_dims_frozen_totals(capsys):
    for n, total in ((2, 9), (4, 195), (6, 3185)):
        code, out, _ = run(capsys, "dims", "--n", str(n))
        assert code == 0
        assert f"closed form = {total}" in out and "pass" in out


def test_dims_structured_is_deterministic(capsys):
    code, first, _ = run(capsys, "dims", "--n", "3", "--format", "structured")
    assert code == 0
    code, second, _ = run(capsys, "dims", "--n", "3", "--format", "structured")
    assert first == second
    recs = records(first)
    assert recs[-1] == {
        "kind": "total",
        "sum_of_squares": 44,
        "formula": 44,
        "enumerated": 44,
        "verdict": "pass",
    }
    assert {r["label"]: r["dim"] for r in recs[:-1]} == {"0": 1, "1": 3, "1b": 3, "mid": 5}


def test_multiply_words(capsys):
    code, out, _ = run(capsys, "multiply", "--n", "2", "--format", "structured", "epsilon", "beta")
    assert code == 0
    product = AlgebraElement.from_json(records(out)[0])
    assert product == AlgebraElement.from_diagram(generator_U(1, 3))

    code, out, _ = run(capsys, "multiply", "--n", "2", "--format", "structured", "U1", "U1")
    assert AlgebraElement.from_json(records(out)[0]) == AlgebraElement.from_diagram(
        generator_U(1, 3)
    ).scale(LaurentPoly.delta())

    code, out, _ = run(capsys, "multiply", "--n", "3", "--format", "structured", "1", "U2 U3")
    assert AlgebraElement.from_json(records(out)[0]) == evaluate_word(["U2", "U3"], 4)


def test_multiply_files(tmp_path, capsys):
    left = tmp_path / "left.json"
    right = tmp_path / "right.json"
    left.write_text(json.dumps(AlgebraElement.from_diagram(generator_U(1, 3)).to_json()))
    right.write_text(json.dumps(AlgebraElement.from_diagram(generator_U(2, 3)).to_json()))
    code, out, _ = run(capsys, "multiply", "--format", "structured", str(left), str(right))
    assert code == 0
    assert AlgebraElement.from_json(records(out)[0]) == evaluate_word(["U1", "U2"], 3)

    other = tmp_path / "other.json"
    other.write_text(json.dumps(AlgebraElement.from_diagram(generator_U(1, 4)).to_json()))
    code, _, err = run(capsys, "multiply", str(left), str(other))
    assert code == 2 and "strands" in err


def test_multiply_usage_errors(capsys):
    code, _, err = run(capsys, "multiply", "epsilon", "beta")
    assert code == 2 and "--n" in err
    code, _, err = run(capsys, "multiply", "--n", "2", "bogus", "beta")
    assert code == 2
    code, _, err = run(capsys, "multiply", "--n", "2", "U1", "U5")
    assert code == 2


def test_factorize_single_element(capsys):
    code, out, _ = run(capsys, "factorize", "--n", "2", "--format", "structured", "U1 U2")
    assert code == 0
    rec = records(out)[0]
    assert rec["word"] == ["U1", "U2"]
    d = Diagram.from_json(rec["diagram"])
    assert evaluate_word(rec["word"], 3) == AlgebraElement.from_diagram(d)


def test_factorize_rejects_non_basis_elements(capsys):
    code, _, err = run(capsys, "factorize", "--n", "2", "U1*U1")
    assert code == 2 and "basis diagram" in err


def test_factorize_table(capsys):
    code, out, _ = run(capsys, "factorize", "--n", "2", "--format", "structured")
    assert code == 0
    recs = records(out)
    assert len(recs) == 9
    for rec in recs:
        d = Diagram.from_json(rec["diagram"])
        assert evaluate_word(rec["word"], 3) == AlgebraElement.from_diagram(d)
    assert [] in [rec["word"] for rec in recs]


def test_gram_single_label_structured(capsys):
    code, out, _ = run(capsys, "gram", "--n", "2", "--lambda", "1", "--format", "structured")
    assert code == 0
    rec = records(out)[0]
    assert (rec["label"], rec["dim"], rec["verdict"]) == ("1", 2, "nondegenerate")
    expected = LaurentPoly.const(GoldenScalar(5)) * LaurentPoly.delta() ** 2 - LaurentPoly.const(
        GoldenScalar(10, -5)
    )
    assert LaurentPoly.from_json(rec["gram_det"]) == expected
    assert len(rec["matrix"]) == 2 and len(rec["matrix"][0]) == 2


def test_gram_all_labels(capsys):
    code, out, _ = run(capsys, "gram", "--n", "3", "--format", "structured")
    assert code == 0
    recs = records(out)
    assert [r["label"] for r in recs] == ["0", "1", "1b", "mid"]
    assert all(r["verdict"] == "nondegenerate" for r in recs)
    assert all("matrix" not in r for r in recs)


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "2")
    assert code == 0 and len(out.splitlines()) == 9
    code, out, _ = run(capsys, "enumerate", "--n", "2", "--lambda", "1")
    assert out.splitlines() == ["1-2*", "2-3"]
    code, out, _ = run(capsys, "enumerate", "--n", "3", "--lambda", "mid")
    assert len(out.splitlines()) == 5
    code, _, err = run(capsys, "enumerate", "--n", "2", "--lambda", "mid")
    assert code == 2


def test_verify_all_n3_passes(capsys):
    code, out, _ = run(capsys, "verify", "all", "--n", "3")
    assert code == 0
    for suite in ("presentation", "associativity", "positivity", "cellular", "semisimplicity", "branching"):
        assert f"PASS {suite}" in out


def test_verify_all_n2_skips_branching(capsys):
    code, out, _ = run(capsys, "verify", "all", "--n", "2")
    assert code == 0
    assert "branching" not in out


def test_verify_structured_report(capsys):
    code, out, _ = run(capsys, "verify", "positivity", "--n", "2", "--format", "structured")
    assert code == 0
    recs = records(out)
    assert recs[0]["kind"] == "suite" and recs[0]["suite"] == "positivity"
    assert recs[-1] == {"kind": "result", "suite": "positivity", "verdict": "pass", "failures": 0}


def test_verify_fault_injection_exits_one(capsys, monkeypatch):
    import tlh.cli

    monkeypatch.setattr(tlh.cli, "verify_presentation", lambda m: ["U1^2 = [2]U1: injected"])
    code, out, _ = run(capsys, "verify", "presentation", "--n", "2")
    assert code == 1
    assert "FAIL U1^2 = [2]U1: injected" in out


def test_usage_errors_exit_two(capsys):
    code, _, err = run(capsys, "verify", "positivity", "--n", "5")
    assert code == 2 and "--cap" in err
    code, _, err = run(capsys, "verify", "branching", "--n", "2")
    assert code == 2
    code, _, err = run(capsys, "factorize", "--n", "7")
    assert code == 2 and "capped" in err
    code, _, err = run(capsys, "dims", "--n", "1")
    assert code == 2
    code, _, err = run(capsys, "dims")
    assert code == 2 and "--n" in err
    code, _, err = run(capsys, "dims", "--n", "3", "--cap", "0")
    assert code == 2
    with pytest.raises(SystemExit):
        main(["verify", "nope", "--n", "2"])
    with pytest.raises(SystemExit):
        main(["unknown"])


def test_out_flag_writes_file(tmp_path, capsys):
    target = tmp_path / "report.txt"
    code, out, _ = run(capsys, "dims", "--n", "2", "--out", str(target))
    assert code == 0 and out == ""
    code, expected, _ = run(capsys, "dims", "--n", "2")
    assert target.read_text() == expected