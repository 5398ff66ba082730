import json
from importlib import resources

import jsonschema
import pytest

from markovwords.cli import main
from markovwords.words import parse_word


@pytest.fixture(scope="module")
def schema():
    ref = resources.files("markovwords") / "schemas" / "cli-output.schema.json"
    return json.loads(ref.read_text())


def run(capsys, *argv):
    status = main(list(argv))
    captured = capsys.readouterr()
    return status, captured.out, captured.err


def validate_lines(schema, out):
    lines = [ln for ln in out.splitlines() if ln]
    assert lines
    for ln in lines:
        jsonschema.validate(json.loads(ln), schema)
    return [json.loads(ln) for ln in lines]


def test_seq_flat(capsys):
    status, out, _ = run(capsys, "seq", "--A", "1,1", "--B", "2,2", "--n", "14")
    assert status == 0
    assert out.strip() == "1,1,2,2,1,1,2,2,2,2,1,1,2,2,2,2"


def test_seq_round_trip(capsys):
    _, out, _ = run(capsys, "seq", "--A", "1,2,1", "--B", "3", "--n", "9")
    assert parse_word(out.strip()) == tuple([1, 2, 1] * 4 + [3])


def test_seq_blocks(capsys):
    status, out, _ = run(capsys, "seq", "--n", "14", "--blocks")
    assert status == 0
    assert out.strip() == "ABABBABB"


def test_seq_json(capsys, schema):
    status, out, _ = run(capsys, "seq", "--n", "3", "--json")
    assert status == 0
    (rec,) = validate_lines(schema, out)
    assert rec["sequence"] == [1, 1, 1, 1, 2, 2]
    assert rec["blocks"] == "AAB"


def test_stern_csv(capsys):
    status, out, _ = run(capsys, "stern", "--upto", "9")
    assert status == 0
    rows = [ln.split(",") for ln in out.strip().splitlines()]
    assert [int(v) for _, v in rows] == [0, 1, 1, 2, 1, 3, 2, 3, 1, 4]
    assert [int(n) for n, _ in rows] == list(range(10))


def test_stern_json(capsys, schema):
    _, out, _ = run(capsys, "stern", "--upto", "4", "--json")
    recs = validate_lines(schema, out)
    assert [r["value"] for r in recs] == [0, 1, 1, 2, 1]


def test_verify_prop_main_small(capsys):
    status, out, err = run(capsys, "verify", "prop-main", "--n-max", "3")
    assert status == 0
    lines = out.strip().splitlines()
    assert len(lines) == 3
    assert all(ln.startswith("PASS") for ln in lines)
    assert "3/3 passed" in err


def test_verify_prop_main_json(capsys, schema):
    status, out, _ = run(capsys, "verify", "prop-main", "--n-max", "5", "--json")
    assert status == 0
    recs = validate_lines(schema, out)
    assert all(r["passed"] for r in recs)
    assert [r["n"] for r in recs] == [1, 2, 3, 4, 5]


def test_verify_equivalence(capsys, schema):
    status, out, _ = run(capsys, "verify", "equivalence", "--levels", "5",
                         "--pairs", "3", "--json")
    assert status == 0
    recs = validate_lines(schema, out)
    assert len(recs) == 4  # canonical pair + 3 random pairs
    assert all(r["passed"] for r in recs)


def test_verify_lemmas(capsys, schema):
    status, out, _ = run(capsys, "verify", "lemmas", "--k-max", "128", "--json")
    assert status == 0
    recs = validate_lines(schema, out)
    assert all(r["passed"] for r in recs)


def test_verify_theorem_reports_and_exit_status(capsys, schema):
    # random seeds of lengths 1-8 include odd lengths, for which the stated
    # rearrangement genuinely fails at some index; exit must be nonzero
    status, out, _ = run(capsys, "verify", "theorem", "--trials", "8",
                         "--seed", "42", "--n-max", "16", "--json")
    recs = validate_lines(schema, out)
    assert len(recs) == 8
    assert (status == 0) == all(r["passed"] for r in recs)


def test_verify_workers_match_serial(capsys):
    status1, out1, _ = run(capsys, "verify", "prop-main", "--n-max", "40")
    status2, out2, _ = run(capsys, "verify", "prop-main", "--n-max", "40",
                           "--workers", "2")
    assert status1 == status2 == 0
    assert out1 == out2


def test_spectrum_digits(capsys):
    status, out, _ = run(capsys, "spectrum", "--period", "1,1", "--digits", "12")
    assert status == 0
    assert "decimal=2.236067977499" in out
    assert "surd=(0,1,1,5)" in out
    assert "markov=true" in out


def test_spectrum_json(capsys, schema):
    _, out, _ = run(capsys, "spectrum", "--period", "2,2,1,1", "--digits", "12",
                    "--json")
    (rec,) = validate_lines(schema, out)
    assert rec["surd"] == {"p": 0, "q": 1, "r": 5, "D": 221}
    assert rec["decimal"] == "2.973213749463"
    assert rec["is_markov"] is True
    assert rec["argmin"] == 0


def test_scan(capsys, schema):
    status, out, _ = run(capsys, "scan", "--n-max", "6", "--digits", "10", "--json")
    assert status == 0
    recs = validate_lines(schema, out)
    assert [r["n"] for r in recs] == [1, 2, 3, 4, 5, 6]
    assert all(r["is_markov"] for r in recs)
    assert recs[0]["period"] == [2, 2]
    assert recs[0]["decimal"] == "2.8284271247"


def test_bqf(capsys, schema):
    status, out, _ = run(capsys, "bqf", "--form", "1,1,-1", "--radius", "50",
                         "--digits", "12", "--json")
    assert status == 0
    (rec,) = validate_lines(schema, out)
    assert rec["min_abs"] == 1
    assert rec["normalized"] == {"p": 0, "q": 1, "r": 5, "D": 5}
    assert rec["point"] == [1, 0]
    assert rec["decimal"] == "0.447213595499"


def test_bqf_rejects_definite_form(capsys):
    status, _, err = run(capsys, "bqf", "--form", "1,0,1")
    assert status == 2
    assert "discriminant" in err


def test_malformed_word_literal(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["seq", "--A", "1,x,1", "--B", "2,2", "--n", "3"])
    assert exc.value.code == 2
    err = capsys.readouterr().err
    assert "'x'" in err


def test_unknown_subcommand(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
    assert "usage" in capsys.readouterr().err


def test_unknown_flag(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["stern", "--upto", "3", "--bogus"])
    assert exc.value.code == 2
