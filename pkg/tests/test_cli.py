"""Command-line front end: exit codes, report plumbing, caps."""

import json

import pytest

from qtails.cli import main, parse_triple


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_parse_triple():
    assert parse_triple("2,3,5") == (2, 3, 5)
    with pytest.raises(ValueError):
        parse_triple("2,3")


def test_table2_text_and_json(capsys):
    code, out, _ = run(capsys, "table2")
    assert code == 0
    assert "(1,2,3): C=17/24 B=7/24 K=3" in out
    code, out, _ = run(capsys, "table2", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["matches_golden"] is True
    assert len(data["rows"]) == 8


def test_table2_csv(capsys):
    code, out, _ = run(capsys, "table2", "--format", "csv")
    assert code == 0
    assert out.splitlines()[0].startswith("triple,C,B,K,L1")


def test_verify_usage_errors(capsys):
    code, _, err = run(capsys, "verify")
    assert code == 2 and "exactly one" in err
    code, _, err = run(capsys, "verify", "--triple", "2,4,6")
    assert code == 2 and "coprime" in err
    code, _, err = run(capsys, "verify", "--triple", "2,3,7", "--nmax", "100")
    assert code == 2 and "cap" in err


def test_verify_triple_json(capsys):
    code, out, _ = run(capsys, "verify", "--triple", "1,2,3")
    assert code == 0
    data = json.loads(out)
    assert data["status"] == "pass"
    assert [z[1] for z in data["zeros"]] == [13]


def test_verify_theorem(capsys):
    code, out, _ = run(capsys, "verify", "--theorem", "mth1")
    assert code == 0
    assert json.loads(out)["status"] == "pass"


def test_verify_writes_file(tmp_path, capsys):
    out_path = tmp_path / "report.json"
    code, out, _ = run(
        capsys, "verify", "--triple", "1,2,5", "--out", str(out_path)
    )
    assert code == 0 and out == ""
    assert json.loads(out_path.read_text())["status"] == "pass"


def test_identity_commands(capsys):
    assert run(capsys, "identity", "--id", "pnt", "--order", "300")[0] == 0
    assert run(capsys, "identity", "--id", "am", "--k", "2", "--order", "100")[0] == 0
    assert (
        run(capsys, "identity", "--id", "ag", "--d", "2", "--i", "1",
            "--tau", "1", "--order", "50")[0]
        == 0
    )
    assert (
        run(capsys, "identity", "--id", "jtp", "--i", "2", "--d", "5",
            "--order", "100")[0]
        == 0
    )


def test_conjecture_exit_codes(capsys):
    code, out, _ = run(
        capsys, "conjecture", "--id", "trunc-jtp", "--R", "5", "--S", "1",
        "--mode", "head", "--kmax", "4", "--order", "120",
    )
    assert code == 0
    assert json.loads(out)["status"] == "pass"

    # the two-variable tail rows stop being unimodal at k=1, d=3, n=4
    code, out, _ = run(
        capsys, "conjecture", "--id", "bivariate-tail",
        "--kmax", "1", "--dmax", "3", "--nmax", "4",
    )
    assert code == 3
    data = json.loads(out)
    assert data["status"] == "counterexample"
    kinds = {f.get("conjecture") for f in data["conjecture_findings"]}
    assert "bivariate-tail-unimodality" in kinds

    code, out, _ = run(
        capsys, "conjecture", "--id", "bivariate-finite",
        "--kmax", "2", "--nmax", "20",
    )
    assert code == 0


def test_conjecture_usage_error(capsys):
    code, _, err = run(capsys, "conjecture", "--id", "trunc-jtp")
    assert code == 2 and "needs --R" in err


def test_oracle_commands(capsys):
    code, out, _ = run(capsys, "oracle", "--which", "mk", "--k", "1", "--n", "10")
    assert code == 0 and out.strip() == "12"
    code, out, _ = run(
        capsys, "oracle", "--which", "partitions", "--parts", "1,2,3", "--n", "6"
    )
    assert code == 0 and out.strip() == "7"
    code, out, _ = run(
        capsys, "oracle", "--which", "dregular", "--d", "2", "--n", "8"
    )
    assert code == 0 and out.strip() == "6"
    code, _, err = run(capsys, "oracle", "--which", "mk", "--n", "99")
    assert code == 2 and "cap" in err
