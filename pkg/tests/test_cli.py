"""Command line interface: JSON contracts, exit codes, determinism."""

import io
import json

from krenergy.cli import main


def run_cli(argv, stdin_text="", capsys=None, monkeypatch=None):
    if monkeypatch is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin_text))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_energy_worked_example(capsys, monkeypatch):
    payload = json.dumps({"n": 4, "rows": ["13", "1224", "123"]})
    code, out, err = run_cli(["energy"], payload, capsys, monkeypatch)
    assert code == 0
    assert json.loads(out) == {"intrinsic": 5, "staircase": 5, "equal": True}


def test_energy_single_factor(capsys, monkeypatch):
    payload = json.dumps({"n": 3, "rows": ["112"]})
    code, out, _ = run_cli(["energy"], payload, capsys, monkeypatch)
    assert code == 0
    assert json.loads(out) == {"intrinsic": 0, "staircase": 0, "equal": True}


def test_energy_empty_rows(capsys, monkeypatch):
    payload = json.dumps({"n": 3, "factors": [[0, 0, 0], [0, 0, 0]]})
    code, out, _ = run_cli(["energy"], payload, capsys, monkeypatch)
    assert code == 0
    assert json.loads(out) == {"intrinsic": 0, "staircase": 0, "equal": True}


def test_energy_malformed_input(capsys, monkeypatch):
    code, out, err = run_cli(["energy"], "not json", capsys, monkeypatch)
    assert code == 2
    assert "error" in err


def test_energy_bad_schema(capsys, monkeypatch):
    code, _, err = run_cli(["energy"], '{"n": 3}', capsys, monkeypatch)
    assert code == 2


def test_energy_from_file(tmp_path, capsys):
    path = tmp_path / "tensor.json"
    path.write_text(json.dumps({"n": 2, "rows": ["1", "2", "1"]}))
    code = main(["energy", str(path)])
    out, _ = capsys.readouterr()
    assert code == 0
    assert json.loads(out)["intrinsic"] == 2


def test_rmatrix_worked_example(capsys, monkeypatch):
    payload = json.dumps({"n": 4, "rows": ["13", "1224"]})
    code, out, _ = run_cli(["rmatrix", "--check"], payload, capsys, monkeypatch)
    assert code == 0
    data = json.loads(out)
    assert data["rows"] == ["1123", "24"]
    assert data["factors"] == [[2, 1, 1, 0], [0, 1, 0, 1]]


def test_rmatrix_oracle_flag(capsys, monkeypatch):
    payload = json.dumps({"n": 4, "rows": ["13", "1224"]})
    code, out, _ = run_cli(["rmatrix", "--oracle"], payload, capsys, monkeypatch)
    assert code == 0
    assert json.loads(out)["rows"] == ["1123", "24"]


def test_rmatrix_equal_factors_unchanged(capsys, monkeypatch):
    payload = json.dumps({"n": 3, "rows": ["12", "12"]})
    code, out, _ = run_cli(["rmatrix", "--check"], payload, capsys, monkeypatch)
    assert code == 0
    assert json.loads(out)["rows"] == ["12", "12"]


def test_rmatrix_wrong_arity(capsys, monkeypatch):
    payload = json.dumps({"n": 3, "rows": ["12"]})
    code, _, err = run_cli(["rmatrix"], payload, capsys, monkeypatch)
    assert code == 2


def test_emit_formula_eight_terms(capsys):
    code = main(["emit-formula", "--n", "2", "--m", "3"])
    out, _ = capsys.readouterr()
    assert code == 0
    data = json.loads(out)
    assert data["shape"] == [2, 1]
    assert len(data["terms"]) == 8
    monomials = sorted(tuple(tuple(v) for v in t["monomial"]) for t in data["terms"])
    # the displayed eight-term minimum, as exponent triples [i, r, e]
    expected = sorted(
        [
            ((1, 0, 1), (1, 1, 1), (2, 1, 1)),
            ((1, 0, 1), (1, 1, 1), (3, 1, 1)),
            ((1, 0, 1), (2, 1, 2)),
            ((1, 0, 1), (2, 1, 1), (3, 1, 1)),
            ((1, 0, 1), (2, 1, 1), (3, 1, 1)),
            ((1, 0, 1), (3, 1, 2)),
            ((2, 0, 1), (2, 1, 1), (3, 1, 1)),
            ((2, 0, 1), (3, 1, 2)),
        ]
    )
    assert monomials == expected


def test_emit_formula_single_factor(capsys):
    code = main(["emit-formula", "--n", "3", "--m", "1"])
    out, _ = capsys.readouterr()
    data = json.loads(out)
    assert data["shape"] == []
    assert len(data["terms"]) == 1
    assert data["terms"][0]["monomial"] == []


def test_verify_small_run_and_determinism(capsys):
    argv = [
        "verify", "--suites", "rmatrix,coenergy", "--n", "2", "--m", "2",
        "--capacity-cap", "2", "--trials", "2", "--seed", "5", "--json",
    ]
    code1 = main(argv)
    out1, err1 = capsys.readouterr()
    code2 = main(argv)
    out2, err2 = capsys.readouterr()
    assert code1 == code2 == 0
    assert out1 == out2  # byte-identical reports
    assert err1 == ""  # --json silences the human summary
    report = json.loads(out1)
    assert report["total"]["failures"] == 0


def test_verify_human_summary_on_stderr(capsys):
    code = main(["verify", "--suites", "coenergy", "--n", "2", "--capacity-cap", "1"])
    out, err = capsys.readouterr()
    assert code == 0
    assert "coenergy" in err


def test_verify_rejects_zero_trials(capsys):
    code = main(["verify", "--trials", "0", "--suites", "rmatrix"])
    _, err = capsys.readouterr()
    assert code == 2
    assert "config error" in err


def test_verify_rejects_unknown_suite(capsys):
    code = main(["verify", "--suites", "nonsense"])
    _, err = capsys.readouterr()
    assert code == 2


def test_verify_rejects_bad_range(capsys):
    code = main(["verify", "--n", "7"])
    _, err = capsys.readouterr()
    assert code == 2
    code = main(["verify", "--n", "2:3:4"])
    _, err = capsys.readouterr()
    assert code == 2
