import json
import subprocess
import sys

import pytest

from orthospace.cli import main


def run(argv, capsys, stdin=None, monkeypatch=None):
    if stdin is not None:
        import io
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def export(name, capsys, *args):
    code, out, _ = run(["fixtures", "export", name, *args], capsys)
    assert code == 0
    return out


@pytest.fixture
def fixture_file(tmp_path, capsys):
    def make(name, *args):
        path = tmp_path / f"{name}.json"
        path.write_text(export(name, capsys, *args), encoding="utf-8")
        return str(path)
    return make


def test_verify_from_stdin(capsys, monkeypatch):
    text = export("euclidean", capsys, "3")
    code, out, _ = run(["verify", "-"], capsys, stdin=text, monkeypatch=monkeypatch)
    assert code == 0
    assert "euclidean.neutral_dim        pass  0" in out


def test_verify_off_diagonal_witness(tmp_path, capsys):
    doc = {"products": {"p": {"domain": {"dim": 2}, "codomain": {"dim": 1},
                              "B": [[["0"], ["1"]], [["1"], ["0"]]]}}}
    path = tmp_path / "p.json"
    path.write_text(json.dumps(doc))
    code, out, _ = run(["verify", str(path), "--json"], capsys)
    assert code == 1
    checks = {c["name"]: c for c in json.loads(out)["checks"]}
    assert checks["p.orthosymmetry"]["verdict"] == "fail"
    assert checks["p.orthosymmetry"]["witness"]["f"] == ["1", "0"]
    assert checks["p.orthosymmetry"]["witness"]["g"] == ["0", "1"]


def test_verify_lex(fixture_file, capsys):
    code, out, _ = run(["verify", fixture_file("lex2")], capsys)
    assert code == 0
    assert "lex2.neutral_dim             pass  1" in out
    assert "lex2.definite                pass  false" in out


def test_verify_parse_error(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text('{"products": {"p": {"domain": {"dim": 2}, "codomain": {"dim": 1}, "B": [[["x"]]]}}}')
    code, _, err = run(["verify", str(path)], capsys)
    assert code == 2 and "products.p.B" in err


def test_verify_unsupported_codomain(tmp_path, capsys):
    doc = {"products": {"p": {"domain": {"dim": 1}, "codomain": {"dim": 2, "order": "lexicographic"},
                              "B": [[["1", "0"]]]}}}
    path = tmp_path / "u.json"
    path.write_text(json.dumps(doc))
    code, _, err = run(["verify", str(path)], capsys)
    assert code == 3 and err


def test_classify_selfadjoint(fixture_file, capsys):
    code, out, _ = run(["classify", fixture_file("selfadjoint_2x2"), "T", "--products", "euclidean",
                        "euclidean", "--json"], capsys)
    flags = {c["name"]: c["value"] for c in json.loads(out)["checks"]}
    assert code == 0
    assert flags["selfadjoint"] is True and flags["orthomorphism"] is False


def test_classify_latticehom(fixture_file, capsys):
    code, out, _ = run(["classify", fixture_file("latticehom_3x3"), "T", "--json"], capsys)
    flags = {c["name"]: c["value"] for c in json.loads(out)["checks"]}
    assert flags["lattice_hom"] is True and flags["normal"] is True


def test_classify_diag(fixture_file, capsys):
    code, out, _ = run(["classify", fixture_file("diag", "1", "2"), "D", "--json"], capsys)
    flags = {c["name"]: c["value"] for c in json.loads(out)["checks"]}
    assert flags["orthomorphism"] is True and flags["interval_preserving"] is True


def test_classify_missing_name(fixture_file, capsys):
    code, _, err = run(["classify", fixture_file("diag"), "nope"], capsys)
    assert code == 2 and "nope" in err


def test_adjoint_kinds(fixture_file, capsys):
    expect = {"no_adjoint": ("pointwise", "none"), "multi_adjoint": ("half", "family"),
              "kaplan": ("kaplan", "unique")}
    for name, (prod, kind) in expect.items():
        code, out, _ = run(["adjoint", fixture_file(name), "T", "--products", prod, prod, "--json"], capsys)
        checks = {c["name"]: c["value"] for c in json.loads(out)["checks"]}
        assert code == 0 and checks["kind"] == kind


def test_abs_kaplan(fixture_file, capsys):
    code, out, _ = run(["abs", fixture_file("kaplan"), "T", "--json"], capsys)
    checks = {c["name"]: c["value"] for c in json.loads(out)["checks"]}
    assert checks["modulus"] == [["1", "1", "0", "0"], ["0"] * 4, ["0", "0", "1", "1"], ["0"] * 4]


def test_abs_over_bound(fixture_file, capsys):
    code, _, _ = run(["abs", fixture_file("kaplan"), "T", "--max-dim", "2"], capsys)
    assert code == 3


def test_quotient(fixture_file, capsys):
    code, out, _ = run(["quotient", fixture_file("diag", "1", "0", "2"), "--json"], capsys)
    checks = {c["name"]: c for c in json.loads(out)["checks"]}
    assert code == 0
    assert checks["representatives"]["value"] == [1, 3]
    assert all(c["verdict"] == "pass" for c in checks.values())


def test_theorems_builtin_zero_cases(capsys):
    code, out, _ = run(["theorems", "--builtin", "--cases", "0"], capsys)
    assert code == 0 and "FAIL" not in out and "fail" not in out


def test_theorems_corrupted(fixture_file, capsys):
    code, out, _ = run(["theorems", fixture_file("corrupted"), "--cases", "5"], capsys)
    assert code == 1
    assert "steinberg[corrupted]" in out and "witness" in out


def test_theorems_needs_a_source(capsys):
    assert run(["theorems"], capsys)[0] == 2


def test_theorems_json_matches_text(capsys):
    _, text, _ = run(["theorems", "--builtin", "--cases", "3"], capsys)
    _, doc, _ = run(["theorems", "--builtin", "--cases", "3", "--json"], capsys)
    verdicts = [(c["name"], c["verdict"]) for c in json.loads(doc)["checks"]]
    lines = [line.split()[:2] for line in text.splitlines()[1:]]
    assert [list(v) for v in verdicts] == lines


def test_demo(capsys):
    code, out, _ = run(["demo", "integ"], capsys)
    assert code == 0 and "fail" not in out
    assert run(["demo", "oscillation"], capsys)[0] == 0


def test_demo_unknown(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["demo", "bogus"])
    assert exc.value.code == 2


def test_fixtures_unknown(capsys):
    assert run(["fixtures", "export", "bogus"], capsys)[0] == 2
    assert run(["fixtures", "export"], capsys)[0] == 2


def test_fixtures_list(capsys):
    code, out, _ = run(["fixtures", "list"], capsys)
    assert code == 0 and "kaplan" in out.split()


def test_missing_file(capsys):
    assert run(["verify", "/nonexistent/file.json"], capsys)[0] == 2


def test_output_is_byte_stable(fixture_file, capsys):
    path = fixture_file("kaplan")
    first = run(["theorems", path, "--cases", "8", "--seed", "3"], capsys)
    second = run(["theorems", path, "--cases", "8", "--seed", "3"], capsys)
    assert first == second


def test_console_script_pipeline():
    exported = subprocess.run([sys.executable, "-m", "orthospace", "fixtures", "export", "euclidean", "3"],
                              capture_output=True, text=True, check=True).stdout
    res = subprocess.run([sys.executable, "-m", "orthospace", "verify", "-"], input=exported,
                         capture_output=True, text=True)
    assert res.returncode == 0 and "neutral_dim" in res.stdout and not res.stderr
