"""Command-line behavior: outputs, exit codes, JSON round trips."""

import json

from toricreg.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_stanley_verb(capsys):
    code, out, _ = run(capsys, "stanley", "--variety", "P(1)", "--ideal", "x1")
    assert code == 0
    assert out.strip() == "(1, {2})"


def test_hilbert_ring(capsys):
    code, out, _ = run(capsys, "hilbert", "--variety", "Hirzebruch(2)", "--ring")
    assert code == 0
    assert out.strip() == "t1*t2 + t2^2 + t1 + 2*t2 + 1"


def test_hilbert_ideal(capsys):
    code, out, _ = run(capsys, "hilbert", "--variety", "P(3)",
                       "--ideal", "x1*x4^2, x2*x4^2, x3*x4^2")
    assert code == 0
    assert out.strip() == "t^2 + 2*t + 2"


def test_enumerate_summary(capsys):
    code, out, _ = run(capsys, "enumerate", "--variety", "P(2)", "--poly", "3*t+1")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[-1] == "count=30 gotzmann=4"
    ideals = json.loads("\n".join(lines[:-1]))
    assert len(ideals) == 30
    assert all("generators" in entry and "filtration" in entry for entry in ideals)


def test_enumerate_json_round_trip(capsys):
    code, out, _ = run(capsys, "enumerate", "--variety", "P(2)", "--poly", "3*t+1",
                       "--json")
    assert code == 0
    data = json.loads(out)
    assert data["count"] == 30 and data["gotzmann"] == 4
    assert json.loads(json.dumps(data)) == data


def test_gotzmann_verb(capsys):
    code, out, _ = run(capsys, "gotzmann", "--poly", "3*t+1", "--vars", "3")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "m=4"
    assert lines[1] == "q=(1,1,1,0)"
    assert lines[2] == "<x1^3*x2, x1^4>"
    assert lines[3:] == ["(1, {2,3})", "(x1, {2,3})", "(x1^2, {2,3})", "(x1^3, {3})"]


def test_lex_verb(capsys):
    code, out, _ = run(capsys, "lex", "--poly", "2*t+2", "--vars", "3")
    assert code == 0
    assert out.splitlines()[0] == "<x1^2*x2, x1^3>"


def test_regularity_verbs(capsys):
    code, out, _ = run(capsys, "regularity", "--variety", "PxP(2,1)",
                       "--poly", "3*t1+1")
    assert code == 0
    assert out.strip() == "{(3,3)} + K  [baseline assumption: default-K]"
    code, out, _ = run(capsys, "regularity", "--variety", "P(3)",
                       "--ideal", "x1*x4^2, x2*x4^2, x3*x4^2", "--json")
    assert code == 0
    data = json.loads(out)
    assert data == {"generators": [[2]], "assumed_baselines": "default-K"}


def test_variety_verb_and_file(tmp_path, capsys):
    code, out, _ = run(capsys, "variety", "--variety", "Hirzebruch(2)", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["grading"] == [[1, -2, 1, 0], [0, 1, 0, 1]]
    path = tmp_path / "v.json"
    path.write_text(json.dumps({"rays": data["rays"], "max_cones": data["max_cones"],
                                "grading": data["grading"]}))
    code, out2, _ = run(capsys, "variety", "--variety", str(path), "--json")
    assert code == 0
    assert json.loads(out2)["grading"] == data["grading"]


def test_degset_verb(capsys):
    code, out, _ = run(capsys, "degset", "--variety", "P(1)", "--poly", "t+1",
                       "--seed", "3")
    assert code == 0
    assert "supportive check: pass" in out


def test_degset_deterministic(capsys):
    _, out1, _ = run(capsys, "degset", "--variety", "P(2)", "--poly", "2",
                     "--seed", "9", "--json")
    _, out2, _ = run(capsys, "degset", "--variety", "P(2)", "--poly", "2",
                     "--seed", "9", "--json")
    assert out1 == out2


def test_regularity_with_baseline_file(tmp_path, capsys):
    # a weaker assumed baseline for the face ring on x4 moves the bound
    baselines = {"label": "custom",
                 "baselines": [{"sigma": [4], "generators": [[3]]}]}
    path = tmp_path / "assume.json"
    path.write_text(json.dumps(baselines))
    code, out, _ = run(capsys, "regularity", "--variety", "P(3)",
                       "--ideal", "x1*x4^2, x2*x4^2, x3*x4^2",
                       "--assume-baseline", str(path))
    assert code == 0
    # the (x4^2, {4}) pair now contributes 2 + 3 + K, dominating the rest
    assert out.strip() == "{(5)} + K  [baseline assumption: custom]"


def test_domain_error_exit_code(capsys):
    code, _, err = run(capsys, "regularity", "--variety", "PxP(2,1)",
                       "--poly", "3*t2+1")
    assert code == 1
    assert "NoSaturatedIdeal" in err


def test_parse_error_exit_code(capsys):
    code, _, err = run(capsys, "hilbert", "--variety", "P(2)", "--ideal", "y1")
    assert code == 2
    assert "ParseError" in err
    code, _, err = run(capsys, "variety", "--variety", "Nope(3)")
    assert code == 2


def test_stanley_json_round_trip(capsys):
    code, out, _ = run(capsys, "stanley", "--variety", "P(3)",
                       "--ideal", "x1*x4^2, x2*x4^2, x3*x4^2", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["pairs"][0] == {"shift": [0, 0, 0, 0], "face": [1, 2, 3]}
