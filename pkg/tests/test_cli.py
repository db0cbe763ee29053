"""Command line behavior: outputs, JSON mode, and the exit-code contract."""

import json

from dihedral import cli
from dihedral.algebra import AlgebraElement
from dihedral.classification import classify, transcript
from dihedral.exprs import evaluate
from dihedral.fields import FieldSpec, make_field


def run(argv):
    """main() plus argparse's SystemExit, normalized to an exit code."""
    try:
        return cli.main(argv)
    except SystemExit as exc:
        return exc.code


def test_classify_worked_example_text(capsys):
    code = run(["classify", "s*t^2", "--field", "q"])
    out = capsys.readouterr().out
    assert code == 0
    assert "label: eps=+1 theta=0" in out
    assert "witness: t^-1" in out
    assert "in_R=pass" in out and "det_one=pass" in out and "conjugation=pass" in out


def test_classify_json_matches_library(capsys):
    expr = "(t^-1 - t)/2 + s*(1 + (t - t^-1)/2)"
    code = run(["classify", expr, "--json"])  # default field fp:7
    out = capsys.readouterr().out
    assert code == 0
    field = make_field(FieldSpec.prime_closure(7))
    u = evaluate(expr, field)
    expected = transcript(u, classify(u))
    assert json.loads(out) == json.loads(json.dumps(expected))
    assert out == json.dumps(expected) + "\n"


def test_exit_code_corpus(capsys):
    cases = [
        (["normalize", "a*"], 1),
        (["normalize", "x"], 1),
        (["normalize", "1/0"], 1),
        (["classify", "t"], 2),
        (["conjugate", "s", "--by", "1+s"], 2),
        (["is-involution", "t"], 2),
        (["is-idempotent", "t"], 2),
        (["classify", "(t^-1 - t)/2 + s*(1 + (t - t^-1)/2)", "--field", "q"], 3),
        (["normalize", "(1-a)/7", "--field", "fp:7"], 3),
        (["normalize", "t^-1", "--field", "fp:4"], 1),
        (["normalize", "t", "--field", "fp:2"], 1),
        (["normalize", "t", "--field", "gf(9)"], 1),
        (["normalize", "t", "--seed", "-3"], 1),
        (["normalize", "t", "--iterations", "0"], 1),
        (["classify"], 1),
        (["conjugate", "s"], 1),
        (["frobnicate", "t"], 1),
        (["normalize", "t", "--bogus"], 1),
    ]
    for argv, expected in cases:
        code = run(argv)
        capsys.readouterr()
        assert code == expected, argv


def test_predicates(capsys):
    assert run(["is-involution", "s*t^4"]) == 0
    assert capsys.readouterr().out.strip() == "true"
    assert run(["is-involution", "t", "--json"]) == 2
    assert json.loads(capsys.readouterr().out) == {"involution": False}
    assert run(["is-idempotent", "(1-b)/2", "--field", "q"]) == 0
    assert capsys.readouterr().out.strip() == "true"
    assert run(["is-idempotent", "(1-b)/3", "--field", "q"]) == 2
    assert capsys.readouterr().out.strip() == "false"


def test_normalize(capsys):
    assert run(["normalize", "a*b"]) == 0
    assert capsys.readouterr().out.strip() == "t"
    assert run(["normalize", "2*s*t - s*t", "--json"]) == 0
    blob = json.loads(capsys.readouterr().out)
    assert blob == {"f": [], "g": [[1, "1"]], "field": "q"}


def test_conjugate(capsys):
    assert run(["conjugate", "s*t^2", "--by", "t^-1", "--field", "q"]) == 0
    assert capsys.readouterr().out.strip() == "s*(1)"


def test_char_table_patterns(capsys):
    patterns = {
        "(1-a)/2": ["0", "0", "1", "1"],
        "(1+a)/2": ["1", "1", "0", "0"],
        "(1-b)/2": ["0", "1", "0", "1"],
        "(1+b)/2": ["1", "0", "1", "0"],
    }
    for expr, values in patterns.items():
        assert run(["char-table", expr]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert [line.split(" = ")[1] for line in lines] == values, expr
        assert run(["char-table", expr, "--json"]) == 0
        blob = json.loads(capsys.readouterr().out)
        assert [row["value"] for row in blob["table"]] == values
        assert [(row["alpha"], row["beta"]) for row in blob["table"]] == [
            (1, 1), (1, -1), (-1, 1), (-1, -1),
        ]


def test_random_involution_deterministic(capsys):
    assert run(["random-involution", "--seed", "5"]) == 0
    first = capsys.readouterr().out
    assert run(["random-involution", "--seed", "5"]) == 0
    second = capsys.readouterr().out
    assert first == second
    assert "label:" in first
    assert run(["random-involution", "--seed", "6", "--json"]) == 0
    blob = json.loads(capsys.readouterr().out)
    assert set(blob) == {"element", "label"}
    # the element really is an involution with that label
    field = make_field(FieldSpec.prime_closure(7))
    u = AlgebraElement.from_parts(
        field,
        {e: int(c) for e, c in blob["element"]["f"]},
        {e: int(c) for e, c in blob["element"]["g"]},
    )
    assert u.is_involution()


def test_selftest_runs_clean(capsys):
    assert run(["selftest", "--iterations", "2", "--seed", "1"]) == 0
    out = capsys.readouterr().out
    assert "selftest: PASS over fp:7" in out
    assert run(["selftest", "--iterations", "2", "--seed", "1", "--json"]) == 0
    blob = json.loads(capsys.readouterr().out)
    assert blob["passed"] is True
    assert blob["field"] == "fp:7"
    assert len(blob["suites"]) == 7
    assert all(s["failures"] == [] for s in blob["suites"])


def test_selftest_deterministic(capsys):
    run(["selftest", "--iterations", "2", "--json"])
    first = capsys.readouterr().out
    run(["selftest", "--iterations", "2", "--json"])
    second = capsys.readouterr().out
    assert first == second


def test_selftest_over_q(capsys):
    assert run(["selftest", "--iterations", "2", "--field", "q"]) == 0
    out = capsys.readouterr().out
    assert "selftest: PASS over q" in out
