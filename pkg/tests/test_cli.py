import json
import subprocess
import sys
from pathlib import Path

import pytest

from arithmetree.cli import main, parse_sum
from arithmetree import FormalSum, LiteralSyntaxError, UNIT

from oracles import A, AB, N

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("argv,expected", [
    (["add", "(oo)", "(oo)"], "((oo)o) ∪ (ooo) ∪ (o(oo))"),
    (["add", "(oo)", "(oo)", "--ascii"], "((oo)o) u (ooo) u (o(oo))"),
    (["charpoly", "--degree", "3"], "x^4*(x-1)^2"),
    (["encode", "(ooo)"], "(1,1+2h^-1,1+h^-1)"),
    (["decode", "(1,2,1+h^-1+h^-2)"], "(o(oo))"),
    (["decode", "(0)"], "o"),
    (["meet", "((o(oo))o)", "((oo)(oo))"], "(((oo)o)o)"),
    (["join", "((ooo)o)", "((oo)oo)"], "(oooo)"),
    (["covers", "(((oo)o)o)"], "((oo)oo)\n((ooo)o)"),
    (["moebius", "(ooo)"], "-1"),
    (["moebius", "(o(oo))", "--mode", "brute"], "0"),
    (["atoms", "--degree", "3"], "((ooo)o)\n((oo)oo)"),
    (["chain", "--degree", "2"], "((oo)o)\n(ooo)\n(o(oo))"),
    (["star", "(oo)", "(oo)"], "((oo)o) + (ooo) + (o(oo))"),
    (["op", "<", "(oo)", "(oo)"], "(o(oo))"),
    (["op", "bullet", "(oo)", "(oo)"], "(ooo)"),
    (["omega", "((oo)(oo))"], "g > (g < g)"),
    (["groveop", ".", "(ooo)", "(oooo)"], "(oooooo)"),
    (["mul", "(ooo)", "(oooo)"], "(ooooooo)"),
    (["decompose", "(ooo)", "1", "1"], "(oo) (oo)"),
    (["coproduct", "(o(oo))"], "1⊗(o(oo)) + (oo)⊗(oo) + (o(oo))⊗1"),
    (["coproduct", "(oo)", "--ascii"], "1 (x) (oo) + (oo) (x) 1"),
    (["primcheck", "((oo)o) - (o(oo))"], "primitive"),
    (["primcheck", "(o(oo))"], "not primitive"),
    (["invariants", "--degree", "6"], "11"),
    (["enumerate", "--degree", "2"], "((oo)o)\n(o(oo))\n(ooo)"),
])
def test_golden_outputs(capsys, argv, expected):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    assert out == expected + "\n"


def test_round_trip_golden_file(capsys):
    for line in (GOLDEN / "names_upto_4.tsv").read_text().splitlines():
        literal, name = line.split("\t")
        assert run(capsys, "encode", literal) == (0, name + "\n", "")
        assert run(capsys, "decode", name) == (0, literal + "\n", "")


def test_enumerate_matches_golden_count(capsys):
    code, out, _ = run(capsys, "enumerate", "--degree", "4")
    assert code == 0 and len(out.splitlines()) == 45


def test_order_dot(capsys):
    code, out, _ = run(capsys, "order", "--degree", "2")
    assert code == 0
    assert out.startswith("digraph T2 {") and out.count("->") == 2


def test_json_outputs(capsys):
    _, out, _ = run(capsys, "add", "(oo)", "(oo)", "--format", "json")
    assert json.loads(out) == {"degree": 2, "members": [
        "(1,1+h^-1,1+h^-1)", "(1,1+2h^-1,1+h^-1)", "(1,2,1+h^-1+h^-2)"]}
    _, out, _ = run(capsys, "encode", "(oo)", "--format", "json")
    assert json.loads(out) == {"tree": "(oo)", "name": "(1,1+h^-1)"}
    _, out, _ = run(capsys, "star", "(oo)", "(oo)", "--format", "json")
    assert [t["basis"] for t in json.loads(out)] == ["((oo)o)", "(ooo)", "(o(oo))"]
    _, out, _ = run(capsys, "order", "--degree", "2", "--format", "json")
    assert json.loads(out)["covers"] == [[0, 2], [2, 1]]


def test_out_flag(capsys, tmp_path):
    target = tmp_path / "t3.dot"
    code, out, _ = run(capsys, "order", "--degree", "3", "--out", str(target))
    assert code == 0 and out == ""
    assert target.read_text().startswith("digraph T3")


def test_deterministic(capsys):
    first = run(capsys, "order", "--degree", "3")
    assert run(capsys, "order", "--degree", "3") == first


@pytest.mark.parametrize("argv,fragment", [
    (["encode", "(o)"], "has 1 child"),
    (["encode", "(oo"], "unclosed"),
    (["decode", "(1,2,2)"], "outside every parenthesis"),
    (["meet", "(oo)", "(ooo)"], "degree"),
    (["op", ".", "o", "o"], "undefined"),
    (["chain", "--degree", "4"], "not left-modular"),
    (["enumerate", "--degree", "11"], "cap"),
])
def test_domain_errors_exit_1(capsys, argv, fragment):
    code, out, err = run(capsys, *argv)
    assert code == 1 and out == ""
    assert err.startswith("error: ") and fragment in err


@pytest.mark.parametrize("argv", [
    ["bogus"],
    ["enumerate"],
    ["enumerate", "--degree", "x"],
    ["verify", "--suite", "nope"],
    ["add", "(oo)"],
    ["encode", "(oo)", "--format", "xml"],
])
def test_usage_errors_exit_2(capsys, argv):
    with pytest.raises(SystemExit) as e:
        main(argv)
    assert e.value.code == 2


def test_verify_passing_suite(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "counting", "--max-degree", "4")
    assert code == 0
    assert out.splitlines()[-1].endswith(" 0 failed")
    assert all(line.startswith("PASS ") for line in out.splitlines()[:-1])


def test_verify_reports_failures_with_exit_1(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "lattice", "--max-degree", "4")
    assert code == 1
    assert "FAIL lattice: degree 4: left-modular chain" in out


def test_parse_sum():
    assert parse_sum("(oo)") == FormalSum.basis(N(A))
    assert parse_sum("2*(oo) - 1/2*((oo)o) + 1") == FormalSum({N(A): 2, N(AB): "-1/2", UNIT: 1})
    for bad in ("", "(oo) (oo)", "2* "):
        with pytest.raises(LiteralSyntaxError):
            parse_sum(bad)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "arithmetree", "encode", "(ooo)"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout == "(1,1+2h^-1,1+h^-1)\n"
