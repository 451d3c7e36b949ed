import csv
import io
import json

import pytest

from horadam import cli
from horadam.errors import InvariantViolation

LUCAS = ["-a", "0", "-b", "1", "-p", "1", "-q", "-1"]


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.run(argv, out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.mark.parametrize("n,expected", [(6, "18"), (-1, "-1")])
def test_term(n, expected):
    assert run(["term", *LUCAS, "-k", "h", "-n", str(n)]) == (0, expected + "\n", "")


def test_term_equals_style_negative_flags():
    code, out, _ = run(["term", "--a=0", "--b=1", "--p=1", "--q=-1", "-k", "u", "-n", "-3"])
    assert (code, out) == (0, "2\n")


def test_term_rational_and_all_evaluators():
    code, out, _ = run(["term", "-a", "0", "-b", "1", "-p", "1", "-q", "2", "-k", "u", "-n", "-1",
                        "--evaluator", "all", "--format", "json"])
    d = json.loads(out)
    assert code == 0 and d["value"] == "-1/2" and d["evaluators"] == ["binet", "matrix", "naive"]


def test_check_cassini():
    code, out, _ = run(["check", "--id", "cassini", *LUCAS, "-n", "2"])
    d = json.loads(out)
    assert code == 0
    assert (d["lhs"], d["rhs"], d["holds"]) == ("-5", "-5", True)


def test_check_failure_and_skip_codes():
    assert run(["check", "--id", "honsberger_w_printed", *LUCAS, "-n", "2", "-m", "2"])[0] == 1
    code, out, _ = run(["check", "--id", "sum_linear", "-a", "1", "-b", "1", "-p", "3", "-q", "2", "-n", "3"])
    assert code == 3 and json.loads(out)["guard"] == "skipped-degenerate"


def test_check_bilinear_derives_l():
    code, out, _ = run(["check", "--id", "bilinear_w", *LUCAS, "-i", "4", "-j", "1", "-k", "2", "-r", "2"])
    assert code == 0 and json.loads(out)["indices"]["l"] == 3
    code, _, err = run(["check", "--id", "bilinear_w", *LUCAS, "-i", "4", "-j", "1", "-k", "2", "-l", "2", "-r", "2"])
    assert code == 2 and "side condition" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["term", *LUCAS, "-k", "h"],
        ["term", *LUCAS, "-k", "x", "-n", "1"],
        ["term", "-a", "zero", "-b", "1", "-p", "1", "-q", "-1", "-k", "h", "-n", "1"],
        ["term", *LUCAS, "-k", "h", "-n", "1", "--bogus"],
        ["check", "--id", "nope", *LUCAS, "-n", "1"],
        ["check", "--id", "vajda", *LUCAS, "-n", "1"],
        ["term", "-a", "0", "-b", "1", "-p", "2", "-q", "1", "-k", "h", "-n", "3", "--evaluator", "binet"],
        ["term", "-a", "0", "-b", "1", "-p", "2", "-q", "0", "-k", "h", "-n", "-3"],
        ["gf", *LUCAS, "--count", "0"],
        ["audit", "--p-range", "3:1"],
    ],
)
def test_usage_errors_exit_2(argv):
    assert run(argv)[0] == 2


def test_invariant_violation_exits_4(monkeypatch):
    def boom(*a, **k):
        raise InvariantViolation("nonzero omega part")

    monkeypatch.setattr(cli, "term", boom)
    code, _, err = run(["term", *LUCAS, "-k", "h", "-n", "3"])
    assert code == 4 and "invariant" in err


def test_triple():
    assert run(["triple", *LUCAS, "-n", "0"])[:2] == (0, "3 4 5\n")
    d = json.loads(run(["triple", *LUCAS, "-n", "0", "--format", "json"])[1])
    assert d["exact"] == ["32", "24", "40"]
    assert run(["triple", "-a", "0", "-b", "0", "-p", "1", "-q", "1", "-n", "0"])[0] == 3


def test_gf_and_table():
    assert run(["gf", *LUCAS, "--count", "5"])[1] == "2 1 3 4 7\n"
    code, out, _ = run(["table", *LUCAS, "--from", "-1", "--to", "2", "--format", "csv"])
    assert list(csv.reader(io.StringIO(out))) == [
        ["n", "w", "h", "u", "v"], ["-1", "1", "-1", "1", "-1"], ["0", "0", "2", "0", "2"],
        ["1", "1", "1", "1", "1"], ["2", "1", "3", "1", "3"],
    ]


def test_symtable():
    code, out, _ = run(["symtable", "--maxn", "1"])
    assert out == "w_0 = a\nw_1 = b\nh_0 = -a*p + 2*b\nh_1 = -2*a*q + b*p\n"


def test_prove():
    assert run(["prove", "--id", "vajda", "-n", "3", "-r", "1", "-s", "2"])[0] == 0
    code, out, _ = run(["prove", "--id", "interrel_w_from_h_printed", "-n", "2"])
    assert code == 1 and json.loads(out)["outcome"] == "refuted"


def test_bench_cross_checks():
    code, out, _ = run(["bench", *LUCAS, "-n", "2000", "--format", "json"])
    d = json.loads(out)
    assert code == 0 and d["checked_at"] == 1000
    assert [r["evaluator"] for r in d["results"]] == ["naive", "matrix", "binet"]


def test_audit_exit_codes():
    small = ["--a-range=0:1", "--b-range=0:1", "--p-range=-1:1", "--q-range=-1:1", "--n-range=-1:3", "--aux-range=0:2"]
    code, out, _ = run(["audit", *small, "--ids", "cassini,gf_printed", "--format", "json"])
    d = json.loads(out)
    assert code == 0 and d["consistent"]
    assert [t["id"] for t in d["identities"]] == ["gf_printed", "cassini"]
    # the all-zero sequence cannot refute anything, so a DISPUTED id reads as a mismatch
    zero = ["--a-range=0:0", "--b-range=0:0", "--p-range=1:1", "--q-range=1:1"]
    code, out, _ = run(["audit", *zero, "--ids", "honsberger_w_printed"])
    assert code == 1 and "STATUS MISMATCH" in out


def test_output_is_deterministic():
    argv = ["audit", "--a-range=0:1", "--b-range=1:1", "--p-range=1:2", "--q-range=-1:-1", "--ids", "vajda", "--format", "csv"]
    assert run(argv) == run(argv)
