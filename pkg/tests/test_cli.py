import io
import json
import subprocess
import sys

import pytest

from qthook import cli
from qthook.qt import QTRational

SIX_NODE = "((. (. .)) ((. .) (. .)))"


def run(*argv, stdin=""):
    out = io.StringIO()
    code = cli.main(list(argv), stdin=io.StringIO(stdin), out=out)
    return code, out.getvalue()


def test_parsers():
    assert cli.parse_word("4132") == (4, 1, 3, 2)
    assert cli.parse_word("1,-2,10") == (1, -2, 10)
    assert cli.parse_pair("12|213") == ((1, 2), (2, 1, 3))
    assert cli.parse_binary("(. .)") == (None, None)
    # letters are inserted right to left: 1 is the root, 2 its right child
    assert cli.parse_binary("bst:21") == (None, (None, None))
    assert cli.parse_plane("(. . .)") == (None, None, None)
    with pytest.raises(ValueError):
        cli.parse_binary("((. .)")


def test_compute_all_modes_agree():
    code, out = run("compute", "fqsym.F_at_X", "4132", "--mode", "all")
    doc = json.loads(out)
    assert code == 0 and doc["schema"] == 1
    assert len(doc["result"]) == 4 and len({r["value"] for r in doc["result"]}) == 1


def test_compute_signed_gf_six_node_tree():
    code, out = run("compute", "pbt.signed_maj_gf", SIX_NODE, "--format", "text")
    assert code == 0
    got = QTRational.parse(out.strip())
    # the displayed example's first line: (q)_6 (q+t)^2 (1+t)^2 (1+q^2 t)(q^3+qt) over the hook product
    want = QTRational.parse("(1-q)*(1-q^2)*(1-q^3)*(1-q^4)*(1-q^5)*(1-q^6)*(q+t)^2*(1+t)^2*(1+q^2*t)*(q^3+q*t)"
                            " / ((1-q)^3*(1-q^2)*(1-q^3)*(1-q^6))")
    assert got == want


def test_compute_superize():
    code, out = run("compute", "wqsym.N_superize", "12", "--format", "text")
    assert code == 0
    assert out.strip().count("N[") == 4


def test_compute_stdin_batch():
    code, out = run("compute", "fqsym.F_at_X", "-", "--format", "text", stdin="12\n21\n\n")
    assert code == 0 and len(out.splitlines()) == 2


def test_compute_is_byte_identical():
    a = run("compute", "wqsym.M_tridendriform", "12|1", "--mode", "left")
    b = run("compute", "wqsym.M_tridendriform", "12|1", "--mode", "left")
    assert a == b


def test_compute_latex():
    code, out = run("compute", "wqsym.M_at_X", "1", "--format", "latex")
    assert code == 0 and out.strip() == r"\frac{1-t}{1-q}"


def test_compute_errors(capsys):
    assert run("compute", "nope", "1")[0] == 2
    assert run("compute", "fqsym.F_at_X", "1x")[0] == 2
    assert "unknown formula" in capsys.readouterr().err


def test_list():
    code, out = run("compute", "--list")
    names = out.split()
    assert code == 0
    for name in ("fqsym.F_at_X", "pbt.P_at_X", "wqsym.M_at_X", "planetree.MM_at_X"):
        assert name in names


def test_verify_suites():
    code, out = run("verify", "fqsym.hooks", "--max-n", "6")
    assert code == 0 and json.loads(out)["passed"]
    code, out = run("verify", "sequences")
    assert code == 0
    assert run("verify", "no.such.suite")[0] == 2


def test_verify_planetree_six_regions():
    code, out = run("verify", "planetree.hook", "--max-regions", "6")
    doc = json.loads(out)
    assert code == 0 and doc["passed"]


def test_sequences_verb():
    code, out = run("sequences", "--format", "text")
    assert code == 0 and "FAIL" not in out


def test_render():
    code, out = run("render", "5,6,7,4,3,2,8,9,10,1,11", "fqsym.F_at_X", "--format", "latex")
    assert code == 0 and out.count(r"\frac") == 11
    code, out = run("render", "(. .)", "pbt.P_at_X", "--format", "ascii")
    assert out.strip() == "(1 - t) / (1 - q)"
    code, out = run("render", "tree:243411", "planetree.MM_at_X", "--format", "ascii")
    assert code == 0 and out.splitlines()[0] == "1-t^2"


def test_console_script():
    proc = subprocess.run([sys.executable, "-m", "qthook.cli", "verify", "sequences"],
                          capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr
