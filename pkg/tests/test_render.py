import pytest

from qthook import render
from qthook.combinat import bst_insert

SIGMA = (5, 6, 7, 4, 3, 2, 8, 9, 10, 1, 11)


def test_zigzag_columns():
    # node 1 at the bottom, node n on top; i hangs right of i+1 iff i is a descent
    assert render.zigzag_columns((2, 1)) == [1, 0]
    assert render.zigzag_columns((1, 2)) == [0, 1]
    assert render.zigzag_columns(SIGMA) == [1, 2, 3, 2, 1, 0, 1, 2, 3, 2, 3]


def test_zigzag_latex_shape():
    out = render.zigzag(SIGMA)
    lines = out.splitlines()
    assert lines[0].startswith(r"\vcenter{\xymatrix@C=-5mm@R=+4mm{")
    assert lines[-1] == "}}"
    assert len(lines) == 13
    assert lines[1] == r"*{} & *{} & *{} & \frac{1-q^{10}t}{1-q^{11}}\ar@{-}[dl] \\"
    assert lines[-2] == r"*{} & \frac{1-t}{1-q} \\"


def test_zigzag_ascii():
    assert render.zigzag((1,), fmt="ascii") == "[1] (1 - t) / (1 - q)"
    out = render.zigzag((2, 1), fmt="ascii").splitlines()
    assert out == ["[2] (1 - t) / (1 - q^2)", "    [1] (q - t) / (1 - q)"]


def test_binary_labels_and_factors():
    T = bst_insert(tuple(reversed((3, 1, 2, 9, 8, 4, 7, 5, 6, 11, 10))))
    ascii_labels = render.binary(T, "labels", "ascii").splitlines()
    assert [int(x) for x in ascii_labels] == [3, 1, 2, 9, 8, 4, 7, 5, 6, 11, 10]
    assert ascii_labels[1] == "  1" and ascii_labels[2] == "    2"
    latex = render.binary(T, "hook_PT1")
    assert r"\frac{1-q^2t}{1-q^{11}}\ar@{-}[dll]\ar@{-}[drrrrrr]" in latex


def test_plane():
    T = ((None, None), ((None, None, None, None), None))
    out = render.plane(T, "ascii").splitlines()
    assert out[0] == "1-t" and out[1] == "  q-t" and out[4] == "  q^4-t" and out[5] == "    q^3-t^3"
    latex = render.plane(T)
    for num in ("{1-t}", "{q-t}", "{q^4-t}", "{q^3-t^3}"):
        assert num in latex


def test_single_node():
    assert render.decorate((None, None), "binary", fmt="ascii") == "(1 - t) / (1 - q)"
    assert render.decorate((1,), "permutation", fmt="ascii") == "[1] (1 - t) / (1 - q)"


def test_deterministic():
    assert render.zigzag(SIGMA, "hook_recursive") == render.zigzag(SIGMA, "hook_recursive")


def test_errors():
    with pytest.raises(ValueError):
        render.zigzag((1,), fmt="svg")
    with pytest.raises(ValueError):
        render.decorate((1,), "poset")
    with pytest.raises(ValueError):
        render.plane((None, None), "svg")
