import pytest

from alia import io
from alia.bialgebra import double_construct

from conftest import load


def test_algebra_roundtrip(alia3):
    assert io.load_algebra(io.dump_algebra(alia3)) == alia3
    assert io.dump_algebra(alia3)["bracket"][0] == {"i": 1, "j": 1, "coeffs": {"1": "1", "2": "1", "3": "1"}}


def test_representation_roundtrip():
    rep = load("adjoint_rep_alia3.json", io.load_representation)
    assert io.load_representation(io.dump_representation(rep)) == rep


def test_bialgebra_and_manin_roundtrip():
    A, delta = load("bialgebra_e1.json", io.load_bialgebra)
    assert io.load_bialgebra(io.dump_bialgebra(A, delta)) == (A, delta)
    mt = double_construct(A, delta)
    assert io.load_manin(io.dump_manin(mt)) == mt
    assert load("double_e1.json", io.load_manin) == mt


def test_matched_pair_roundtrip():
    mp = load("matched_pair_e1.json", io.load_matched_pair)
    assert io.load_matched_pair(io.dump_matched_pair(mp)) == mp


def test_cyclotomic_file():
    R = load("zeta3_reflection.json", io.load_reflection)
    assert R.field.order == 3
    assert io.load_reflection(io.dump_auto(R)) == R


@pytest.mark.parametrize(
    "obj, message",
    [
        ([], "JSON object"),
        ({"dim": -1}, "nonnegative"),
        ({"dim": 2, "bracket": [{"i": 1}]}, "needs 'i', 'j'"),
        ({"dim": 2, "bracket": [{"i": 1, "j": 1, "coeffs": {"a": "1"}}]}, "bad index"),
        ({"dim": 2, "bracket": [{"i": 1, "j": True, "coeffs": {}}]}, "out of range"),
        ({"dim": 1, "field": "cyclotomic:0"}, "bad field spec"),
    ],
)
def test_algebra_errors(obj, message):
    with pytest.raises(io.InputError, match=message):
        io.load_algebra(obj, "f.json")


def test_other_errors():
    with pytest.raises(io.InputError, match="module_dim"):
        io.load_representation({"dim": 1}, "r.json")
    with pytest.raises(io.InputError, match="2 rows"):
        io.load_form({"dim": 2, "gram": [["1", "0"]]}, "g.json")
    with pytest.raises(io.InputError, match="invertible"):
        io.load_reflection({"nvars": 2, "matrix": [["1", "1"], ["1", "1"]]}, "r.json")
    with pytest.raises(io.InputError, match="'A' and 'B'"):
        io.load_matched_pair({"A": {"dim": 1}}, "m.json")
