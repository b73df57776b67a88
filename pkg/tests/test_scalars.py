from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from alia.scalars import (
    RATIONAL,
    Cyclotomic,
    FieldSpec,
    MixedFieldError,
    cyclotomic_polynomial,
    primitive_root,
)

ORDERS = [3, 4, 5, 6, 7, 8, 12]


@st.composite
def cyclo(draw, m):
    deg = len(cyclotomic_polynomial(m)) - 1
    cs = draw(st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=6), min_size=deg, max_size=deg))
    return Cyclotomic(m, cs)


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(3) == (1, 1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)


@pytest.mark.parametrize("m", ORDERS)
def test_zeta_has_exact_order(m):
    z = primitive_root(m)
    assert z**m == 1
    for k in range(1, m):
        assert z**k != 1


@pytest.mark.parametrize("m", ORDERS)
def test_inverse_of_zeta(m):
    z = primitive_root(m)
    assert z.inverse() == z ** (m - 1)
    assert z * z.inverse() == 1


def test_zeta3_relation():
    z = primitive_root(3)
    assert z * z + z + 1 == 0
    assert str(z * z) == "[-1,-1;3]"


@pytest.mark.parametrize("m", [4, 6, 12])
@given(data=st.data())
def test_field_axioms(m, data):
    a, b, c = (data.draw(cyclo(m)) for _ in range(3))
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0
    if a:
        assert a * a.inverse() == 1
        assert (b / a) * a == b


@given(st.fractions(max_denominator=50), st.fractions(max_denominator=50))
def test_rational_embedding(p, q):
    a, b = Cyclotomic(5, [p]), Cyclotomic(5, [q])
    assert a + b == p + q
    assert a * b == p * q
    assert (a * b).rational_value() == p * q
    assert hash(a) == hash(p)


def test_mixed_orders():
    a, b = primitive_root(3), primitive_root(4)
    assert a != b
    with pytest.raises(MixedFieldError):
        a + b
    with pytest.raises(MixedFieldError):
        FieldSpec("cyclotomic", 4).coerce(a)


def test_zero_inverse():
    with pytest.raises(ZeroDivisionError):
        Cyclotomic(5).inverse()


def test_fieldspec_text():
    assert FieldSpec.from_text("rational") == RATIONAL
    f = FieldSpec.from_text("cyclotomic:6")
    assert (f.kind, f.order) == ("cyclotomic", 6)
    assert str(f) == "cyclotomic:6"
    assert FieldSpec.from_json(f.to_json()) == f
    for bad in ("reals", "cyclotomic:", "cyclotomic:x", "cyclotomic:0"):
        with pytest.raises(ValueError):
            FieldSpec.from_text(bad)


def test_parse_and_format():
    f = FieldSpec("cyclotomic", 3)
    assert RATIONAL.parse("-3/6") == Fraction(-1, 2)
    assert RATIONAL.parse(4) == 4
    assert f.parse("[0,1;3]") == primitive_root(3)
    assert f.parse("2") == Cyclotomic(3, [2])
    assert f.format(f.parse("[1,2/3;3]")) == "[1,2/3;3]"
    assert RATIONAL.parse("[5;3]") == 5
    for bad in ("x", "1/0", "[1,a;3]", None):
        with pytest.raises(ValueError):
            RATIONAL.parse(bad)
    with pytest.raises(MixedFieldError):
        RATIONAL.parse("[0,1;3]")


def test_field_primitive_roots():
    assert RATIONAL.primitive_root(2) == -1
    f = FieldSpec("cyclotomic", 12)
    assert f.primitive_root(3) ** 3 == 1
    assert f.primitive_root(3) != 1
    assert f.primitive_root(4) ** 2 == -1
    with pytest.raises(ValueError):
        f.primitive_root(5)
    with pytest.raises(ValueError):
        RATIONAL.primitive_root(3)
