import random

import pytest
from hypothesis import given, settings, strategies as st

from alia import io, linalg as la
from alia.polynomial import MultiPoly, parse_poly
from alia.reflection import (
    InconsistentReflectionError,
    LinearAuto,
    ReflectionData,
    apply_auto,
    dual_auto,
    invariance_check,
    is_pseudo_reflection,
    poly_alia_bracket,
    poly_lie_triple,
    twisted_derivation,
)
from alia.scalars import FieldSpec, primitive_root

from conftest import load

SWAP = LinearAuto.permutation([1, 0, 2])
RD = is_pseudo_reflection(SWAP).data

monomials = st.tuples(*[st.integers(0, 4)] * 3).map(lambda e: MultiPoly(3, {e: 1}))
small_polys = st.dictionaries(
    st.tuples(*[st.integers(0, 3)] * 3), st.integers(-3, 3), max_size=3
).map(lambda t: MultiPoly(3, t))


def P(s):
    return parse_poly(s, 3)


def D(f):
    return twisted_derivation(RD, SWAP, f)


def br(f, g, variant="theorem"):
    return poly_alia_bracket(RD, SWAP, f, g, variant)


def leibniz_oracle(rd, R, exp):
    """D(x_{i1} ... x_{ik}) = sum_j R(x_{i1}) ... R(x_{i(j-1)}) D(x_ij) x_{i(j+1)} ... x_{ik}."""
    n = R.nvars
    factors = [i for i, e in enumerate(exp) for _ in range(e)]
    xs = [MultiPoly.var(n, i, R.field) for i in range(n)]
    total = MultiPoly(n, {}, R.field)
    for j, i in enumerate(factors):
        term = MultiPoly.constant(n, rd.delta_R[i], R.field)
        for a in factors[:j]:
            term = term * apply_auto(R, xs[a])
        for a in factors[j + 1:]:
            term = term * xs[a]
        total = total + term
    return total


def test_swap_data():
    assert RD.order == 2
    assert RD.l_R == P("x1 - x2")
    assert RD.delta_R == (1, -1, 0)
    assert RD.omega == -1
    assert load("swap_reflection.json", io.load_reflection) == SWAP


def test_apply_auto_examples():
    assert apply_auto(SWAP, P("x1")) == P("x2")
    assert apply_auto(SWAP, P("x1*x2")) == P("x1*x2")
    ident = LinearAuto.diagonal([1, 1, 1])
    f = P("x1^3 - 2*x2*x3 + 5")
    assert apply_auto(ident, f) == f
    with pytest.raises(ValueError):
        apply_auto(SWAP, MultiPoly.var(2, 0))


@given(small_polys, small_polys, st.integers(-3, 3))
def test_apply_auto_homomorphism(f, g, c):
    R = LinearAuto(3, [[1, 2, 0], [0, 1, 0], [1, 0, 1]])
    assert apply_auto(R, f * g) == apply_auto(R, f) * apply_auto(R, g)
    assert apply_auto(R, f * c + g) == apply_auto(R, f) * c + apply_auto(R, g)


def test_derivation_examples():
    assert [D(P(s)) for s in ("x1", "x2", "x3")] == [1, -1, 0]
    assert D(P("7")) == 0
    for n in range(1, 7):
        geom = sum((P(f"x1^{n - 1 - k}*x2^{k}") for k in range(n)), MultiPoly(3))
        assert D(P(f"x1^{n}")) == geom
        assert D(P(f"x2^{n}")) == -geom
    assert D(P("x2^4")) == P("-x1^3 - x1^2*x2 - x1*x2^2 - x2^3")


@settings(max_examples=60)
@given(monomials, monomials)
def test_twisted_leibniz(f, g):
    assert D(f * g) == D(f) * g + apply_auto(SWAP, f) * D(g)


@given(small_polys)
def test_reconstruction(f):
    assert f == apply_auto(SWAP, f) + D(f) * RD.l_R


@given(monomials)
def test_matches_leibniz_expansion(f):
    (exp, _), = f.terms
    assert D(f) == leibniz_oracle(RD, SWAP, exp)


def test_leibniz_oracle_zeta3():
    fld = FieldSpec("cyclotomic", 3)
    z = primitive_root(3)
    R = LinearAuto(2, [[1, 0], [1, z]], fld)
    res = is_pseudo_reflection(R)
    assert res.is_reflection and res.data.order == 3
    for exp in [(0, 1), (2, 1), (3, 2), (1, 4)]:
        f = MultiPoly(2, {exp: 1}, fld)
        assert twisted_derivation(res.data, R, f) == leibniz_oracle(res.data, R, exp)


@given(small_polys, small_polys)
def test_twisted_commutator_identity(f, g):
    Rf, Rg = apply_auto(SWAP, f), apply_auto(SWAP, g)
    assert f * D(g) - D(f) * g == Rf * D(g) - D(f) * Rg


def test_bracket_examples():
    assert br(P("x1"), P("x2")) == P("-2*x1")
    f, g = P("x1^2*x3 + x2"), P("x2^3 - x1")
    assert br(f, f) == RD.l_R * D(f) ** 2
    assert br(f * 2, g) == br(f, g) * 2
    assert br(f, g, "intro") == br(g, f)
    with pytest.raises(ValueError):
        br(f, g, "other")


def _jacobi(f, g, h, variant):
    def c(a, b):
        return br(a, b, variant) - br(b, a, variant)

    return br(c(f, g), h, variant) + br(c(g, h), f, variant) + br(c(h, f), g, variant)


@settings(max_examples=40, deadline=None)
@given(small_polys, small_polys, small_polys, st.sampled_from(["theorem", "intro"]))
def test_symmetric_jacobi(f, g, h, variant):
    assert _jacobi(f, g, h, variant).is_zero()


def test_lie_triple():
    x1, x2, x3 = P("x1"), P("x2"), P("x3")
    t = lambda a, b, c: poly_lie_triple(RD, SWAP, a, b, c)  # noqa: E731
    assert t(x1, x2, x3) == 0
    f, h = P("x1^2 + x3"), P("x2*x3")
    assert t(f, f, h) == 0
    assert t(x1, x2, x3) + t(x2, x3, x1) + t(x3, x1, x2) == 0
    g = P("x1*x2^2")
    assert (t(f, g, h) + t(g, h, f) + t(h, f, g)).is_zero()


def test_pseudo_reflection_examples():
    fld = FieldSpec("cyclotomic", 3)
    w = primitive_root(3)
    res = is_pseudo_reflection(LinearAuto.diagonal([1, 1, w], fld))
    assert res.is_reflection and res.data.order == 3 and res.data.omega == w
    assert res.data.l_R == MultiPoly.var(3, 2, fld)
    res = is_pseudo_reflection(LinearAuto.diagonal([1, 1, 1]))
    assert not res.is_reflection and res.reason == "rank(I - R) = 0, not 1"
    res = is_pseudo_reflection(LinearAuto.diagonal([1, 2]))
    assert not res.is_reflection and res.reason == "R^m != I for every m <= 24"
    assert is_pseudo_reflection(LinearAuto.diagonal([1, -1]), max_order=1).reason == "R^m != I for every m <= 1"


def test_canonical_l_r():
    R = LinearAuto(2, [[0, 1], [1, 0]])
    R2 = LinearAuto(2, [[1, 0], [0, -1]])
    for auto in (R, R2):
        d = is_pseudo_reflection(auto).data
        coords = [d.l_R.coeff((int(i == 0), int(i == 1))) for i in range(2)]
        assert next(c for c in coords if c != 0) == 1
        for i in range(2):
            xi = MultiPoly.var(2, i)
            assert xi - apply_auto(auto, xi) == d.l_R * d.delta_R[i]


def test_inconsistent_data():
    bogus = ReflectionData(P("x3"), (0, 0, 1), 2, -1)
    with pytest.raises(InconsistentReflectionError):
        twisted_derivation(bogus, SWAP, P("x1"))


def test_linear_auto_validation():
    with pytest.raises(ValueError):
        LinearAuto(2, [[1, 2], [2, 4]])
    with pytest.raises(ValueError):
        LinearAuto(2, [[1, 0]])


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32))
def test_dual_status_agrees(seed):
    rng = random.Random(seed)
    n = 3
    while True:
        Pm = [[rng.randint(-2, 2) for _ in range(n)] for _ in range(n)]
        if la.det(Pm) != 0:
            break
    if rng.random() < 0.5:
        diag = [[1, 0, 0], [0, 1, 0], [0, 0, rng.choice((-1, 1, 2))]]
    else:
        diag = [[rng.choice((1, -1)) if i == j else 0 for j in range(n)] for i in range(n)]
    R = LinearAuto(n, la.matmul(la.matmul(Pm, diag), la.inverse(Pm)))
    a = is_pseudo_reflection(R)
    b = is_pseudo_reflection(dual_auto(R))
    assert a.is_reflection == b.is_reflection
    if a.is_reflection:
        assert a.data.order == b.data.order and a.data.omega == b.data.omega


def test_invariance():
    assert invariance_check(P("x1 + x2"), [SWAP])
    assert invariance_check(P("x1*x2"), [SWAP])
    assert not invariance_check(P("x1"), [SWAP])
    cyc = LinearAuto.permutation([1, 2, 0])
    assert invariance_check(P("x1*x2*x3 + x1 + x2 + x3"), [SWAP, cyc])
    assert not invariance_check(P("x1*x2"), [SWAP, cyc])
    with pytest.raises(ValueError):
        invariance_check(P("x1"), [LinearAuto.diagonal([1, 1])])
