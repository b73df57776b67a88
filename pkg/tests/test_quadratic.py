from fractions import Fraction

import pytest

from alia import io, linalg as la
from alia.algebra import AlgebraSC, check_alia, special_left_alia
from alia.bialgebra import canonical_pairing
from alia.quadratic import (
    BilinearForm,
    FormPreconditionError,
    Tensor2,
    btilde,
    check_quadratic,
    frobenius_adjoint,
    quadratic_from_frobenius,
    tensor_invariance,
)
from alia.representations import adjoint_rep, check_equivalence, dual_rep
from alia.scalars import RATIONAL

from conftest import anti_diagonal, fixture_path, load, random_matrix, truncated_poly


def t3_form():
    return BilinearForm(RATIONAL, 3, anti_diagonal(3))


def btilde_criterion(A, B):
    if not B.is_nondegenerate():
        return False
    r = btilde(B)
    return r.is_symmetric() and tensor_invariance(A, r).passed


def test_fixture_passes():
    A, B = load("quadratic_t3.json", io.load_form)
    rep = check_quadratic(A, B)
    assert rep.passed
    assert rep.parts["eq-inv"].passed
    assert btilde_criterion(A, B)


def test_fixture_reproducible():
    obj = io.load_json(fixture_path("quadratic_t3.json"))
    A, B = load("quadratic_t3.json", io.load_form)
    f = io.load_matrix(obj, 3, RATIONAL, key="f")
    S, _ = quadratic_from_frobenius(truncated_poly(3), B, f)
    assert S == A


def test_non_symmetric_and_singular(alia3):
    assoc = truncated_poly(3)
    rep = check_quadratic(assoc, BilinearForm(RATIONAL, 3, [[0, 0, 1], [0, 1, 0], [2, 0, 0]]))
    assert not rep.passed and not rep.parts["symmetric"].passed
    rep = check_quadratic(assoc, BilinearForm(RATIONAL, 3, [[0, 0, 0], [0, 1, 0], [0, 0, 1]]))
    assert not rep.parts["nondegenerate"].passed


def test_alia3_not_quadratic_for_t3_form(alia3):
    rep = check_quadratic(alia3, t3_form())
    assert not rep.passed and not rep.parts["eq-quad"].passed
    assert not btilde_criterion(alia3, t3_form())


def test_dimension_mismatch(alia3):
    with pytest.raises(ValueError):
        check_quadratic(alia3, BilinearForm(RATIONAL, 2, la.identity(2)))


def test_frobenius_trivial_cases():
    assoc, B = truncated_poly(3), t3_form()
    S, fhat = quadratic_from_frobenius(assoc, B, la.zeros(3, 3))
    assert S.is_zero() and check_quadratic(S, B).passed
    S, fhat = quadratic_from_frobenius(assoc, B, la.identity(3))
    assert fhat == la.identity(3) and S.is_zero()


def test_frobenius_adjoint_property(rng):
    B = t3_form()
    f = random_matrix(rng, 3)
    fhat = frobenius_adjoint(B, f)
    e = [la.unit(3, i) for i in range(3)]
    for x in e:
        for y in e:
            assert B(la.matvec(fhat, x), y) == B(x, la.matvec(f, y))


def test_frobenius_is_special(rng):
    assoc, B = truncated_poly(3), t3_form()
    f = random_matrix(rng, 3)
    S, fhat = quadratic_from_frobenius(assoc, B, f)
    assert S == special_left_alia(assoc, f, la.scale(-1, fhat))
    assert check_alia(S).passed


def test_frobenius_preconditions(alia3):
    assoc = truncated_poly(3)
    with pytest.raises(ValueError, match="commutative"):
        quadratic_from_frobenius(alia3, t3_form(), la.identity(3))
    with pytest.raises(FormPreconditionError, match="symmetric"):
        quadratic_from_frobenius(assoc, BilinearForm(RATIONAL, 3, [[0, 1, 1], [0, 1, 0], [1, 0, 0]]), la.identity(3))
    with pytest.raises(FormPreconditionError, match="degenerate"):
        quadratic_from_frobenius(assoc, BilinearForm(RATIONAL, 3, la.zeros(3, 3)), la.identity(3))
    with pytest.raises(FormPreconditionError, match="invariant"):
        quadratic_from_frobenius(assoc, BilinearForm(RATIONAL, 3, la.identity(3)), la.identity(3))


def test_btilde():
    assert btilde(BilinearForm(RATIONAL, 2, la.identity(2))).entries == la.identity(2)
    assert btilde(BilinearForm(RATIONAL, 2, [[2, 0], [0, 3]])).entries == ((Fraction(1, 2), 0), (0, Fraction(1, 3)))
    Bd = canonical_pairing(3)
    assert btilde(Bd).entries == Bd.gram
    with pytest.raises(FormPreconditionError):
        btilde(BilinearForm(RATIONAL, 2, [[1, 1], [1, 1]]))


def test_btilde_roundtrip(rng):
    G = random_matrix(rng, 3)
    G = la.add(G, la.transpose(G))
    B = BilinearForm(RATIONAL, 3, G)
    if B.is_nondegenerate():
        back = btilde(BilinearForm(RATIONAL, 3, btilde(B).entries))
        assert back.entries == B.gram


def test_tensor_invariance_examples(alia3):
    assert tensor_invariance(alia3, Tensor2(RATIONAL, 3, la.zeros(3, 3))).passed
    r = Tensor2(RATIONAL, 3, [[1, 0, 0], [0, 0, 0], [0, 0, 0]])
    rep = tensor_invariance(alia3, r)
    # componentwise: h(e_i) r = ((R-L)(e_i) e_1) (x) e_1 - e_1 (x) R(e_i) e_1
    assert not rep.passed
    assert [v.index for v in rep.violations] == [(0,), (1,), (2,)]


def test_btilde_criterion_and_gram_equivalence(rng):
    assoc, B = truncated_poly(3), t3_form()
    for _ in range(10):
        S, _ = quadratic_from_frobenius(assoc, B, random_matrix(rng, 3))
        assert check_quadratic(S, B).passed and btilde_criterion(S, B)
        adj = adjoint_rep(S)
        assert check_equivalence(adj, dual_rep(adj), B.gram).passed


def test_corrupted_negatives(rng):
    assoc, B = truncated_poly(3), t3_form()
    S, _ = quadratic_from_frobenius(assoc, B, random_matrix(rng, 3))
    C = [[list(v) for v in row] for row in S.constants]
    C[0][1][2] += 1
    bad = AlgebraSC(RATIONAL, 3, C)
    assert not check_quadratic(bad, B).passed
    assert not btilde_criterion(bad, B)
    adj = adjoint_rep(bad) if check_alia(bad).passed else None
    if adj is not None:
        assert not check_equivalence(adj, dual_rep(adj), B.gram).passed
