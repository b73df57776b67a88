"""Invariant bilinear forms on left-Alia algebras.

A :class:`BilinearForm` is its Gram matrix ``gram[i][j] = B(e_i, e_j)``.  Viewed
as the map A -> A* it is B-natural; its inverse, read as an element of A (x) A,
is B-tilde.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import linalg as la
from .algebra import AlgebraSC, _require_comm_assoc, special_left_alia
from .report import MAX_WITNESSES, Collector, InternalConsistencyError, combine
from .scalars import FieldSpec

__all__ = [
    "BilinearForm",
    "FormPreconditionError",
    "Tensor2",
    "btilde",
    "check_quadratic",
    "frobenius_adjoint",
    "quadratic_from_frobenius",
    "tensor_invariance",
]


class FormPreconditionError(ValueError):
    pass


def _matrix(field, m, n, name):
    if len(m) != n or any(len(r) != n for r in m):
        raise ValueError(f"{name} must be {n}x{n}")
    return tuple(tuple(field.coerce(x) for x in r) for r in m)


@dataclass(frozen=True)
class BilinearForm:
    field: FieldSpec
    dim: int
    gram: tuple

    def __post_init__(self):
        object.__setattr__(self, "gram", _matrix(self.field, self.gram, self.dim, "gram"))

    def __call__(self, x, y):
        return sum((a * b for a, b in zip(x, la.matvec(self.gram, y))), self.field.zero)

    def is_symmetric(self):
        return self.gram == la.transpose(self.gram)

    def det(self):
        return la.det(self.gram)

    def is_nondegenerate(self):
        return self.dim == 0 or self.det() != 0


@dataclass(frozen=True)
class Tensor2:
    """r = sum_ij entries[i][j] e_i (x) e_j."""

    field: FieldSpec
    dim: int
    entries: tuple

    def __post_init__(self):
        object.__setattr__(self, "entries", _matrix(self.field, self.entries, self.dim, "entries"))

    def is_symmetric(self):
        return self.entries == la.transpose(self.entries)


def check_quadratic(A: AlgebraSC, B: BilinearForm, max_witnesses=MAX_WITNESSES):
    """Symmetric, nondegenerate, and B([x,y],z) = B(x,[z,y]-[y,z]) on basis triples."""
    n = A.dim
    if B.dim != n:
        raise ValueError(f"form has dimension {B.dim}, algebra {n}")
    G = B.gram
    sym = Collector("symmetric", max_witnesses)
    for i in range(n):
        for j in range(i + 1, n):
            sym.check((i, j), (G[i][j] - G[j][i],))
    nondeg = Collector("nondegenerate", max_witnesses)
    if B.is_nondegenerate():
        nondeg.check((), ())
    else:
        nondeg.fail((), (B.det(),))
    e = [A.basis(i) for i in range(n)]
    p = A.bracket
    quad = Collector("eq-quad", max_witnesses)
    inv = Collector("eq-inv", max_witnesses)
    for i, j, k in itertools.product(range(n), repeat=3):
        x, y, z = e[i], e[j], e[k]
        quad.check((i, j, k), (B(p(x, y), z) - B(x, la.vsub(p(z, y), p(y, z))),))
        inv.check((i, j, k), (B(p(x, y), z) + B(y, p(x, z)),))
    parts = {
        "symmetric": sym.done(),
        "nondegenerate": nondeg.done(),
        "eq-quad": quad.done(),
    }
    rep = combine("quadratic", parts, max_witnesses)
    inv_rep = inv.done()
    if parts["symmetric"].passed and parts["eq-quad"].passed and not inv_rep.passed:
        raise InternalConsistencyError("invariance held but its symmetric consequence failed")
    rep.parts["eq-inv"] = inv_rep
    return rep


def btilde(B: BilinearForm) -> Tensor2:
    """The inverse Gram matrix as a 2-tensor."""
    try:
        inv = la.inverse(B.gram) if B.dim else ()
    except la.SingularMatrixError:
        raise FormPreconditionError("B-tilde needs a nondegenerate form") from None
    return Tensor2(B.field, B.dim, inv)


def tensor_invariance(A: AlgebraSC, r: Tensor2, max_witnesses=MAX_WITNESSES):
    """h(e_i) r = 0 for all i, where h(x) = (R - L)(x) (x) id - id (x) R(x)."""
    n = A.dim
    if r.dim != n:
        raise ValueError(f"tensor has dimension {r.dim}, algebra {n}")
    col = Collector("tensor-invariant", max_witnesses)
    E = r.entries
    for i in range(n):
        Rm = A.right_mult(i)
        RmL = la.sub(Rm, A.left_mult(i))
        # (M (x) id) r has entries M E, (id (x) M) r has entries E M^T
        h = la.sub(la.matmul(RmL, E), la.matmul(E, la.transpose(Rm)))
        col.check((i,), [x for row in h for x in row])
    return col.done()


def frobenius_adjoint(B: BilinearForm, f):
    """f-hat with B(f-hat(x), y) = B(x, f(y)), i.e. gram^-1 f^T gram."""
    G = B.gram
    F = _matrix(B.field, f, B.dim, "f")
    if not B.dim:
        return ()
    return la.matmul(la.matmul(la.inverse(G), la.transpose(F)), G)


def _check_frobenius(assoc: AlgebraSC, B: BilinearForm):
    if B.dim != assoc.dim:
        raise ValueError("form and algebra dimensions differ")
    _require_comm_assoc(assoc)
    if not B.is_symmetric():
        raise FormPreconditionError("form is not symmetric")
    if not B.is_nondegenerate():
        raise FormPreconditionError("form is degenerate")
    e = [assoc.basis(i) for i in range(assoc.dim)]
    p = assoc.bracket
    for x, y, z in itertools.product(e, repeat=3):
        if B(p(x, y), z) != B(x, p(y, z)):
            raise FormPreconditionError("form is not invariant: B(xy, z) != B(x, yz)")


def quadratic_from_frobenius(assoc: AlgebraSC, B: BilinearForm, f):
    """[x, y] = x . f(y) - f-hat(x . y); returns (bracket algebra, f-hat)."""
    _check_frobenius(assoc, B)
    fhat = frobenius_adjoint(B, f)
    neg = tuple(tuple(-x for x in row) for row in fhat)
    return special_left_alia(assoc, f, neg), fhat
