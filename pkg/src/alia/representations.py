"""Representations (l, r, V) of left-Alia algebras and matched pairs.

Matrices follow :mod:`alia.linalg`: ``l_mats[i]`` is the matrix of ``l(e_i)``
acting on column vectors of V.  ``l`` is extended to bracket values through the
structure constants, ``l([e_i, e_j]) = sum_t C_ij^t l(e_t)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import linalg as la
from .algebra import AlgebraSC, NotLeftAliaError, check_alia
from .report import MAX_WITNESSES, Collector, combine

__all__ = [
    "MatchedPairData",
    "Representation",
    "adjoint_rep",
    "check_equivalence",
    "check_matched_pair",
    "check_representation",
    "dual_rep",
    "matched_pair_sum",
    "semidirect_product",
]


def _mats(field, mats, count, size, name):
    if len(mats) != count:
        raise ValueError(f"{name} needs {count} matrices, got {len(mats)}")
    out = []
    for m in mats:
        if len(m) != size or any(len(row) != size for row in m):
            raise ValueError(f"{name} matrices must be {size}x{size}")
        out.append(tuple(tuple(field.coerce(x) for x in row) for row in m))
    return tuple(out)


def _combo(field, mats, coeffs, size):
    """sum_t coeffs[t] * mats[t]."""
    out = [[field.zero] * size for _ in range(size)]
    for c, m in zip(coeffs, mats):
        if c == 0:
            continue
        for a in range(size):
            row = m[a]
            orow = out[a]
            for b in range(size):
                if row[b] != 0:
                    orow[b] = orow[b] + c * row[b]
    return tuple(tuple(r) for r in out)


@dataclass(frozen=True)
class Representation:
    algebra: AlgebraSC
    module_dim: int
    l_mats: tuple
    r_mats: tuple

    def __post_init__(self):
        n, m, f = self.algebra.dim, self.module_dim, self.algebra.field
        object.__setattr__(self, "l_mats", _mats(f, self.l_mats, n, m, "l"))
        object.__setattr__(self, "r_mats", _mats(f, self.r_mats, n, m, "r"))

    @property
    def field(self):
        return self.algebra.field

    def l_of(self, x):
        return _combo(self.field, self.l_mats, x, self.module_dim)

    def r_of(self, x):
        return _combo(self.field, self.r_mats, x, self.module_dim)

    @classmethod
    def zero(cls, A: AlgebraSC, module_dim: int):
        z = la.zeros(module_dim, module_dim, A.field.zero)
        return cls(A, module_dim, (z,) * A.dim, (z,) * A.dim)


def check_representation(rep: Representation, max_witnesses=MAX_WITNESSES):
    """l([x,y]) - l([y,x]) = r(x)r(y) - r(y)r(x) + r(y)l(x) - r(x)l(y) on basis pairs."""
    A = rep.algebra
    C = A.constants
    L, R = rep.l_mats, rep.r_mats
    mm = la.matmul
    col = Collector("rep-left-alia", max_witnesses)
    for i, j in itertools.product(range(A.dim), repeat=2):
        lhs = la.sub(rep.l_of(C[i][j]), rep.l_of(C[j][i]))
        rhs = la.add(
            la.sub(mm(R[i], R[j]), mm(R[j], R[i])),
            la.sub(mm(R[j], L[i]), mm(R[i], L[j])),
        )
        diff = la.sub(lhs, rhs)
        col.check((i, j), [x for row in diff for x in row])
    return col.done()


def adjoint_rep(A: AlgebraSC) -> Representation:
    """(L, R, A) with L(x)y = [x, y] = R(y)x."""
    if not check_alia(A).passed:
        raise NotLeftAliaError("the adjoint representation needs a left-Alia algebra")
    n = A.dim
    return Representation(
        A, n, [A.left_mult(i) for i in range(n)], [A.right_mult(i) for i in range(n)]
    )


def _neg_t(m):
    return tuple(tuple(-x for x in row) for row in la.transpose(m)) if m else ()


def dual_rep(rep: Representation, orientation="left", check=True) -> Representation:
    """Representation on the dual module.

    ``left``: (l*, l* - r*) with l*(x) = -l(x)^T, the dual of a left-Alia module.
    ``right``: (r* - l*, r*), the dual for a module over a right-Alia algebra.
    """
    if check and orientation == "left" and not check_representation(rep).passed:
        raise ValueError("dual_rep needs a valid representation")
    ls = [_neg_t(m) for m in rep.l_mats]
    rs = [_neg_t(m) for m in rep.r_mats]
    if rep.module_dim == 0:
        ls = rs = [()] * rep.algebra.dim
    if orientation == "left":
        return Representation(rep.algebra, rep.module_dim, ls, [la.sub(a, b) for a, b in zip(ls, rs)])
    if orientation == "right":
        return Representation(rep.algebra, rep.module_dim, [la.sub(b, a) for a, b in zip(ls, rs)], rs)
    raise ValueError(f"orientation must be 'left' or 'right', got {orientation!r}")


def semidirect_product(A: AlgebraSC, rep: Representation) -> AlgebraSC:
    """[x+u, y+v] = [x,y] + l(x)v + r(y)u on A + V."""
    if rep.algebra.dim != A.dim:
        raise ValueError("representation belongs to an algebra of another dimension")
    B = AlgebraSC.zero(rep.module_dim, A.field)
    mp = MatchedPairData(
        A,
        B,
        rep.l_mats,
        rep.r_mats,
        (la.zeros(A.dim, A.dim, A.field.zero),) * rep.module_dim,
        (la.zeros(A.dim, A.dim, A.field.zero),) * rep.module_dim,
    )
    return matched_pair_sum(mp)


def check_equivalence(rep: Representation, rep2: Representation, phi, max_witnesses=MAX_WITNESSES):
    """phi invertible with phi l(e_i) = l'(e_i) phi and phi r(e_i) = r'(e_i) phi."""
    m = rep.module_dim
    if rep2.module_dim != m or len(phi) != m or any(len(r) != m for r in phi):
        raise ValueError("module dimensions and phi must agree")
    if rep.algebra.dim != rep2.algebra.dim:
        raise ValueError("representations of algebras of different dimension")
    inv = Collector("phi-invertible", max_witnesses)
    d = la.det(phi) if m else 1
    if d == 0:
        inv.fail((), (d,))
    else:
        inv.check((), ())
    col = Collector("intertwines", max_witnesses)
    for i in range(rep.algebra.dim):
        for which, a, b in (("l", rep.l_mats[i], rep2.l_mats[i]), ("r", rep.r_mats[i], rep2.r_mats[i])):
            diff = la.sub(la.matmul(phi, a), la.matmul(b, phi))
            col.check((i,), [x for row in diff for x in row], identity=f"intertwines-{which}")
    return combine("equivalence", {"invertible": inv.done(), "intertwines": col.done()}, max_witnesses)


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MatchedPairData:
    """lA, rA indexed by A's basis act on B; lB, rB indexed by B's basis act on A."""

    A: AlgebraSC
    B: AlgebraSC
    lA: tuple
    rA: tuple
    lB: tuple
    rB: tuple

    def __post_init__(self):
        A, B = self.A, self.B
        if A.field != B.field:
            raise ValueError("matched pair algebras must share a field")
        f = A.field
        object.__setattr__(self, "lA", _mats(f, self.lA, A.dim, B.dim, "lA"))
        object.__setattr__(self, "rA", _mats(f, self.rA, A.dim, B.dim, "rA"))
        object.__setattr__(self, "lB", _mats(f, self.lB, B.dim, A.dim, "lB"))
        object.__setattr__(self, "rB", _mats(f, self.rB, B.dim, A.dim, "rB"))

    def rep_A(self):
        return Representation(self.A, self.B.dim, self.lA, self.rA)

    def rep_B(self):
        return Representation(self.B, self.A.dim, self.lB, self.rB)

    def swapped(self):
        return MatchedPairData(self.B, self.A, self.lB, self.rB, self.lA, self.rA)


def matched_pair_sum(mp: MatchedPairData) -> AlgebraSC:
    """[x+a, y+b] = [x,y]_A + lB(a)y + rB(b)x + [a,b]_B + lA(x)b + rA(y)a.

    A occupies indices 0..n-1 and B the indices n..n+k-1.
    """
    A, B = mp.A, mp.B
    n, k = A.dim, B.dim
    zero = A.field.zero
    zn, zk = (zero,) * n, (zero,) * k

    def col(m, j):
        return tuple(row[j] for row in m)

    def product(p, q):
        if p < n and q < n:
            return A.constants[p][q] + zk
        if p < n:  # [e_p, f_b] = rB(f_b) e_p + lA(e_p) f_b
            b = q - n
            return col(mp.rB[b], p) + col(mp.lA[p], b)
        if q < n:  # [f_a, e_q] = lB(f_a) e_q + rA(e_q) f_a
            a = p - n
            return col(mp.lB[a], q) + col(mp.rA[q], a)
        return zn + B.constants[p - n][q - n]

    return AlgebraSC.from_product(n + k, product, A.field)


def _compatibility(mp: MatchedPairData, name, max_witnesses):
    """A-component of the symmetric Jacobi identity of the sum on (x, y, a):

    rB(a)([x,y]-[y,x]) = [(lB-rB)(a)y, x] + [(rB-lB)(a)x, y]
                         + lB((rA-lA)(y)a)x + lB((lA-rA)(x)a)y

    checked on x = e_i, y = e_j, a = f_a.
    """
    A, B = mp.A, mp.B
    n, k = A.dim, B.dim
    f = A.field
    col = Collector(name, max_witnesses)
    C = A.constants
    e = [A.basis(i) for i in range(n)]
    for i, j, a in itertools.product(range(n), range(n), range(k)):
        rb, lb = mp.rB[a], mp.lB[a]
        lhs = la.matvec(rb, la.vsub(C[i][j], C[j][i]))
        lmr = la.sub(lb, rb)
        rhs = la.vsub(
            A.bracket(la.matvec(lmr, e[j]), e[i]),
            A.bracket(la.matvec(lmr, e[i]), e[j]),
        )
        fa = la.unit(k, a, f.one, f.zero)
        ya = la.matvec(la.sub(mp.rA[j], mp.lA[j]), fa)
        xa = la.matvec(la.sub(mp.lA[i], mp.rA[i]), fa)
        rhs = la.vadd(rhs, tuple(r[i] for r in _combo(f, mp.lB, ya, n)))
        rhs = la.vadd(rhs, tuple(r[j] for r in _combo(f, mp.lB, xa, n)))
        col.check((i, j, a), la.vsub(lhs, rhs))
    return col.done()


def check_matched_pair(mp: MatchedPairData, max_witnesses=MAX_WITNESSES):
    """Both algebras left-Alia, both actions representations, both compatibility laws."""
    parts = {
        "A-left-alia": check_alia(mp.A, max_witnesses=max_witnesses),
        "B-left-alia": check_alia(mp.B, max_witnesses=max_witnesses),
        "rep-A-on-B": check_representation(mp.rep_A(), max_witnesses),
        "rep-B-on-A": check_representation(mp.rep_B(), max_witnesses),
        "matched-pair-1": _compatibility(mp, "matched-pair-1", max_witnesses),
        "matched-pair-2": _compatibility(mp.swapped(), "matched-pair-2", max_witnesses),
    }
    return combine("matched-pair", parts, max_witnesses)
