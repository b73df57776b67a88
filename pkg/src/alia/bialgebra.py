"""Left-Alia coalgebras, bialgebras and Manin triples on A + A*.

A comultiplication is stored as ``delta[i][j][k]``, the coefficient of
``e_j (x) e_k`` in ``delta(e_i)``.  Doubles put A on indices ``0..n-1`` and A*
on ``n..2n-1`` (dual basis), so the canonical pairing form is the block matrix
``[[0, I], [I, 0]]``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import linalg as la
from .algebra import AlgebraSC, NotLeftAliaError, _require_comm_assoc, check_alia
from .quadratic import BilinearForm, FormPreconditionError, check_quadratic, quadratic_from_frobenius
from .report import MAX_WITNESSES, Collector, InternalConsistencyError, combine
from .representations import MatchedPairData, matched_pair_sum
from .scalars import RATIONAL, FieldSpec

__all__ = [
    "Comultiplication",
    "ManinTripleData",
    "canonical_pairing",
    "check_bialgebra",
    "check_coalgebra",
    "check_manin_triple",
    "coadjoint_matched_pair",
    "coalgebra_composite",
    "coregular_double",
    "delta_from_dual_algebra",
    "double_construct",
    "dual_algebra_from_delta",
    "frobenius_double",
]


@dataclass(frozen=True)
class Comultiplication:
    field: FieldSpec
    dim: int
    delta: tuple

    def __post_init__(self):
        n = self.dim
        d = self.delta
        if len(d) != n or any(len(p) != n or any(len(r) != n for r in p) for p in d):
            raise ValueError(f"comultiplication must have shape {n}x{n}x{n}")
        object.__setattr__(
            self, "delta", tuple(tuple(tuple(self.field.coerce(x) for x in r) for r in p) for p in d)
        )

    @classmethod
    def zero(cls, dim, field=RATIONAL):
        return cls(field, dim, [[[0] * dim for _ in range(dim)] for _ in range(dim)])

    @classmethod
    def from_terms(cls, dim, terms, field=RATIONAL):
        """``terms`` maps i to ``{(j, k): c}`` (0-based)."""
        d = [[[0] * dim for _ in range(dim)] for _ in range(dim)]
        for i, tj in terms.items():
            for (j, k), c in tj.items():
                d[i][j][k] = c
        return cls(field, dim, d)

    def of_vector(self, x):
        """delta(x) as an n x n coefficient matrix."""
        n = self.dim
        out = [[self.field.zero] * n for _ in range(n)]
        for i, xi in enumerate(x):
            if xi == 0:
                continue
            for j in range(n):
                for k in range(n):
                    c = self.delta[i][j][k]
                    if c != 0:
                        out[j][k] = out[j][k] + xi * c
        return tuple(tuple(r) for r in out)


def dual_algebra_from_delta(delta: Comultiplication) -> AlgebraSC:
    """[e_j*, e_k*] = sum_i delta[i][j][k] e_i*."""
    n = delta.dim
    D = delta.delta
    return AlgebraSC(
        delta.field, n, [[[D[i][j][k] for i in range(n)] for k in range(n)] for j in range(n)]
    )


def delta_from_dual_algebra(A_star: AlgebraSC) -> Comultiplication:
    """Inverse of :func:`dual_algebra_from_delta`."""
    n = A_star.dim
    C = A_star.constants
    return Comultiplication(
        A_star.field, n, [[[C[j][k][i] for k in range(n)] for j in range(n)] for i in range(n)]
    )


def coalgebra_composite(delta: Comultiplication, i: int):
    """(id + xi + xi^2)(tau (x) id - id)(delta (x) id) delta (e_i) as an n^3 tensor."""
    n = delta.dim
    D = delta.delta
    zero = delta.field.zero
    # T[a][b][c]: coefficient of e_a (x) e_b (x) e_c in (delta (x) id) delta(e_i)
    T = [[[zero] * n for _ in range(n)] for _ in range(n)]
    for j, c in itertools.product(range(n), repeat=2):
        w = D[i][j][c]
        if w == 0:
            continue
        for a, b in itertools.product(range(n), repeat=2):
            v = D[j][a][b]
            if v != 0:
                T[a][b][c] = T[a][b][c] + w * v
    # tau (x) id swaps the first two factors
    U = [[[T[b][a][c] - T[a][b][c] for c in range(n)] for b in range(n)] for a in range(n)]
    # xi(x (x) y (x) z) = y (x) z (x) x moves the coefficient at (r, p, q) to (p, q, r)
    return tuple(
        tuple(tuple(U[p][q][r] + U[r][p][q] + U[q][r][p] for r in range(n)) for q in range(n))
        for p in range(n)
    )


def check_coalgebra(delta: Comultiplication, max_witnesses=MAX_WITNESSES):
    """Left-Alia coalgebra test; cross-checked against the dual algebra."""
    n = delta.dim
    col = Collector("eq-coalgebra", max_witnesses)
    for i in range(n):
        W = coalgebra_composite(delta, i)
        col.check((i,), [x for plane in W for row in plane for x in row])
    rep = col.done()
    dual = check_alia(dual_algebra_from_delta(delta), max_witnesses=max_witnesses)
    if rep.passed != dual.passed:
        raise InternalConsistencyError("coalgebra composite and dual left-Alia test disagree")
    rep.parts["dual-left-alia"] = dual
    return rep


def _bialgebra_identity(A: AlgebraSC, delta: Comultiplication, max_witnesses):
    """(tau - id)(delta([x,y]-[y,x]) + (R(x) (x) id)delta(y) - (R(y) (x) id)delta(x)) = 0."""
    n = A.dim
    C = A.constants
    col = Collector("eq-bialg", max_witnesses)
    deltas = [delta.of_vector(A.basis(i)) for i in range(n)]
    Rs = [A.right_mult(i) for i in range(n)]
    for i, j in itertools.product(range(n), repeat=2):
        V = delta.of_vector(la.vsub(C[i][j], C[j][i]))
        # (M (x) id) t has coefficient matrix M t
        V = la.add(V, la.matmul(Rs[i], deltas[j]))
        V = la.sub(V, la.matmul(Rs[j], deltas[i]))
        res = la.sub(la.transpose(V), V) if n else ()
        col.check((i, j), [x for row in res for x in row])
    return col.done()


def check_bialgebra(A: AlgebraSC, delta: Comultiplication, max_witnesses=MAX_WITNESSES):
    if A.dim != delta.dim or A.field != delta.field:
        raise ValueError("algebra and comultiplication live on different spaces")
    parts = {
        "left-alia": check_alia(A, max_witnesses=max_witnesses),
        "coalgebra": check_coalgebra(delta, max_witnesses),
        "eq-bialg": _bialgebra_identity(A, delta, max_witnesses),
    }
    return combine("bialgebra", parts, max_witnesses)


# ---------------------------------------------------------------------------


def canonical_pairing(n, field=RATIONAL) -> BilinearForm:
    """B_d(x + a*, y + b*) = <x, b*> + <a*, y>."""
    g = [[0] * (2 * n) for _ in range(2 * n)]
    for i in range(n):
        g[i][n + i] = 1
        g[n + i][i] = 1
    return BilinearForm(field, 2 * n, g)


@dataclass(frozen=True)
class ManinTripleData:
    double: AlgebraSC
    a_range: tuple  # half-open (start, stop), 0-based
    astar_range: tuple
    form: BilinearForm

    def __post_init__(self):
        if self.double.dim % 2:
            raise ValueError("a double has even dimension")
        if self.form.dim != self.double.dim:
            raise ValueError("form and double dimensions differ")

    @property
    def n(self):
        return self.double.dim // 2


def _coadjoint(A: AlgebraSC):
    """(L*, L* - R*) of A as matrix families on A*."""
    n = A.dim
    ls, ms = [], []
    for i in range(n):
        lt = la.transpose(A.left_mult(i)) if n else ()
        rt = la.transpose(A.right_mult(i)) if n else ()
        ls.append(tuple(tuple(-x for x in row) for row in lt))
        ms.append(la.sub(rt, lt))
    return ls, ms


def coadjoint_matched_pair(A: AlgebraSC, delta: Comultiplication) -> MatchedPairData:
    """(A, A*, L*_A, L*_A - R*_A, L*_A*, L*_A* - R*_A*)."""
    A_star = dual_algebra_from_delta(delta)
    lA, rA = _coadjoint(A)
    lB, rB = _coadjoint(A_star)
    return MatchedPairData(A, A_star, lA, rA, lB, rB)


def double_construct(A: AlgebraSC, delta: Comultiplication) -> ManinTripleData:
    """The bracket on A + A* built from both coadjoint actions, with B_d."""
    if A.dim != delta.dim or A.field != delta.field:
        raise ValueError("algebra and comultiplication live on different spaces")
    if not check_alia(A).passed:
        raise NotLeftAliaError("double_construct needs a left-Alia algebra")
    if not check_coalgebra(delta).passed:
        raise NotLeftAliaError("double_construct needs a left-Alia coalgebra")
    n = A.dim
    d = matched_pair_sum(coadjoint_matched_pair(A, delta))
    return ManinTripleData(d, (0, n), (n, 2 * n), canonical_pairing(n, A.field))


def _closed(D: AlgebraSC, rng, name, max_witnesses):
    lo, hi = rng
    col = Collector(name, max_witnesses)
    for i, j in itertools.product(range(lo, hi), repeat=2):
        v = D.constants[i][j]
        col.check((i, j), [v[t] for t in range(D.dim) if not lo <= t < hi])
    return col.done()


def check_manin_triple(mt: ManinTripleData, max_witnesses=MAX_WITNESSES):
    D = mt.double
    parts = {
        "left-alia": check_alia(D, max_witnesses=max_witnesses),
        "A-subalgebra": _closed(D, mt.a_range, "A-subalgebra", max_witnesses),
        "Astar-subalgebra": _closed(D, mt.astar_range, "Astar-subalgebra", max_witnesses),
        "quadratic": check_quadratic(D, mt.form, max_witnesses),
    }
    return combine("manin-triple", parts, max_witnesses)


# ---------------------------------------------------------------------------


def coregular_double(assoc: AlgebraSC) -> AlgebraSC:
    """A + A* with (x + a*)(y + b*) = xy + x.b* + y.a*, where <x.b*, y> = <b*, xy>.

    For commutative associative A this is the trivial double construction of a
    commutative Frobenius algebra (A* has the zero product).
    """
    _require_comm_assoc(assoc)
    n = assoc.dim
    zero = assoc.field.zero
    C = assoc.constants

    def product(p, q):
        out = [zero] * (2 * n)
        if p < n and q < n:
            out[:n] = C[p][q]
        elif p < n or q < n:
            x, b = (p, q - n) if p < n else (q, p - n)
            # x . e_b* = sum_t C[x][t][b] e_t*
            for t in range(n):
                out[n + t] = C[x][t][b]
        return out

    return AlgebraSC.from_product(2 * n, product, assoc.field)


def frobenius_double(assoc_double: AlgebraSC, P, Qstar) -> ManinTripleData:
    """Left-Alia double from a commutative Frobenius double and maps P on A, Q* on A*.

    [X, Y] = X . f(Y) - f-hat(X . Y) with f = P + Q*; f-hat = Q + P* with respect to B_d.
    """
    if assoc_double.dim % 2:
        raise ValueError("a double has even dimension")
    n = assoc_double.dim // 2
    fld = assoc_double.field
    for name, m in (("P", P), ("Qstar", Qstar)):
        if len(m) != n or any(len(r) != n for r in m):
            raise ValueError(f"{name} must be {n}x{n}")
    form = canonical_pairing(n, fld)
    for rng, name in (((0, n), "A"), ((n, 2 * n), "A*")):
        if not _closed(assoc_double, rng, name, 1).passed:
            raise FormPreconditionError(f"{name} is not a subalgebra of the associative double")
    f = [[0] * (2 * n) for _ in range(2 * n)]
    for i in range(n):
        for j in range(n):
            f[i][j] = P[i][j]
            f[n + i][n + j] = Qstar[i][j]
    bracket, _ = quadratic_from_frobenius(assoc_double, form, f)
    return ManinTripleData(bracket, (0, n), (n, 2 * n), form)
