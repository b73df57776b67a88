"""Finite-dimensional algebras given by structure constants.

``AlgebraSC.constants[i][j][t]`` is the coefficient of ``e_t`` in ``[e_i, e_j]``.
Everything here is brute force over basis tuples with exact scalars.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from . import linalg as la
from .report import MAX_WITNESSES, Collector, InternalConsistencyError, combine
from .scalars import RATIONAL, FieldSpec

__all__ = [
    "AlgebraFlags",
    "AlgebraSC",
    "NotLeftAliaError",
    "TrilinearSC",
    "bracket_eval",
    "check_alia",
    "check_commutative_associative",
    "classify_algebra",
    "lie_triple_from_alia",
    "special_left_alia",
    "symmetric_jacobi_contraction",
    "symmetric_jacobi_direct",
]


class NotLeftAliaError(ValueError):
    pass


def _tensor(field, data, depth):
    if depth == 0:
        return field.coerce(data)
    return tuple(_tensor(field, d, depth - 1) for d in data)


@dataclass(frozen=True)
class AlgebraSC:
    field: FieldSpec
    dim: int
    constants: tuple

    def __post_init__(self):
        n = self.dim
        if n < 0:
            raise ValueError("dimension must be nonnegative")
        c = self.constants
        if len(c) != n or any(len(row) != n or any(len(v) != n for v in row) for row in c):
            raise ValueError(f"structure constants must have shape {n}x{n}x{n}")
        object.__setattr__(self, "constants", _tensor(self.field, c, 3))

    @classmethod
    def zero(cls, dim, field=RATIONAL):
        return cls(field, dim, [[[0] * dim for _ in range(dim)] for _ in range(dim)])

    @classmethod
    def from_table(cls, dim, table, field=RATIONAL):
        """Build from ``{(i, j): {t: c}}`` with 0-based indices; missing entries are 0."""
        c = [[[0] * dim for _ in range(dim)] for _ in range(dim)]
        for (i, j), coeffs in table.items():
            for t, v in coeffs.items():
                c[i][j][t] = v
        return cls(field, dim, c)

    @classmethod
    def from_product(cls, dim, product, field=RATIONAL):
        """Build from a function ``product(i, j) -> vector``."""
        return cls(field, dim, [[product(i, j) for j in range(dim)] for i in range(dim)])

    # -- views --------------------------------------------------------------

    def basis(self, i):
        return la.unit(self.dim, i, self.field.one, self.field.zero)

    def zero_vector(self):
        return (self.field.zero,) * self.dim

    def bracket(self, x, y):
        return bracket_eval(self, x, y)

    def left_mult(self, i):
        """Matrix of L(e_i): y -> [e_i, y]."""
        n = self.dim
        c = self.constants
        return tuple(tuple(c[i][j][t] for j in range(n)) for t in range(n))

    def right_mult(self, j):
        """Matrix of R(e_j): x -> [x, e_j]."""
        n = self.dim
        c = self.constants
        return tuple(tuple(c[i][j][t] for i in range(n)) for t in range(n))

    def opposite(self):
        n = self.dim
        c = self.constants
        return AlgebraSC(self.field, n, [[c[j][i] for j in range(n)] for i in range(n)])

    def is_symmetric(self):
        c = self.constants
        return all(c[i][j] == c[j][i] for i in range(self.dim) for j in range(i + 1, self.dim))

    def is_skew(self):
        c = self.constants
        n = self.dim
        return all(
            c[i][j][t] == -c[j][i][t] for i in range(n) for j in range(i, n) for t in range(n)
        )

    def is_zero(self):
        return all(x == 0 for plane in self.constants for row in plane for x in row)


def bracket_eval(A: AlgebraSC, x, y):
    """Bilinear extension of the structure constants to vectors."""
    n = A.dim
    if len(x) != n or len(y) != n:
        raise ValueError(f"vectors must have length {n}")
    out = [A.field.zero] * n
    c = A.constants
    for i in range(n):
        xi = x[i]
        if xi == 0:
            continue
        for j in range(n):
            yj = y[j]
            if yj == 0:
                continue
            w = xi * yj
            for t, ct in enumerate(c[i][j]):
                if ct != 0:
                    out[t] = out[t] + w * ct
    return tuple(out)


# ---------------------------------------------------------------------------
# symmetric Jacobi identity, two independent routes


def symmetric_jacobi_direct(A: AlgebraSC, max_witnesses=MAX_WITNESSES):
    """Evaluate both sides of the symmetric Jacobi identity on every basis triple."""
    col = Collector("symmetric-jacobi", max_witnesses)
    e = [A.basis(i) for i in range(A.dim)]

    def bb(x, y, z):
        return bracket_eval(A, bracket_eval(A, x, y), z)

    for i, j, l in itertools.product(range(A.dim), repeat=3):
        x, y, z = e[i], e[j], e[l]
        lhs = la.vadd(la.vadd(bb(x, y, z), bb(y, z, x)), bb(z, x, y))
        rhs = la.vadd(la.vadd(bb(y, x, z), bb(z, y, x)), bb(x, z, y))
        col.check((i, j, l), la.vsub(lhs, rhs))
    return col.done()


def symmetric_jacobi_contraction(A: AlgebraSC, max_witnesses=MAX_WITNESSES):
    """Index contraction of the structure constants, one residual per output index m."""
    col = Collector("structure-constants", max_witnesses)
    n = A.dim
    C = A.constants
    zero = A.field.zero
    for i, j, l in itertools.product(range(n), repeat=3):
        res = []
        for m in range(n):
            s = zero
            for k in range(n):
                s = (
                    s
                    + (C[i][j][k] - C[j][i][k]) * C[k][l][m]
                    + (C[j][l][k] - C[l][j][k]) * C[k][i][m]
                    + (C[l][i][k] - C[i][l][k]) * C[k][j][m]
                )
            res.append(s)
        col.check((i, j, l), res)
    return col.done()


def check_alia(A: AlgebraSC, side="left", max_witnesses=MAX_WITNESSES):
    """Left-Alia (or right-Alia) test; both routes must return the same verdicts."""
    if side == "right":
        rep = check_alia(A.opposite(), "left", max_witnesses)
        rep.identity = "right-alia"
        return rep
    if side != "left":
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    everything = max(1, A.dim**3)
    direct = symmetric_jacobi_direct(A, everything)
    contracted = symmetric_jacobi_contraction(A, everything)
    # the contraction is the coefficient form of the same residual, instance by instance
    if [(v.index, v.residual) for v in direct.violations] != [
        (v.index, v.residual) for v in contracted.violations
    ]:
        raise InternalConsistencyError(
            "structure-constant contraction and direct symmetric Jacobi disagree"
        )
    del direct.violations[max_witnesses:]
    del contracted.violations[max_witnesses:]
    direct.parts["structure-constants"] = contracted
    return direct


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AlgebraFlags:
    is_left_alia: bool
    is_right_alia: bool
    is_skew: bool
    is_symmetric: bool
    is_lie: bool
    is_anti_pre_lie: bool

    def as_dict(self):
        return dict(self.__dict__)


def _jacobi(A: AlgebraSC):
    e = [A.basis(i) for i in range(A.dim)]
    for i, j, k in itertools.product(range(A.dim), repeat=3):
        x, y, z = e[i], e[j], e[k]
        s = la.vadd(
            la.vadd(A.bracket(A.bracket(x, y), z), A.bracket(A.bracket(y, z), x)),
            A.bracket(A.bracket(z, x), y),
        )
        if any(s):
            return False
    return True


def _anti_pre_lie_identities(A: AlgebraSC):
    """Both defining identities of an anti-pre-Lie algebra, product = bracket."""
    e = [A.basis(i) for i in range(A.dim)]
    p = A.bracket

    def comm(x, y):
        return la.vsub(p(x, y), p(y, x))

    for x, y, z in itertools.product(e, repeat=3):
        first = la.vsub(la.vsub(p(x, p(y, z)), p(y, p(x, z))), p(comm(y, x), z))
        if any(first):
            return False
        second = la.vadd(la.vadd(p(comm(x, y), z), p(comm(y, z), x)), p(comm(z, x), y))
        if any(second):
            return False
    return True


def _anti_pre_lie_extra(A: AlgebraSC):
    """[x,[y,z]] - [y,[x,z]] = [[y,x],z] - [[x,y],z]; sufficient on top of left-Alia."""
    e = [A.basis(i) for i in range(A.dim)]
    p = A.bracket
    for x, y, z in itertools.product(e, repeat=3):
        lhs = la.vsub(p(x, p(y, z)), p(y, p(x, z)))
        rhs = la.vsub(p(p(y, x), z), p(p(x, y), z))
        if lhs != rhs:
            return False
    return True


def classify_algebra(A: AlgebraSC) -> AlgebraFlags:
    left = check_alia(A, "left").passed
    right = check_alia(A, "right").passed
    skew = A.is_skew()
    sym = A.is_symmetric()
    lie = skew and _jacobi(A)
    apl = _anti_pre_lie_identities(A)
    if left and apl != _anti_pre_lie_extra(A):
        raise InternalConsistencyError("anti-pre-Lie criteria disagree on a left-Alia algebra")
    return AlgebraFlags(left, right, skew, sym, lie, apl)


# ---------------------------------------------------------------------------


def check_commutative_associative(assoc: AlgebraSC, max_witnesses=MAX_WITNESSES):
    n = assoc.dim
    e = [assoc.basis(i) for i in range(n)]
    comm = Collector("commutative", max_witnesses)
    for i, j in itertools.product(range(n), repeat=2):
        comm.check((i, j), la.vsub(assoc.constants[i][j], assoc.constants[j][i]))
    asc = Collector("associative", max_witnesses)
    p = assoc.bracket
    for i, j, k in itertools.product(range(n), repeat=3):
        asc.check((i, j, k), la.vsub(p(p(e[i], e[j]), e[k]), p(e[i], p(e[j], e[k]))))
    return combine(
        "commutative-associative",
        {"commutative": comm.done(), "associative": asc.done()},
        max_witnesses,
    )


def _require_comm_assoc(assoc):
    rep = check_commutative_associative(assoc)
    if not rep.passed:
        failed = [k for k, p in rep.parts.items() if not p.passed]
        raise ValueError(f"input product is not {' and '.join(failed)}")


def _square(m, n, name):
    if len(m) != n or any(len(r) != n for r in m):
        raise ValueError(f"{name} must be {n}x{n}")


def special_left_alia(assoc: AlgebraSC, f, g) -> AlgebraSC:
    """[x, y] = x . f(y) + g(x . y) on a commutative associative algebra."""
    n = assoc.dim
    _square(f, n, "f")
    _square(g, n, "g")
    _require_comm_assoc(assoc)
    fld = assoc.field
    f = _tensor(fld, f, 2)
    g = _tensor(fld, g, 2)
    fcols = la.transpose(f) if n else ()

    def product(i, j):
        x = assoc.basis(i)
        return la.vadd(assoc.bracket(x, fcols[j]), la.matvec(g, assoc.constants[i][j]))

    return AlgebraSC.from_product(n, product, fld)


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TrilinearSC:
    field: FieldSpec
    dim: int
    constants: tuple  # constants[i][j][k][t]

    def __post_init__(self):
        n = self.dim
        c = self.constants
        ok = len(c) == n and all(
            len(a) == n and all(len(b) == n and all(len(v) == n for v in b) for b in a) for a in c
        )
        if not ok:
            raise ValueError(f"trilinear constants must have shape {n}^4")
        object.__setattr__(self, "constants", _tensor(self.field, c, 4))

    def evaluate(self, x, y, z):
        n = self.dim
        out = [self.field.zero] * n
        c = self.constants
        for i in range(n):
            if x[i] == 0:
                continue
            for j in range(n):
                if y[j] == 0:
                    continue
                xy = x[i] * y[j]
                for k in range(n):
                    if z[k] == 0:
                        continue
                    w = xy * z[k]
                    for t, ct in enumerate(c[i][j][k]):
                        if ct != 0:
                            out[t] = out[t] + w * ct
        return tuple(out)


def check_lie_triple_system(T: TrilinearSC, max_witnesses=MAX_WITNESSES):
    n = T.dim
    e = [la.unit(n, i, T.field.one, T.field.zero) for i in range(n)]
    ev = T.evaluate
    alt = Collector("lts-alternating", max_witnesses)
    for i in range(n):
        for j in range(i, n):
            for k in range(n):
                # [x,x,y] = 0 for all x  <=>  [e_i,e_j,e_k] + [e_j,e_i,e_k] = 0 and [e_i,e_i,e_k] = 0
                r = ev(e[i], e[i], e[k]) if i == j else la.vadd(ev(e[i], e[j], e[k]), ev(e[j], e[i], e[k]))
                alt.check((i, j, k), r)
    cyc = Collector("lts-cyclic", max_witnesses)
    for i, j, k in itertools.product(range(n), repeat=3):
        cyc.check(
            (i, j, k),
            la.vadd(la.vadd(ev(e[i], e[j], e[k]), ev(e[j], e[k], e[i])), ev(e[k], e[i], e[j])),
        )
    fj = Collector("lts-fundamental", max_witnesses)
    inner = {}
    for i, j, k in itertools.product(range(n), repeat=3):
        inner[i, j, k] = ev(e[i], e[j], e[k])
    for a, b, x, y, z in itertools.product(range(n), repeat=5):
        lhs = ev(e[a], e[b], inner[x, y, z])
        rhs = la.vadd(
            la.vadd(ev(inner[a, b, x], e[y], e[z]), ev(e[x], inner[a, b, y], e[z])),
            ev(e[x], e[y], inner[a, b, z]),
        )
        fj.check((a, b, x, y, z), la.vsub(lhs, rhs))
    return combine(
        "lie-triple-system",
        {"skew-symm": alt.done(), "cyclic": cyc.done(), "fundamental": fj.done()},
        max_witnesses,
    )


def lie_triple_from_alia(A: AlgebraSC, variant="alia", max_witnesses=MAX_WITNESSES):
    """Trilinear map [[x,y]-[y,x], z] (``alia``) or half of it (``half_bracket``)."""
    if variant not in ("alia", "half_bracket"):
        raise ValueError(f"unknown variant {variant!r}")
    if not check_alia(A).passed:
        raise NotLeftAliaError("lie_triple_from_alia needs a left-Alia algebra")
    n = A.dim
    w = Fraction(1, 2) if variant == "half_bracket" else 1
    c = A.constants
    consts = [
        [
            [la.vscale(w, A.bracket(la.vsub(c[i][j], c[j][i]), A.basis(k))) for k in range(n)]
            for j in range(n)
        ]
        for i in range(n)
    ]
    T = TrilinearSC(A.field, n, consts)
    rep = check_lie_triple_system(T, max_witnesses)
    if not (rep.parts["skew-symm"].passed and rep.parts["cyclic"].passed):
        raise InternalConsistencyError("left-Alia input produced a non-alternating or non-cyclic triple")
    return T, rep
