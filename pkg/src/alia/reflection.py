"""Pseudo-reflections on V*, their twisted derivations, and the induced brackets.

A :class:`LinearAuto` acts on the coordinate functions: row ``i`` of its matrix
is the image of ``x_{i+1}``, and the action extends multiplicatively to S =
K[x1..xn].  For a pseudo-reflection R, ``f - R(f)`` is always divisible by the
linear form ``l_R`` and the quotient is the twisted derivation ``D_R(f)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from . import linalg as la
from .polynomial import MultiPoly
from .scalars import RATIONAL, FieldSpec

__all__ = [
    "DEFAULT_MAX_ORDER",
    "InconsistentReflectionError",
    "LinearAuto",
    "PseudoReflectionResult",
    "ReflectionData",
    "apply_auto",
    "dual_auto",
    "invariance_check",
    "is_pseudo_reflection",
    "poly_alia_bracket",
    "poly_lie_triple",
    "twisted_derivation",
]

DEFAULT_MAX_ORDER = 24


class InconsistentReflectionError(ArithmeticError):
    """f - R(f) was not divisible by l_R: the reflection data does not belong to R."""


@dataclass(frozen=True)
class LinearAuto:
    nvars: int
    matrix: tuple
    field: FieldSpec = RATIONAL
    order: int | None = None

    def __post_init__(self):
        n = self.nvars
        m = self.matrix
        if len(m) != n or any(len(r) != n for r in m):
            raise ValueError(f"matrix must be {n}x{n}")
        m = tuple(tuple(self.field.coerce(x) for x in r) for r in m)
        object.__setattr__(self, "matrix", m)
        if n and la.det(m) == 0:
            raise ValueError("a linear automorphism needs an invertible matrix")
        if self.order is not None and self.order < 1:
            raise ValueError("order hint must be positive")

    @classmethod
    def diagonal(cls, entries, field=RATIONAL):
        n = len(entries)
        return cls(n, [[entries[i] if i == j else 0 for j in range(n)] for i in range(n)], field)

    @classmethod
    def permutation(cls, perm, field=RATIONAL):
        """x_i -> x_{perm[i]} (0-based)."""
        n = len(perm)
        return cls(n, [[int(perm[i] == j) for j in range(n)] for i in range(n)], field)

    def images(self):
        return [MultiPoly.linear(row, self.field) for row in self.matrix]


class ReflectionData(NamedTuple):
    l_R: MultiPoly
    delta_R: tuple  # Delta_R(x_i) for i = 1..n
    order: int
    omega: object  # the eigenvalue != 1, det R


class PseudoReflectionResult(NamedTuple):
    is_reflection: bool
    data: ReflectionData | None
    reason: str


def apply_auto(R: LinearAuto, f: MultiPoly) -> MultiPoly:
    if f.nvars != R.nvars:
        raise ValueError(f"automorphism on {R.nvars} variables applied to a polynomial in {f.nvars}")
    return f.substitute(R.images())


def dual_auto(R: LinearAuto) -> LinearAuto:
    """The automorphism induced on the dual space, the inverse transpose."""
    if R.nvars == 0:
        return R
    return LinearAuto(R.nvars, la.transpose(la.inverse(R.matrix)), R.field, R.order)


def is_pseudo_reflection(R: LinearAuto, max_order: int = DEFAULT_MAX_ORDER) -> PseudoReflectionResult:
    """rank(I - R) = 1 and R^m = I for some m <= max_order."""
    n = R.nvars
    f = R.field
    one = la.identity(n, f.one, f.zero)
    N = la.sub(one, R.matrix)
    rk = la.rank(N)
    if rk != 1:
        return PseudoReflectionResult(False, None, f"rank(I - R) = {rk}, not 1")
    power = R.matrix
    order = None
    for m in range(1, max_order + 1):
        if power == one:
            order = m
            break
        power = la.matmul(power, R.matrix)
    if order is None:
        return PseudoReflectionResult(False, None, f"R^m != I for every m <= {max_order}")
    # the rows of I - R span Im(I - R) on V*; scale the first nonzero row to a leading 1
    row = next(r for r in N if any(x != 0 for x in r))
    j0 = next(j for j, x in enumerate(row) if x != 0)
    lead = row[j0]
    l_vec = tuple(x / lead for x in row)
    delta = tuple(r[j0] for r in N)
    data = ReflectionData(MultiPoly.linear(l_vec, f), delta, order, la.det(R.matrix))
    return PseudoReflectionResult(True, data, "")


def twisted_derivation(rd: ReflectionData, R: LinearAuto, f: MultiPoly) -> MultiPoly:
    """D_R(f) = (f - R(f)) / l_R, by exact division."""
    q, r = (f - apply_auto(R, f)).divmod(rd.l_R)
    if not r.is_zero():
        raise InconsistentReflectionError(f"f - R(f) is not divisible by l_R = {rd.l_R}")
    return q


def poly_alia_bracket(rd, R, f, g, variant="theorem"):
    """``theorem``: f D(g) - R(g) D(f).  ``intro``: D(f) g - R(f) D(g)."""
    Df = twisted_derivation(rd, R, f)
    Dg = twisted_derivation(rd, R, g)
    if variant == "theorem":
        return f * Dg - apply_auto(R, g) * Df
    if variant == "intro":
        return Df * g - apply_auto(R, f) * Dg
    raise ValueError(f"variant must be 'theorem' or 'intro', got {variant!r}")


def poly_lie_triple(rd, R, f, g, h, variant="theorem"):
    """1/2 [[f,g] - [g,f], h]."""
    def br(a, b):
        return poly_alia_bracket(rd, R, a, b, variant)

    return br(br(f, g) - br(g, f), h) * Fraction(1, 2)


def invariance_check(f: MultiPoly, generators) -> bool:
    for g in generators:
        if g.nvars != f.nvars:
            raise ValueError("generator and polynomial disagree on the number of variables")
    return all(apply_auto(g, f) == f for g in generators)
