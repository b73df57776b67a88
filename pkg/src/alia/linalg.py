"""Dense exact linear algebra over any field whose elements support + - * /.

Matrices are tuples of row tuples and act on column vectors:
``matvec(M, v)[i] = sum_j M[i][j] * v[j]``, so column ``j`` is the image of the
``j``-th basis vector.
"""

from __future__ import annotations

from fractions import Fraction

__all__ = [
    "SingularMatrixError",
    "add",
    "det",
    "identity",
    "inverse",
    "is_zero",
    "matmul",
    "matvec",
    "rank",
    "scale",
    "sub",
    "transpose",
    "zeros",
]


class SingularMatrixError(ArithmeticError):
    pass


def _exact(x):
    # plain ints would turn into floats under "/"
    return Fraction(x) if isinstance(x, int) else x


def zeros(rows, cols=None, zero=0):
    cols = rows if cols is None else cols
    return tuple(tuple(zero for _ in range(cols)) for _ in range(rows))


def identity(n, one=1, zero=0):
    return tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n))


def as_matrix(rows):
    return tuple(tuple(r) for r in rows)


def transpose(m):
    if not m:
        return ()
    return tuple(zip(*m))


def add(a, b):
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def sub(a, b):
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def scale(c, m):
    return tuple(tuple(c * x for x in row) for row in m)


def matmul(a, b):
    if not a:
        return ()
    bt = transpose(b)
    inner = len(b)
    out = []
    for row in a:
        out_row = []
        for col in bt:
            s = 0
            for k in range(inner):
                x = row[k]
                if x:
                    y = col[k]
                    if y:
                        s = s + x * y
            out_row.append(s)
        out.append(tuple(out_row))
    return tuple(out)


def matvec(m, v):
    out = []
    for row in m:
        s = 0
        for x, y in zip(row, v):
            if x and y:
                s = s + x * y
        out.append(s)
    return tuple(out)


def is_zero(m):
    return all(x == 0 for row in m for x in row)


def _echelon(m):
    """Row-reduce a copy of ``m``; returns (rows, rank, det_factor)."""
    rows = [[_exact(x) for x in r] for r in m]
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    r = 0
    sign = 1
    pivots_prod = 1
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if piv is None:
            continue
        if piv != r:
            rows[r], rows[piv] = rows[piv], rows[r]
            sign = -sign
        p = rows[r][c]
        pivots_prod = pivots_prod * p
        for i in range(r + 1, nrows):
            f = rows[i][c]
            if f != 0:
                f = f / p
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        r += 1
        if r == nrows:
            break
    return rows, r, sign * pivots_prod


def rank(m) -> int:
    if not m or not m[0]:
        return 0
    return _echelon(m)[1]


def det(m):
    """Exact determinant by Gaussian elimination."""
    n = len(m)
    if n == 0:
        return 1
    if any(len(row) != n for row in m):
        raise ValueError("determinant of a non-square matrix")
    _, r, d = _echelon(m)
    return d if r == n else 0 * m[0][0]


def inverse(m):
    """Gauss-Jordan inverse; raises :class:`SingularMatrixError`."""
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("inverse of a non-square matrix")
    aug = [
        [_exact(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
        for i, row in enumerate(m)
    ]
    for c in range(n):
        piv = next((i for i in range(c, n) if aug[i][c] != 0), None)
        if piv is None:
            raise SingularMatrixError("matrix is singular")
        aug[c], aug[piv] = aug[piv], aug[c]
        p = aug[c][c]
        aug[c] = [x / p for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    return tuple(tuple(row[n:]) for row in aug)


# vectors are plain tuples


def vadd(u, v):
    return tuple(x + y for x, y in zip(u, v))


def vsub(u, v):
    return tuple(x - y for x, y in zip(u, v))


def vscale(c, v):
    return tuple(c * x for x in v)


def unit(n, i, one=1, zero=0):
    return tuple(one if k == i else zero for k in range(n))
