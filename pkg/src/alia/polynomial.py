"""Sparse multivariate polynomials over an exact field, and their text form.

Terms are kept in a dict from exponent tuples to nonzero coefficients.  The
term order is graded lexicographic, used for printing and for division.

Grammar accepted by :func:`parse_poly` (whitespace is ignored)::

    poly   := sign? term (sign term)*
    sign   := '+' | '-'
    term   := factor ('*' factor)*
    factor := scalar | 'x' INT ('^' INT)?
    scalar := INT ('/' INT)? | '[' coefficients ';' INT ']'
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import RATIONAL, FieldSpec

__all__ = ["MultiPoly", "PolySyntaxError", "parse_poly"]

MAX_EXPONENT = 2**63 - 1


def _grlex(exp):
    return (sum(exp), exp)


class MultiPoly:
    """An immutable polynomial in ``x1..xn``."""

    __slots__ = ("nvars", "field", "_terms", "_hash")

    def __init__(self, nvars: int, terms=None, field: FieldSpec = RATIONAL):
        self.nvars = nvars
        self.field = field
        clean = {}
        for exp, c in (terms or {}).items():
            exp = tuple(exp)
            if len(exp) != nvars:
                raise ValueError(f"exponent {exp} does not have {nvars} entries")
            if any(e < 0 for e in exp):
                raise ValueError(f"negative exponent in {exp}")
            if any(e > MAX_EXPONENT for e in exp):
                raise OverflowError(f"exponent overflow in {exp}")
            c = field.coerce(c)
            if c != 0:
                clean[exp] = c
        self._terms = clean
        self._hash = None

    # -- constructors -------------------------------------------------------

    @classmethod
    def constant(cls, nvars, c, field=RATIONAL):
        return cls(nvars, {(0,) * nvars: c}, field)

    @classmethod
    def var(cls, nvars, i, field=RATIONAL):
        """The variable x_{i+1} (0-based ``i``)."""
        if not 0 <= i < nvars:
            raise IndexError(f"variable index {i + 1} out of range 1..{nvars}")
        exp = [0] * nvars
        exp[i] = 1
        return cls(nvars, {tuple(exp): 1}, field)

    @classmethod
    def linear(cls, coeffs, field=RATIONAL):
        n = len(coeffs)
        return cls(n, {tuple(int(k == i) for k in range(n)): c for i, c in enumerate(coeffs)}, field)

    # -- access -------------------------------------------------------------

    @property
    def terms(self):
        """(exponent, coefficient) pairs in descending grlex order."""
        return sorted(self._terms.items(), key=lambda kv: _grlex(kv[0]), reverse=True)

    def coeff(self, exp):
        return self._terms.get(tuple(exp), self.field.zero)

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def degree(self):
        return max((sum(e) for e in self._terms), default=-1)

    def is_homogeneous(self, d=None):
        degs = {sum(e) for e in self._terms}
        if d is not None:
            return degs <= {d}
        return len(degs) <= 1

    def leading(self):
        exp = max(self._terms, key=_grlex)
        return exp, self._terms[exp]

    # -- arithmetic ---------------------------------------------------------

    def _same(self, other):
        if isinstance(other, MultiPoly):
            if other.nvars != self.nvars:
                raise ValueError(f"polynomials in {self.nvars} and {other.nvars} variables")
            return other
        return MultiPoly.constant(self.nvars, other, self.field)

    def __add__(self, other):
        o = self._same(other)
        t = dict(self._terms)
        for e, c in o._terms.items():
            t[e] = t.get(e, 0) + c
        return MultiPoly(self.nvars, t, self.field)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.nvars, {e: -c for e, c in self._terms.items()}, self.field)

    def __sub__(self, other):
        return self + (-self._same(other))

    def __rsub__(self, other):
        return self._same(other) - self

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            c = self.field.coerce(other)
            return MultiPoly(self.nvars, {e: c * v for e, v in self._terms.items()}, self.field)
        o = self._same(other)
        t = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in o._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                t[e] = t.get(e, 0) + c1 * c2
        return MultiPoly(self.nvars, t, self.field)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        out = MultiPoly.constant(self.nvars, 1, self.field)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def divmod(self, g: "MultiPoly"):
        """Division by one polynomial in grlex order: ``self = q*g + r``.

        ``r`` is zero exactly when ``g`` divides ``self``.
        """
        g = self._same(g)
        if g.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        lexp, lc = g.leading()
        p = dict(self._terms)
        q, r = {}, {}
        while p:
            exp = max(p, key=_grlex)
            c = p[exp]
            if all(a >= b for a, b in zip(exp, lexp)):
                m = tuple(a - b for a, b in zip(exp, lexp))
                f = c / lc
                q[m] = q.get(m, 0) + f
                for ge, gc in g._terms.items():
                    e = tuple(a + b for a, b in zip(m, ge))
                    v = p.get(e, 0) - f * gc
                    if v == 0:
                        p.pop(e, None)
                    else:
                        p[e] = v
            else:
                r[exp] = c
                del p[exp]
        return MultiPoly(self.nvars, q, self.field), MultiPoly(self.nvars, r, self.field)

    def substitute(self, images):
        """Ring homomorphism sending x_i to ``images[i]``."""
        if len(images) != self.nvars:
            raise ValueError("need one image per variable")
        one = MultiPoly.constant(self.nvars, 1, self.field)
        powers = [{0: one} for _ in images]

        def pw(i, k):
            cache = powers[i]
            if k not in cache:
                cache[k] = pw(i, k - 1) * images[i]
            return cache[k]

        out = MultiPoly(self.nvars, {}, self.field)
        for exp, c in self._terms.items():
            term = one * c
            for i, k in enumerate(exp):
                if k:
                    term = term * pw(i, k)
            out = out + term
        return out

    # -- comparison and text ------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.nvars == other.nvars and self._terms == other._terms
        try:
            return self == MultiPoly.constant(self.nvars, other, self.field)
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        return f"MultiPoly({self.nvars}, {str(self)!r})"

    def __str__(self):
        if not self._terms:
            return "0"
        pieces = []
        for exp, c in self.terms:
            mono = "*".join(
                f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}" for i, e in enumerate(exp) if e
            )
            neg = False
            if isinstance(c, Fraction) and c < 0:
                neg, c = True, -c
            if not mono:
                body = str(c)
            elif c == 1:
                body = mono
            else:
                body = f"{c}*{mono}"
            if not pieces:
                pieces.append("-" + body if neg else body)
            else:
                pieces.append(("- " if neg else "+ ") + body)
        return " ".join(pieces)


# ---------------------------------------------------------------------------


class PolySyntaxError(ValueError):
    def __init__(self, message, pos, src):
        super().__init__(f"{message} at position {pos}: {src!r}")
        self.pos = pos
        self.src = src


class _Parser:
    def __init__(self, src, nvars, field):
        self.src = src
        self.pos = 0
        self.nvars = nvars
        self.field = field

    def error(self, msg, pos=None):
        raise PolySyntaxError(msg, self.pos if pos is None else pos, self.src)

    def skip(self):
        while self.pos < len(self.src) and self.src[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip()
        return self.src[self.pos] if self.pos < len(self.src) else ""

    def integer(self):
        self.skip()
        start = self.pos
        while self.pos < len(self.src) and self.src[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected an integer")
        return int(self.src[start : self.pos])

    def poly(self):
        total = MultiPoly(self.nvars, {}, self.field)
        sign = 1
        if self.peek() in "+-" and self.peek():
            sign = -1 if self.src[self.pos] == "-" else 1
            self.pos += 1
        total = total + self.term() * sign
        while True:
            ch = self.peek()
            if ch in ("+", "-"):
                self.pos += 1
                t = self.term()
                total = total + t if ch == "+" else total - t
            elif ch == "":
                return total
            else:
                self.error(f"unexpected {ch!r}")

    def term(self):
        value = self.factor()
        while self.peek() == "*":
            self.pos += 1
            value = value * self.factor()
        return value

    def factor(self):
        ch = self.peek()
        start = self.pos
        if ch == "x":
            self.pos += 1
            idx = self.integer()
            if not 1 <= idx <= self.nvars:
                self.error(f"variable x{idx} out of range 1..{self.nvars}", start)
            exp = 1
            if self.peek() == "^":
                self.pos += 1
                exp = self.integer()
            if exp > MAX_EXPONENT:
                self.error("exponent overflow", start)
            return MultiPoly.var(self.nvars, idx - 1, self.field) ** exp
        if ch == "[":
            end = self.src.find("]", self.pos)
            if end < 0:
                self.error("unterminated cyclotomic scalar")
            text = self.src[self.pos : end + 1]
            self.pos = end + 1
            try:
                return MultiPoly.constant(self.nvars, self.field.parse(text), self.field)
            except ValueError as exc:
                self.error(str(exc), start)
        if ch.isdigit():
            num = self.integer()
            den = 1
            if self.peek() == "/":
                self.pos += 1
                den = self.integer()
                if den == 0:
                    self.error("zero denominator", start)
            return MultiPoly.constant(self.nvars, Fraction(num, den), self.field)
        self.error("expected a coefficient or a variable" if ch else "unexpected end of input")


def parse_poly(src: str, nvars: int, field: FieldSpec = RATIONAL) -> MultiPoly:
    return _Parser(src, nvars, field).poly()
