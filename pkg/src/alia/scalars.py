"""Exact ground fields: the rationals and cyclotomic fields Q(zeta_m).

Rationals are plain :class:`fractions.Fraction` values.  Elements of Q(zeta_m)
are :class:`Cyclotomic` residues of Q[t] modulo the m-th cyclotomic polynomial,
so equality is decided on a canonical coefficient vector.  Python ints and
Fractions embed into every cyclotomic field, which lets the rest of the package
write arithmetic with ``0`` and ``1`` literals regardless of the field.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Rational

__all__ = [
    "Cyclotomic",
    "FieldSpec",
    "MixedFieldError",
    "RATIONAL",
    "cyclotomic_polynomial",
    "primitive_root",
]


class MixedFieldError(ValueError):
    """Raised when elements of two different cyclotomic fields meet."""


# ---------------------------------------------------------------------------
# dense univariate helpers, coefficient lists lowest degree first


def _trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _trim(out)


def _poly_divmod(a, b):
    """Long division in Q[t]; ``b`` must be nonzero."""
    a = _trim(a)
    b = _trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if len(a) < len(b):
        return [], a
    lead = Fraction(b[-1])
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    r = [Fraction(x) for x in a]
    for k in range(len(a) - len(b), -1, -1):
        c = r[k + len(b) - 1] / lead
        q[k] = c
        if c:
            for i, y in enumerate(b):
                r[k + i] -= c * y
    return _trim(q), _trim(r[: len(b) - 1])


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_m, lowest degree first.

    Computed by dividing t^m - 1 by Phi_d for every proper divisor d of m.
    """
    if m < 1:
        raise ValueError(f"cyclotomic order must be positive, got {m}")
    p = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            p, r = _poly_divmod(p, cyclotomic_polynomial(d))
            assert not r
    out = []
    for c in p:
        c = Fraction(c)
        assert c.denominator == 1
        out.append(int(c))
    return tuple(out)


# ---------------------------------------------------------------------------


class Cyclotomic:
    """An element of Q(zeta_m), stored as a residue modulo Phi_m.

    ``coeffs[k]`` is the coefficient of zeta^k; the vector always has length
    deg(Phi_m).  Instances are immutable.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs=()):
        phi = cyclotomic_polynomial(order)
        deg = len(phi) - 1
        vals = [Fraction(c) for c in coeffs]
        if len(vals) > deg:
            _, vals = _poly_divmod(vals, phi)
        vals = list(vals) + [Fraction(0)] * (deg - len(vals))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(vals))

    def __setattr__(self, name, value):
        raise AttributeError("Cyclotomic is immutable")

    # -- coercion ---------------------------------------------------------

    def _lift(self, other):
        if isinstance(other, Cyclotomic):
            if other.order != self.order:
                raise MixedFieldError(
                    f"cannot combine Q(zeta_{self.order}) with Q(zeta_{other.order})"
                )
            return other
        if isinstance(other, (int, Rational)):
            return Cyclotomic(self.order, [other])
        return None

    def rational_value(self):
        """The value as a Fraction if it lies in Q, else ``None``."""
        if all(c == 0 for c in self.coeffs[1:]):
            return self.coeffs[0]
        return None

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return Cyclotomic(self.order, [a + b for a, b in zip(self.coeffs, o.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.order, [-a for a in self.coeffs])

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return Cyclotomic(self.order, [a - b for a, b in zip(self.coeffs, o.coeffs)])

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return Cyclotomic(self.order, _poly_mul(self.coeffs, o.coeffs))

    __rmul__ = __mul__

    def inverse(self) -> "Cyclotomic":
        """Multiplicative inverse via the extended Euclidean algorithm mod Phi_m."""
        a = _trim(self.coeffs)
        if not a:
            raise ZeroDivisionError("inverse of zero in Q(zeta_%d)" % self.order)
        b = [Fraction(c) for c in cyclotomic_polynomial(self.order)]
        # invariant: s*self == a, t*self == b  (mod Phi_m)
        s, t = [Fraction(1)], []
        while len(b) > 0:
            q, r = _poly_divmod(a, b)
            a, b = b, r
            qt = _poly_mul(q, t)
            n = max(len(s), len(qt))
            s, t = t, _trim(
                [
                    (s[i] if i < len(s) else 0) - (qt[i] if i < len(qt) else 0)
                    for i in range(n)
                ]
            )
        # a is now a nonzero constant because Phi_m is irreducible
        assert len(a) == 1
        return Cyclotomic(self.order, [c / a[0] for c in s])

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        out = Cyclotomic(self.order, [1])
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- comparison -------------------------------------------------------

    def __eq__(self, other):
        try:
            o = self._lift(other)
        except MixedFieldError:
            return False
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        q = self.rational_value()
        if q is not None:
            return hash(q)
        return hash((self.order, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def __repr__(self):
        return f"Cyclotomic({self.order}, {[str(c) for c in self.coeffs]})"

    def __str__(self):
        return "[" + ",".join(str(c) for c in self.coeffs) + f";{self.order}]"


def primitive_root(m: int) -> Cyclotomic:
    """The canonical primitive m-th root of unity, the class of t in Q[t]/Phi_m."""
    if m < 2:
        raise ValueError(f"primitive_root needs m >= 2, got {m}")
    return Cyclotomic(m, [0, 1])


# ---------------------------------------------------------------------------

_CYCLO_RE = re.compile(r"^\[(?P<body>[^;\]]*);\s*(?P<m>\d+)\s*\]$")


@dataclass(frozen=True)
class FieldSpec:
    """Selects the ground field: ``rational`` or ``cyclotomic`` of a given order."""

    kind: str = "rational"
    order: int | None = None

    def __post_init__(self):
        if self.kind == "rational":
            if self.order is not None:
                raise ValueError("rational field takes no order")
        elif self.kind == "cyclotomic":
            if not isinstance(self.order, int) or self.order < 1:
                raise ValueError(f"cyclotomic field needs an order m >= 1, got {self.order!r}")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    @classmethod
    def from_text(cls, text: str) -> "FieldSpec":
        """Parse ``rational`` or ``cyclotomic:<m>``."""
        text = text.strip()
        if text == "rational":
            return cls()
        if text.startswith("cyclotomic:"):
            try:
                return cls("cyclotomic", int(text.split(":", 1)[1]))
            except ValueError:
                pass
        raise ValueError(f"bad field spec {text!r}; expected 'rational' or 'cyclotomic:<m>'")

    @classmethod
    def from_json(cls, obj) -> "FieldSpec":
        if obj is None:
            return cls()
        if isinstance(obj, str):
            return cls.from_text(obj)
        return cls(obj.get("kind", "rational"), obj.get("order"))

    def to_json(self):
        if self.kind == "rational":
            return {"kind": "rational"}
        return {"kind": "cyclotomic", "order": self.order}

    def __str__(self):
        return "rational" if self.kind == "rational" else f"cyclotomic:{self.order}"

    @property
    def zero(self):
        return self.coerce(0)

    @property
    def one(self):
        return self.coerce(1)

    def coerce(self, x):
        """Bring ``x`` into this field in canonical form."""
        if self.kind == "rational":
            if isinstance(x, Cyclotomic):
                q = x.rational_value()
                if q is None:
                    raise MixedFieldError(f"{x} is not rational")
                return q
            if isinstance(x, (int, Rational)):
                return Fraction(x)
            raise TypeError(f"cannot coerce {x!r} into Q")
        if isinstance(x, Cyclotomic):
            if x.order != self.order:
                raise MixedFieldError(
                    f"element of Q(zeta_{x.order}) used in Q(zeta_{self.order})"
                )
            return x
        if isinstance(x, (int, Rational)):
            return Cyclotomic(self.order, [x])
        raise TypeError(f"cannot coerce {x!r} into Q(zeta_{self.order})")

    def parse(self, text) -> Fraction | Cyclotomic:
        """Parse a scalar string: ``"p"``, ``"p/q"`` or ``"[c0,c1,...;m]"``."""
        if isinstance(text, int) and not isinstance(text, bool):
            return self.coerce(text)
        if not isinstance(text, str):
            raise ValueError(f"scalar must be a string, got {text!r}")
        s = text.strip()
        m = _CYCLO_RE.match(s)
        if m:
            order = int(m.group("m"))
            body = m.group("body").strip()
            parts = [p for p in body.split(",")] if body else []
            try:
                coeffs = [Fraction(p.strip()) for p in parts]
            except ValueError:
                raise ValueError(f"bad cyclotomic scalar {text!r}") from None
            if order < 1:
                raise ValueError(f"bad cyclotomic order in {text!r}")
            return self.coerce(Cyclotomic(order, coeffs))
        try:
            return self.coerce(Fraction(s))
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"bad scalar {text!r}") from None

    def format(self, x) -> str:
        return str(self.coerce(x))

    def primitive_root(self, m: int | None = None):
        """zeta_m in this field; ``m`` defaults to the field's own order."""
        if m == 2:
            return self.coerce(-1)
        if self.kind == "rational":
            raise ValueError("the rational field only contains the primitive root -1")
        m = self.order if m is None else m
        if self.order % m != 0:
            raise ValueError(f"Q(zeta_{self.order}) has no primitive {m}-th root")
        return primitive_root(self.order) ** (self.order // m)


RATIONAL = FieldSpec()
