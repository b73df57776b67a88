"""JSON file formats.  Indices are 1-based in files and 0-based in memory."""

from __future__ import annotations

import json
from pathlib import Path

from .algebra import AlgebraSC
from .bialgebra import Comultiplication, ManinTripleData
from .polynomial import parse_poly
from .quadratic import BilinearForm
from .reflection import LinearAuto
from .representations import MatchedPairData, Representation
from .scalars import FieldSpec

__all__ = [
    "InputError",
    "dump_algebra",
    "dump_bialgebra",
    "dump_manin",
    "dump_representation",
    "load_algebra",
    "load_bialgebra",
    "load_form",
    "load_json",
    "load_manin",
    "load_matched_pair",
    "load_matrix",
    "load_reflection",
    "load_representation",
    "read_poly",
]


class InputError(ValueError):
    """A file or argument could not be parsed; carries the source name."""

    def __init__(self, source, message):
        super().__init__(f"{source}: {message}")
        self.source = source


def load_json(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise InputError(path, f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    except OSError as exc:
        raise InputError(path, exc.strerror or str(exc)) from None


def _field(obj, override):
    if override is not None:
        return override
    return FieldSpec.from_json(obj.get("field"))


def _index(v, n, what, src):
    if not isinstance(v, int) or isinstance(v, bool) or not 1 <= v <= n:
        raise InputError(src, f"{what} index {v!r} out of range 1..{n}")
    return v - 1


def _scalar(field, text, src, where):
    try:
        return field.parse(text)
    except (ValueError, TypeError) as exc:
        raise InputError(src, f"{where}: {exc}") from None


def _matrix(field, rows, size, src, where):
    if not isinstance(rows, list) or len(rows) != size:
        raise InputError(src, f"{where}: expected {size} rows")
    out = []
    for a, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != size:
            raise InputError(src, f"{where}: row {a + 1} must have {size} entries")
        out.append([_scalar(field, x, src, f"{where}[{a + 1}][{b + 1}]") for b, x in enumerate(row)])
    return out


def load_algebra(obj, src="<algebra>", field=None) -> AlgebraSC:
    if not isinstance(obj, dict):
        raise InputError(src, "algebra must be a JSON object")
    try:
        fld = _field(obj, field)
    except ValueError as exc:
        raise InputError(src, str(exc)) from None
    n = obj.get("dim")
    if not isinstance(n, int) or n < 0:
        raise InputError(src, "'dim' must be a nonnegative integer")
    table = {}
    for k, entry in enumerate(obj.get("bracket", [])):
        try:
            i = _index(entry["i"], n, "i", src)
            j = _index(entry["j"], n, "j", src)
            coeffs = entry.get("coeffs", {})
        except (KeyError, TypeError):
            raise InputError(src, f"bracket entry {k + 1} needs 'i', 'j' and 'coeffs'") from None
        row = table.setdefault((i, j), {})
        for t, c in coeffs.items():
            try:
                ti = int(t)
            except ValueError:
                raise InputError(src, f"bracket entry {k + 1}: bad index {t!r}") from None
            row[_index(ti, n, "t", src)] = _scalar(fld, c, src, f"bracket entry {k + 1}")
    return AlgebraSC.from_table(n, table, fld)


def dump_algebra(A: AlgebraSC) -> dict:
    fmt = A.field.format
    entries = []
    for i in range(A.dim):
        for j in range(A.dim):
            coeffs = {str(t + 1): fmt(c) for t, c in enumerate(A.constants[i][j]) if c != 0}
            if coeffs:
                entries.append({"i": i + 1, "j": j + 1, "coeffs": coeffs})
    return {"field": A.field.to_json(), "dim": A.dim, "bracket": entries}


def dump_matrix(field, m):
    return [[field.format(x) for x in row] for row in m]


def load_representation(obj, src="<representation>", field=None) -> Representation:
    A = load_algebra(obj, src, field)
    m = obj.get("module_dim")
    if not isinstance(m, int) or m < 0:
        raise InputError(src, "'module_dim' must be a nonnegative integer")
    mats = {}
    for key in ("l", "r"):
        lst = obj.get(key)
        if not isinstance(lst, list) or len(lst) != A.dim:
            raise InputError(src, f"'{key}' must list {A.dim} matrices")
        mats[key] = [_matrix(A.field, M, m, src, f"{key}[{i + 1}]") for i, M in enumerate(lst)]
    return Representation(A, m, mats["l"], mats["r"])


def dump_representation(rep: Representation) -> dict:
    out = dump_algebra(rep.algebra)
    f = rep.field
    out["module_dim"] = rep.module_dim
    out["l"] = [dump_matrix(f, M) for M in rep.l_mats]
    out["r"] = [dump_matrix(f, M) for M in rep.r_mats]
    return out


def load_form(obj, src="<form>", field=None):
    A = load_algebra(obj, src, field)
    if "gram" not in obj:
        raise InputError(src, "missing 'gram'")
    return A, BilinearForm(A.field, A.dim, _matrix(A.field, obj["gram"], A.dim, src, "gram"))


def load_bialgebra(obj, src="<bialgebra>", field=None):
    A = load_algebra(obj, src, field)
    n = A.dim
    terms = {}
    for k, entry in enumerate(obj.get("delta", [])):
        try:
            i = _index(entry["i"], n, "i", src)
            lst = entry.get("terms", [])
            for term in lst:
                j = _index(term["j"], n, "j", src)
                kk = _index(term["k"], n, "k", src)
                terms.setdefault(i, {})[(j, kk)] = _scalar(A.field, term["c"], src, f"delta entry {k + 1}")
        except (KeyError, TypeError):
            raise InputError(src, f"delta entry {k + 1} needs 'i' and 'terms' of {{j, k, c}}") from None
    return A, Comultiplication.from_terms(n, terms, A.field)


def dump_bialgebra(A: AlgebraSC, delta: Comultiplication) -> dict:
    out = dump_algebra(A)
    fmt = A.field.format
    entries = []
    for i in range(delta.dim):
        terms = [
            {"j": j + 1, "k": k + 1, "c": fmt(c)}
            for j, row in enumerate(delta.delta[i])
            for k, c in enumerate(row)
            if c != 0
        ]
        if terms:
            entries.append({"i": i + 1, "terms": terms})
    out["delta"] = entries
    return out


def load_manin(obj, src="<manin>", field=None) -> ManinTripleData:
    A, form = load_form(obj, src, field)
    n = A.dim // 2
    try:
        a = obj.get("a_range", [1, n])
        s = obj.get("astar_range", [n + 1, 2 * n])
        a_range = (a[0] - 1, a[1])
        s_range = (s[0] - 1, s[1])
        return ManinTripleData(A, a_range, s_range, form)
    except (TypeError, IndexError, ValueError) as exc:
        raise InputError(src, f"bad Manin triple data: {exc}") from None


def dump_manin(mt: ManinTripleData) -> dict:
    out = dump_algebra(mt.double)
    out["gram"] = dump_matrix(mt.form.field, mt.form.gram)
    out["a_range"] = [mt.a_range[0] + 1, mt.a_range[1]]
    out["astar_range"] = [mt.astar_range[0] + 1, mt.astar_range[1]]
    return out


def load_matched_pair(obj, src="<matched pair>", field=None) -> MatchedPairData:
    if not isinstance(obj, dict) or "A" not in obj or "B" not in obj:
        raise InputError(src, "matched pair file needs 'A' and 'B' algebras")
    A = load_algebra(obj["A"], f"{src}:A", field)
    B = load_algebra(obj["B"], f"{src}:B", field or A.field)
    mats = {}
    for key, count, size in (("lA", A.dim, B.dim), ("rA", A.dim, B.dim), ("lB", B.dim, A.dim), ("rB", B.dim, A.dim)):
        lst = obj.get(key)
        if not isinstance(lst, list) or len(lst) != count:
            raise InputError(src, f"'{key}' must list {count} matrices")
        mats[key] = [_matrix(A.field, M, size, src, f"{key}[{i + 1}]") for i, M in enumerate(lst)]
    return MatchedPairData(A, B, mats["lA"], mats["rA"], mats["lB"], mats["rB"])


def dump_matched_pair(mp: MatchedPairData) -> dict:
    f = mp.A.field
    return {
        "A": dump_algebra(mp.A),
        "B": dump_algebra(mp.B),
        "lA": [dump_matrix(f, M) for M in mp.lA],
        "rA": [dump_matrix(f, M) for M in mp.rA],
        "lB": [dump_matrix(f, M) for M in mp.lB],
        "rB": [dump_matrix(f, M) for M in mp.rB],
    }


def load_matrix(obj, size, field, src="<matrix>", key="matrix"):
    rows = obj.get(key) if isinstance(obj, dict) else obj
    if rows is None:
        raise InputError(src, f"missing '{key}'")
    return _matrix(field, rows, size, src, key)


def load_reflection(obj, src="<reflection>", field=None) -> LinearAuto:
    if not isinstance(obj, dict):
        raise InputError(src, "reflection must be a JSON object")
    try:
        fld = _field(obj, field)
    except ValueError as exc:
        raise InputError(src, str(exc)) from None
    n = obj.get("nvars")
    if not isinstance(n, int) or n < 0:
        raise InputError(src, "'nvars' must be a nonnegative integer")
    m = _matrix(fld, obj.get("matrix"), n, src, "matrix")
    try:
        return LinearAuto(n, m, fld, obj.get("order"))
    except ValueError as exc:
        raise InputError(src, str(exc)) from None


def dump_auto(R: LinearAuto) -> dict:
    return {"field": R.field.to_json(), "nvars": R.nvars, "matrix": dump_matrix(R.field, R.matrix)}


def read_poly(text, nvars, field, src="<poly>"):
    try:
        return parse_poly(text, nvars, field)
    except ValueError as exc:
        raise InputError(src, str(exc)) from None


def read_file(path, loader, field=None, **kw):
    return loader(load_json(path), str(Path(path)), field, **kw)
