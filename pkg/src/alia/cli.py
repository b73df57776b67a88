"""Command-line front end.

Every verb prints one JSON report (sorted keys, scalars as canonical strings)
and exits 0 on success, 1 when a mathematical check or precondition fails, and
2 on unreadable input or bad usage.  Constructed objects are embedded in the
report under ``result`` and also written to ``--output`` when given.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import io
from .algebra import (
    bracket_eval,
    check_alia,
    classify_algebra,
    lie_triple_from_alia,
    special_left_alia,
)
from .bialgebra import (
    check_bialgebra,
    check_coalgebra,
    check_manin_triple,
    coregular_double,
    double_construct,
    dual_algebra_from_delta,
    frobenius_double,
)
from .quadratic import Tensor2, btilde, check_quadratic, quadratic_from_frobenius, tensor_invariance
from .reflection import (
    DEFAULT_MAX_ORDER,
    apply_auto,
    dual_auto,
    invariance_check,
    is_pseudo_reflection,
    poly_alia_bracket,
    poly_lie_triple,
    twisted_derivation,
)
from .report import CheckReport, InternalConsistencyError
from .representations import (
    adjoint_rep,
    check_equivalence,
    check_matched_pair,
    check_representation,
    dual_rep,
    matched_pair_sum,
    semidirect_product,
)
from .scalars import FieldSpec

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class _Usage(Exception):
    pass


class _ArgParser(argparse.ArgumentParser):
    def error(self, message):
        raise _Usage(message)


def _identities(rep: CheckReport, acc=None):
    acc = set() if acc is None else acc
    acc.add(rep.identity)
    for v in rep.violations:
        acc.add(v.identity)
    for p in rep.parts.values():
        _identities(p, acc)
    return acc


class _Out:
    """Collects the report document for one verb."""

    def __init__(self, verb, field):
        self.doc = {"verb": verb, "field": field.to_json()}
        self.fmt = field.format
        self.passed = True
        self.ids = set()

    def check(self, name, rep: CheckReport, required=True):
        self.doc[name] = rep.to_json(self.fmt)
        self.ids |= _identities(rep)
        if required and not rep.passed:
            self.passed = False
        return rep

    def fail(self, message):
        self.doc["error"] = message
        self.passed = False

    def finish(self):
        self.doc["passed"] = self.passed
        self.doc["identities"] = sorted(self.ids)
        return self.doc


def _json_arg(text, what):
    """Inline JSON, or ``@path`` to read it from a file."""
    if text.startswith("@"):
        return io.load_json(text[1:])
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise io.InputError(what, f"invalid JSON at column {exc.colno}: {exc.msg}") from None


def _matrix_arg(text, size, field, what):
    return io.load_matrix(_json_arg(text, what), size, field, what)


def _vector_arg(text, size, field, what):
    obj = _json_arg(text, what)
    if not isinstance(obj, list) or len(obj) != size:
        raise io.InputError(what, f"expected a list of {size} scalars")
    try:
        return [field.parse(x) for x in obj]
    except (TypeError, ValueError) as exc:
        raise io.InputError(what, str(exc)) from None


def _write(path, obj):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(json.dumps(obj, sort_keys=True, indent=2) + "\n")


def _emit_result(out, args, obj):
    out.doc["result"] = obj
    if getattr(args, "output", None):
        _write(args.output, obj)


# -- verbs ------------------------------------------------------------------


def _cmd_check_alia(args, fld):
    A = io.read_file(args.input, io.load_algebra, fld)
    out = _Out("check-alia", A.field)
    out.check("report", check_alia(A, side=args.side))
    return out


def _cmd_classify(args, fld):
    A = io.read_file(args.input, io.load_algebra, fld)
    out = _Out("classify", A.field)
    flags = classify_algebra(A)
    out.doc["flags"] = flags.as_dict()
    if args.eval:
        x = _vector_arg(args.eval[0], A.dim, A.field, "--eval x")
        y = _vector_arg(args.eval[1], A.dim, A.field, "--eval y")
        out.doc["bracket"] = [A.field.format(c) for c in bracket_eval(A, x, y)]
    if args.lie_triple:
        if not flags.is_left_alia:
            out.fail("the Lie triple construction needs a left-Alia algebra")
        else:
            _, rep = lie_triple_from_alia(A, args.lie_triple)
            # the fundamental identity may legitimately fail; it is reported, not an error
            out.check("lie_triple", rep, required=False)
    return out


def _cmd_check_rep(args, fld):
    out = None
    if args.adjoint:
        A = io.read_file(args.input, io.load_algebra, fld)
        out = _Out("check-rep", A.field)
        if not check_alia(A).passed:
            out.fail("the adjoint representation needs a left-Alia algebra")
            return out
        rep = adjoint_rep(A)
    else:
        rep = io.read_file(args.input, io.load_representation, fld)
        out = _Out("check-rep", rep.field)
    if args.dual:
        base = out.check("input", check_representation(rep))
        if not base.passed:
            out.fail("the dual representation needs a valid representation")
            return out
        rep = dual_rep(rep, check=False)
    if args.adjoint or args.dual:
        _emit_result(out, args, io.dump_representation(rep))
    out.check("report", check_representation(rep))
    if args.equiv:
        if not args.phi:
            raise _Usage("--equiv needs --phi")
        rep2 = io.read_file(args.equiv, io.load_representation, fld or rep.field)
        if rep2.module_dim != rep.module_dim or rep2.algebra.dim != rep.algebra.dim:
            raise io.InputError(args.equiv, "representation shapes differ")
        phi = _matrix_arg(args.phi, rep.module_dim, rep.field, "--phi")
        out.check("equivalence", check_equivalence(rep, rep2, phi))
    return out


def _cmd_semidirect(args, fld):
    rep = io.read_file(args.input, io.load_representation, fld)
    out = _Out("semidirect", rep.field)
    S = semidirect_product(rep.algebra, rep)
    _emit_result(out, args, io.dump_algebra(S))
    out.check("representation", check_representation(rep))
    out.check("report", check_alia(S))
    return out


def _cmd_check_matched_pair(args, fld):
    mp = io.read_file(args.input, io.load_matched_pair, fld)
    out = _Out("check-matched-pair", mp.A.field)
    _emit_result(out, args, io.dump_algebra(matched_pair_sum(mp)))
    out.check("report", check_matched_pair(mp))
    return out


def _cmd_check_quadratic(args, fld):
    A, B = io.read_file(args.input, io.load_form, fld)
    out = _Out("check-quadratic", A.field)
    out.check("report", check_quadratic(A, B))
    if args.tensor:
        r = Tensor2(A.field, A.dim, _matrix_arg(args.tensor, A.dim, A.field, "--tensor"))
        out.doc["tensor_symmetric"] = r.is_symmetric()
        out.check("tensor_invariance", tensor_invariance(A, r), required=False)
    elif B.is_nondegenerate():
        r = btilde(B)
        out.doc["btilde"] = io.dump_matrix(A.field, r.entries)
        out.doc["btilde_symmetric"] = r.is_symmetric()
        out.check("tensor_invariance", tensor_invariance(A, r), required=False)
    return out


def _cmd_frobenius_bracket(args, fld):
    out = None
    if args.P is not None or args.Qstar is not None:
        assoc = io.read_file(args.input, io.load_algebra, fld)
        n = assoc.dim
        out = _Out("frobenius-bracket", assoc.field)
        zero = [[0] * n for _ in range(n)]
        P = _matrix_arg(args.P, n, assoc.field, "--P") if args.P else zero
        Q = _matrix_arg(args.Qstar, n, assoc.field, "--Qstar") if args.Qstar else zero
        mt = frobenius_double(coregular_double(assoc), P, Q)
        _emit_result(out, args, io.dump_manin(mt))
        out.check("report", check_manin_triple(mt))
        return out
    if args.f is None:
        raise _Usage("frobenius-bracket needs --f, or --P/--Qstar for the double")
    if args.g is not None:
        assoc = io.read_file(args.input, io.load_algebra, fld)
        out = _Out("frobenius-bracket", assoc.field)
        f = _matrix_arg(args.f, assoc.dim, assoc.field, "--f")
        g = _matrix_arg(args.g, assoc.dim, assoc.field, "--g")
        S = special_left_alia(assoc, f, g)
        _emit_result(out, args, io.dump_algebra(S))
        out.check("report", check_alia(S))
        return out
    assoc, B = io.read_file(args.input, io.load_form, fld)
    out = _Out("frobenius-bracket", assoc.field)
    f = _matrix_arg(args.f, assoc.dim, assoc.field, "--f")
    S, fhat = quadratic_from_frobenius(assoc, B, f)
    result = io.dump_algebra(S)
    result["gram"] = io.dump_matrix(B.field, B.gram)
    _emit_result(out, args, result)
    out.doc["fhat"] = io.dump_matrix(B.field, fhat)
    out.check("report", check_quadratic(S, B))
    return out


def _cmd_check_coalgebra(args, fld):
    A, delta = io.read_file(args.input, io.load_bialgebra, fld)
    out = _Out("check-coalgebra", A.field)
    out.doc["dual_algebra"] = io.dump_algebra(dual_algebra_from_delta(delta))
    out.check("report", check_coalgebra(delta))
    return out


def _cmd_check_bialgebra(args, fld):
    A, delta = io.read_file(args.input, io.load_bialgebra, fld)
    out = _Out("check-bialgebra", A.field)
    out.check("report", check_bialgebra(A, delta))
    return out


def _cmd_double(args, fld):
    A, delta = io.read_file(args.input, io.load_bialgebra, fld)
    out = _Out("double", A.field)
    mt = double_construct(A, delta)
    _emit_result(out, args, io.dump_manin(mt))
    return out


def _cmd_check_manin(args, fld):
    mt = io.read_file(args.input, io.load_manin, fld)
    out = _Out("check-manin", mt.double.field)
    out.check("report", check_manin_triple(mt))
    return out


def _reflection(args, fld):
    R = io.read_file(args.input, io.load_reflection, fld)
    res = is_pseudo_reflection(R, args.max_order)
    return R, res


def _reflection_json(R, res):
    doc = {"is_reflection": res.is_reflection, "reason": res.reason}
    if res.data is not None:
        d = res.data
        doc.update(
            l_R=str(d.l_R),
            delta_R=[R.field.format(x) for x in d.delta_R],
            order=d.order,
            omega=R.field.format(d.omega),
        )
    return doc


def _need_reflection(out, R, res):
    out.doc["reflection"] = _reflection_json(R, res)
    if not res.is_reflection:
        out.fail(f"not a pseudo-reflection: {res.reason}")
        return False
    return True


def _cmd_reflect(args, fld):
    R, res = _reflection(args, fld)
    out = _Out("reflect", R.field)
    _need_reflection(out, R, res)
    if args.dual:
        Rd = dual_auto(R)
        out.doc["dual"] = {"auto": io.dump_auto(Rd), **_reflection_json(Rd, is_pseudo_reflection(Rd, args.max_order))}
    return out


def _cmd_derive(args, fld):
    R, res = _reflection(args, fld)
    out = _Out("derive", R.field)
    f = io.read_poly(args.poly, R.nvars, R.field, "--poly")
    if args.apply:
        out.doc["image"] = str(apply_auto(R, f))
    if _need_reflection(out, R, res):
        out.doc["derivation"] = str(twisted_derivation(res.data, R, f))
    return out


def _cmd_poly_bracket(args, fld):
    R, res = _reflection(args, fld)
    out = _Out("poly-bracket", R.field)
    out.doc["variant"] = args.variant
    f = io.read_poly(args.f, R.nvars, R.field, "--f")
    g = io.read_poly(args.g, R.nvars, R.field, "--g")
    h = io.read_poly(args.h, R.nvars, R.field, "--h") if args.h is not None else None
    if _need_reflection(out, R, res):
        if h is None:
            out.doc["bracket"] = str(poly_alia_bracket(res.data, R, f, g, args.variant))
        else:
            out.doc["lie_triple"] = str(poly_lie_triple(res.data, R, f, g, h, args.variant))
    return out


def _cmd_invariant(args, fld):
    gens = [io.read_file(p, io.load_reflection, fld) for p in args.input]
    field = gens[0].field
    if any(g.nvars != gens[0].nvars for g in gens):
        raise _Usage("generators act on different numbers of variables")
    out = _Out("invariant", field)
    f = io.read_poly(args.poly, gens[0].nvars, field, "--poly")
    ok = invariance_check(f, gens)
    out.doc["invariant"] = ok
    if not ok:
        out.passed = False
    return out


# -- parser -----------------------------------------------------------------


def build_parser():
    p = _ArgParser(prog="alia", description="Exact checks and constructions for left-Alia algebras.")
    p.add_argument("--field", help="rational | cyclotomic:<m>; overrides the field stored in input files")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_ArgParser)

    def verb(name, func, help, output=False):
        s = sub.add_parser(name, help=help)
        s.set_defaults(func=func)
        if output:
            s.add_argument("-o", "--output", help="write the constructed object here")
        return s

    s = verb("check-alia", _cmd_check_alia, "symmetric Jacobi identity on all basis triples")
    s.add_argument("input")
    s.add_argument("--side", choices=("left", "right"), default="left")

    s = verb("classify", _cmd_classify, "structural flags, bracket evaluation, Lie triple system")
    s.add_argument("input")
    s.add_argument("--eval", nargs=2, metavar=("X", "Y"), help="evaluate [x, y] for two JSON vectors")
    s.add_argument("--lie-triple", choices=("alia", "half_bracket"))

    s = verb("check-rep", _cmd_check_rep, "representation axioms; adjoint, dual, equivalence", output=True)
    s.add_argument("input")
    s.add_argument("--adjoint", action="store_true", help="input is an algebra; use its adjoint representation")
    s.add_argument("--dual", action="store_true", help="pass to the dual representation first")
    s.add_argument("--equiv", metavar="REP2", help="second representation file")
    s.add_argument("--phi", help="JSON matrix (or @file) for --equiv")

    s = verb("semidirect", _cmd_semidirect, "semidirect product A + V", output=True)
    s.add_argument("input")

    s = verb("check-matched-pair", _cmd_check_matched_pair, "matched pair compatibility", output=True)
    s.add_argument("input")

    s = verb("check-quadratic", _cmd_check_quadratic, "invariant form and tensor criterion")
    s.add_argument("input")
    s.add_argument("--tensor", help="JSON matrix (or @file) to test for invariance instead of B-tilde")

    s = verb("frobenius-bracket", _cmd_frobenius_bracket, "brackets from commutative associative data", output=True)
    s.add_argument("input")
    s.add_argument("--f", help="JSON matrix (or @file)")
    s.add_argument("--g", help="with --f: special bracket x.f(y) + g(x.y)")
    s.add_argument("--P", help="double on A + A* from the coregular double of the input")
    s.add_argument("--Qstar", help="the map Q* on A* for the double")

    s = verb("check-coalgebra", _cmd_check_coalgebra, "left-Alia coalgebra identity")
    s.add_argument("input")

    s = verb("check-bialgebra", _cmd_check_bialgebra, "left-Alia bialgebra identity")
    s.add_argument("input")

    s = verb("double", _cmd_double, "double A + A* of a bialgebra with the pairing form", output=True)
    s.add_argument("input")

    s = verb("check-manin", _cmd_check_manin, "Manin triple conditions")
    s.add_argument("input")

    for name, func, help in (
        ("reflect", _cmd_reflect, "pseudo-reflection test"),
        ("derive", _cmd_derive, "twisted derivation of a polynomial"),
        ("poly-bracket", _cmd_poly_bracket, "bracket or Lie triple on polynomials"),
    ):
        s = verb(name, func, help)
        s.add_argument("input")
        s.add_argument("--max-order", type=int, default=DEFAULT_MAX_ORDER)
        if name == "reflect":
            s.add_argument("--dual", action="store_true", help="also test the inverse transpose")
        elif name == "derive":
            s.add_argument("--poly", required=True)
            s.add_argument("--apply", action="store_true", help="also report R(f)")
        else:
            s.add_argument("--f", required=True)
            s.add_argument("--g", required=True)
            s.add_argument("--h", help="with --h: the Lie triple value")
            s.add_argument("--variant", choices=("theorem", "intro"), default="theorem")

    s = verb("invariant", _cmd_invariant, "invariance of a polynomial under automorphisms")
    s.add_argument("input", nargs="+")
    s.add_argument("--poly", required=True)
    return p


def run(argv=None, stdout=None, stderr=None):
    """Run one command; returns the exit status."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        fld = FieldSpec.from_text(args.field) if args.field else None
    except _Usage as exc:
        print(f"alia: {exc}", file=stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"alia: --field: {exc}", file=stderr)
        return EXIT_USAGE
    try:
        out = args.func(args, fld)
    except (io.InputError, _Usage) as exc:
        print(f"alia: {exc}", file=stderr)
        return EXIT_USAGE
    except InternalConsistencyError:
        raise
    except (ValueError, ArithmeticError) as exc:
        # failed preconditions of a construction are mathematical failures
        out = _Out(args.verb, fld or FieldSpec())
        out.fail(str(exc))
    doc = out.finish()
    stdout.write(json.dumps(doc, sort_keys=True, indent=2) + "\n")
    return EXIT_OK if doc["passed"] else EXIT_FAIL


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
