"""Command-line front end.

Exit codes: 0 success, 1 a verification failed, 2 parse or usage error,
3 a precondition of the requested computation does not hold.
"""

from __future__ import annotations

import argparse
import itertools
import re
import sys
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from . import formulas as F
from .expr import ExprSyntaxError, build, parse_region_expr
from .fileio import RegionFileError
from .identities import (
    KuoForm,
    PreconditionError,
    Report,
    cauchy_binet_check,
    check_factorization,
    check_forced_dents,
    check_forced_reduction,
    check_halfshift,
    check_kuo_four,
    check_splitting,
    fmt,
    single_dent_configuration,
    two_dent_configuration,
    vplus_families,
)
from .lattice import Orient, Region, TriRef
from .lgv import path_matrix_V, path_matrix_Vplus, path_matrix_VplusBar
from .oracle import (
    EnumerationLimitError,
    NotSymmetricError,
    count_symmetric_horizontal,
    count_symmetric_vertical,
    count_tilings,
    enumerate_tilings,
)
from .poly import InterpolationError, RegionFamily, TubeyFamily, degree_bound_fplus, tiling_polynomial
from .regions import (
    DentError,
    LatticeLine,
    LineKind,
    LineSplitError,
    OverlapError,
    SplitError,
    V,
    v_family_core,
    vertical_axis,
)
from .svg import render_svg

OK, FAILED, USAGE, PRECONDITION = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse exits with 2, which matches USAGE
        self.print_usage(sys.stderr)
        self.exit(USAGE, f"{self.prog}: error: {message}\n")


# argument helpers

def _ints(text: str | None) -> tuple[int, ...]:
    if text is None or not text.strip():
        return ()
    try:
        return tuple(int(x) for x in text.replace("[", "").replace("]", "").split(","))
    except ValueError:
        raise UsageError(f"expected a comma-separated integer list, got {text!r}") from None


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"not an exact rational: {text!r}") from None


def _region(text: str) -> Region:
    return build(parse_region_expr(text))


_TRI = re.compile(r"\s*(Up|Down|U|D)\s*\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)\s*$")


def _tri(text: str) -> TriRef:
    m = _TRI.match(text)
    if not m:
        raise UsageError(f"expected Up(x,y) or Down(x,y), got {text!r}")
    orient = Orient.UP if m.group(1).startswith("U") else Orient.DOWN
    return TriRef(int(m.group(2)), int(m.group(3)), orient)


def _line_arg(text: str) -> LatticeLine:
    parts = text.split(":")
    try:
        kind = LineKind[parts[0].upper()]
        c = int(parts[1])
        side = int(parts[2]) if len(parts) > 2 else 1
    except (KeyError, IndexError, ValueError):
        raise UsageError(f"line must be KIND:c[:side] with KIND in row/col/diag, got {text!r}") from None
    return LatticeLine(kind, c, side)


# subcommands

def cmd_count(args) -> int:
    r = _region(args.expr)
    if args.symmetric is None:
        value = count_tilings(r)
    elif args.symmetric == "v":
        try:
            axis2 = vertical_axis(r) if args.axis is None else args.axis
        except SplitError as exc:
            raise NotSymmetricError(str(exc)) from None
        value = count_symmetric_vertical(r, axis2)
    else:
        if args.axis is not None:
            axis2 = args.axis
        elif len(r):
            ys = [t.y for t in r.triangles]
            axis2 = min(ys) + max(ys) + 1
        else:
            axis2 = 0
        value = count_symmetric_horizontal(r, axis2)
    print(fmt(value))
    return OK


# name -> (arity, first argument may be rational, evaluator)
FORMULAS = {
    "P": (3, False, F.macmahon_P),
    "Pminus": (2, True, F.P_minus),
    "Pvert": (2, True, F.P_vert),
    "underline": (4, False, F.underline_stat),
    "binom": (2, True, F.gen_binomial),
    "pochhammer": (2, True, F.pochhammer),
}


def cmd_formula(args) -> int:
    if args.name == "degree":
        if len(args.args) < 2:
            raise UsageError("degree needs b n [u...]")
        b, n, *u = (_integer(x) for x in args.args)
        if len(u) != n:
            raise UsageError(f"degree needs exactly n = {n} dent positions")
        print(degree_bound_fplus(b, n, u))
        return OK
    if args.name not in FORMULAS:
        raise UsageError(f"unknown formula {args.name!r}; choose from {', '.join([*FORMULAS, 'degree'])}")
    arity, rational_first, f = FORMULAS[args.name]
    if len(args.args) != arity:
        raise UsageError(f"{args.name} takes {arity} arguments")
    vals: list = [_integer(x) for x in args.args[1:]]
    vals.insert(0, _rational(args.args[0]) if rational_first else _integer(args.args[0]))
    print(fmt(f(*vals)))
    return OK


def _integer(text: str) -> int:
    q = _rational(text)
    if q.denominator != 1:
        raise UsageError(f"integer argument expected, got {text!r}")
    return int(q)


def _dent_vectors(b: int, n: int, given: str | None):
    if given is not None:
        u = _ints(given)
        if len(u) != n:
            raise UsageError(f"--u has {len(u)} entries but --n is {n}")
        return [u]
    return list(itertools.combinations(range(1, b + 2 * n + 1), n))


def _verify(args) -> Report:
    name = args.identity
    rep = Report()
    if name == "halfshift":
        if args.region:
            core = _region(args.region)
            x0, y0 = _ints(args.anchor) if args.anchor else (0, 0)
            if args.h is None:
                raise UsageError("halfshift with --region needs --h")
            fam_u = TubeyFamily(core, (x0, y0), args.h, False)
            fam_w = TubeyFamily(core, (x0, y0), args.h, True)
            return check_halfshift(fam_u, fam_w, args.degree, label=f"h={args.h}")
        b, n = _need(args, "b"), _need(args, "n")
        for u in _dent_vectors(b, n, args.u):
            fu, fw = vplus_families(b, u)
            hint = args.degree
            if hint is None and F.vplus_tileable(n, u):
                hint = degree_bound_fplus(b, n, u)
            rep.extend(check_halfshift(fu, fw, hint, label=f"b={b} n={n} u={list(u)}"))
        return rep
    if name == "factorization":
        return check_factorization(_region(_need(args, "region")), label=args.region)
    if name in ("kuo1", "kuo2"):
        form = KuoForm.PRODUCT if name == "kuo1" else KuoForm.SUM
        if args.region:
            if len(args.tri or []) != 4:
                raise UsageError(f"{name} with --region needs four --tri arguments")
            r = _region(args.region)
            quad = [_tri(t) for t in args.tri]
            return check_kuo_four(r, *quad, form=form, label=args.region)
        a, b = _need(args, "a"), _need(args, "b")
        u = _ints(args.u)
        if form is KuoForm.PRODUCT:
            r, quad = two_dent_configuration(a, b, u)
        else:
            if len(u) != 1:
                raise UsageError("kuo2 configuration takes a single dent --u")
            r, quad = single_dent_configuration(a, b, u[0])
        return check_kuo_four(r, *quad, form=form, label=f"a={a} b={b} u={list(u)}")
    if name == "splitting":
        r = _region(_need(args, "region"))
        return check_splitting(r, _line_arg(_need(args, "line")), args.region, per_tiling=args.per_tiling)
    if name == "forced":
        return check_forced_reduction(_region(_need(args, "region")), args.region)
    if name == "forced-dents":
        return check_forced_dents(_need(args, "a"), _need(args, "b"), _ints(args.u))
    if name == "main":
        a, b = _need(args, "a"), _need(args, "b")
        u = _ints(args.u)
        params = f"a={a} b={b} u={list(u)}"
        f0 = count_tilings(V(0, b, u))
        rep.add("main", params, count_tilings(V(a, b, u)), F.dented_half_count(a, b, u, f0))
        return rep
    if name == "lgv":
        a, b = _need(args, "a"), _need(args, "b")
        u = _ints(args.u)
        from .regions import Vplus, VplusBar

        params = f"a={a} b={b} u={list(u)}"
        rep.add("lgv-V", params, path_matrix_V(a, b, u).det(), count_tilings(V(a, b, u)))
        rep.add("lgv-Vplus", params, path_matrix_Vplus(a, b, u).det(), count_tilings(Vplus(a, b, u)))
        rep.add("lgv-VplusBar", params, path_matrix_VplusBar(a, b, u).det(), count_tilings(VplusBar(a, b, u)))
        return rep
    if name == "symmetric-product":
        a, b = _need(args, "a"), _need(args, "b")
        rep.add("symmetric-product", f"a={a} b={b}", F.P_minus(a, b) * F.P_vert(a, b), F.macmahon_P(2 * a, b, b))
        return rep
    if name == "cauchy-binet":
        a, b = _need(args, "a"), _need(args, "b")
        spec = v_family_core(b, _ints(args.u))
        return cauchy_binet_check(spec.core, spec.anchor, spec.h, a, args.weighted)
    raise UsageError(f"unknown identity {name!r}")


def _need(args, attr: str):
    value = getattr(args, attr)
    if value is None:
        raise UsageError(f"--{attr} is required for verify {args.identity}")
    return value


def cmd_verify(args) -> int:
    rep = _verify(args)
    if rep.lines:
        print(rep.text())
    print("PASS" if rep.ok else "FAIL")
    return OK if rep.ok else FAILED


def cmd_interpolate(args) -> int:
    u = _ints(args.u)
    if args.family in ("V", "Vplus", "VplusBar"):
        b = _need(args, "b")
        hint = args.degree
        if args.family == "V":
            fam = RegionFamily(lambda a: V(a, b, u), "V")
        else:
            fu, fw = vplus_families(b, u)
            fam = fu if args.family == "Vplus" else fw
            if hint is None and F.vplus_tileable(len(u), u):
                hint = degree_bound_fplus(b, len(u), u)
    elif args.family == "tubey":
        core = _region(_need(args, "region"))
        x0, y0 = _ints(args.anchor) if args.anchor else (0, 0)
        fam = TubeyFamily(core, (x0, y0), _need(args, "h"), args.weighted, args.offset)
        hint = args.degree
    else:
        raise UsageError(f"unknown family {args.family!r}")
    res = tiling_polynomial(fam, hint)
    print(" ".join(fmt(c) for c in res.poly.coeffs))
    for note in res.notes:
        print(f"NOTE {note}")
    if res.heuristic and res.poly.degree >= 0:
        print("NOTE degree found adaptively; confirmed at two extra points")
    return OK


def cmd_matrix(args) -> int:
    a = _rational(args.a) if args.variant == "VplusBar" else _integer(args.a)
    builders = {"V": path_matrix_V, "Vplus": path_matrix_Vplus, "VplusBar": path_matrix_VplusBar}
    m = builders[args.variant](a, args.b, _ints(args.u))
    for row in m.entries:
        print(" ".join(fmt(x) for x in row))
    print(f"det={fmt(m.det())}")
    return OK


def cmd_render(args) -> int:
    r = _region(args.expr)
    lozenges = None
    if args.tiling is not None:
        # tilings come out lazily, so only the first index+1 are ever built
        for i, t in enumerate(enumerate_tilings(r, limit=max(len(r), 1))):
            if i == args.tiling:
                lozenges = t.lozenges
                break
        else:
            raise PreconditionError(f"tiling index {args.tiling} out of range")
    text = render_svg(r, lozenges)
    if args.out in (None, "-"):
        sys.stdout.write(text)
    else:
        try:
            Path(args.out).write_text(text, encoding="utf-8")
        except OSError as exc:
            raise UsageError(f"cannot write {args.out}: {exc}") from None
    return OK


def make_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="lozenge", description="Exact lozenge tiling counts and identities.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("count", help="weighted number of tilings")
    c.add_argument("expr")
    c.add_argument("--symmetric", choices=["v", "h"])
    c.add_argument("--axis", type=int, help="doubled axis coordinate; found automatically if omitted")
    c.set_defaults(func=cmd_count)

    f = sub.add_parser("formula", help="evaluate a closed form")
    f.add_argument("name")
    f.add_argument("args", nargs="*")
    f.set_defaults(func=cmd_formula)

    v = sub.add_parser("verify", help="check an identity against the oracle")
    v.add_argument("identity")
    v.add_argument("--region")
    v.add_argument("--tri", action="append", help="Up(x,y) or Down(x,y); give four, in order")
    v.add_argument("--line", help="row:c, col:c or diag:c, optionally :-1 to put P on the low side")
    v.add_argument("--per-tiling", action="store_true")
    for name in ("a", "b", "n", "h", "degree"):
        v.add_argument(f"--{name}", type=int)
    v.add_argument("--u")
    v.add_argument("--anchor")
    v.add_argument("--weighted", action="store_true")
    v.set_defaults(func=cmd_verify)

    i = sub.add_parser("interpolate", help="recover a tiling function as a polynomial in a")
    i.add_argument("family", choices=["V", "Vplus", "VplusBar", "tubey"])
    for name in ("b", "n", "h", "degree"):
        i.add_argument(f"--{name}", type=int)
    i.add_argument("--u")
    i.add_argument("--region", help="core expression for the tubey family")
    i.add_argument("--anchor")
    i.add_argument("--weighted", action="store_true")
    i.add_argument("--offset", type=int, default=1, help="doubled tube length is 2a + offset")
    i.set_defaults(func=cmd_interpolate)

    m = sub.add_parser("matrix", help="print a path matrix and its determinant")
    m.add_argument("variant", choices=["V", "Vplus", "VplusBar"])
    m.add_argument("--a", required=True)
    m.add_argument("--b", type=int, required=True)
    m.add_argument("--u")
    m.set_defaults(func=cmd_matrix)

    r = sub.add_parser("render", help="draw a region or one of its tilings as SVG")
    r.add_argument("expr")
    r.add_argument("--tiling", type=int)
    r.add_argument("-o", "--out")
    r.set_defaults(func=cmd_render)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ExprSyntaxError, RegionFileError, DentError, UsageError, OverlapError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except (PreconditionError, NotSymmetricError, SplitError, LineSplitError, EnumerationLimitError) as exc:
        print(f"precondition: {exc}", file=sys.stderr)
        return PRECONDITION
    except InterpolationError as exc:
        for a, got, want in exc.mismatches:
            print(f"FAIL interpolate a={a} lhs={fmt(got)} rhs={fmt(want)}")
        print(f"FAIL {exc}")
        return FAILED


if __name__ == "__main__":
    raise SystemExit(main())
