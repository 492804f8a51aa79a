"""Command-line frontend.

    friezekit coxeter build --quiddity 4,2,1,3,2,2,1 --format pretty
    friezekit polygon enumerate --n 7 --count-only
    friezekit slk census --k 2 --w 2 --bound 60 --count-only

Exit status: 0 on success, 2 when a domain check fails (the error class
name is printed on stderr), 1 for malformed command lines.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any, Callable, List, Optional, Sequence

from . import coxeter, polygon, quiverfrieze, sltiling
from .errors import FriezeError, InvalidInput
from .exact import format_rational, rational_to_json, to_rational


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit with 2
        raise UsageError(f"{self.prog}: {message}")


class ValidationFailed(FriezeError):
    """A validate command found a violated condition."""


# ------------------------------------------------------------ value parsing

def _wrap(fn: Callable[[str], Any]) -> Callable[[str], Any]:
    def inner(text: str):
        try:
            return fn(text)
        except (ValueError, ZeroDivisionError, FriezeError) as exc:
            raise UsageError(f"cannot parse {text!r}: {exc}") from exc
    return inner


def _rationals(text: str) -> List[Fraction]:
    return [to_rational(x) for x in text.split(",") if x.strip()]


def _ints(text: str) -> List[int]:
    return [int(x) for x in text.split(",") if x.strip()]


def _pairs(text: str) -> List[tuple]:
    """'1-3,2-5' or '1:3,2:5' -> [(1, 3), (2, 5)]."""
    out = []
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        a, b = item.replace(":", "-").split("-")
        out.append((int(a), int(b)))
    return out


def _rows(text: str) -> List[List[Fraction]]:
    """'1,2;3,4' -> [[1, 2], [3, 4]]."""
    return [_rationals(r) for r in text.split(";") if r.strip()]


def _point(text: str):
    text = text.strip()
    if ":" in text:
        x, y = text.split(":")
        return (to_rational(x), to_rational(y))
    return coxeter.as_point(text)


def _points(text: str) -> list:
    return [_point(x) for x in text.split(",") if x.strip()]


def _cells(text: str) -> List[List[int]]:
    return [_ints(c) for c in text.split(";") if c.strip()]


# ------------------------------------------------------------ rendering

def _json(obj) -> str:
    return json.dumps(obj, ensure_ascii=False)


def _csv_grid(n: int, cols: Sequence[int], cell: Callable[[int, int], Optional[Fraction]], rows: Sequence[int]) -> str:
    header = ["i\\j"] + [str(j) for j in cols]
    body = [[str(i)] + ["" if cell(i, j) is None else format_rational(cell(i, j)) for j in cols] for i in rows]
    return sltiling.to_csv([header] + body)


def _matrix_text(M) -> str:
    rows = [[format_rational(x) for x in r] for r in M]
    wid = max(len(s) for r in rows for s in r)
    return "\n".join(" ".join(s.rjust(wid) for s in r) for r in rows)


def _matrix_csv(M) -> str:
    return sltiling.to_csv(M)


def render_coxeter(F: coxeter.CoxeterFrieze, fmt: str) -> str:
    if fmt == "pretty":
        return coxeter.render_pretty(F)
    if fmt == "csv":
        n, m = F.order, F.width
        return _csv_grid(n, range(1, 2 * n + 1),
                         lambda i, j: F.entry(i, j) if i <= j <= i + m - 1 else None, range(1, n + 1))
    return _json(F.to_json())


def render_sl(F: sltiling.SLFrieze, fmt: str) -> str:
    if fmt == "pretty":
        n, w = F.n, F.w
        lines = []
        cells = [[format_rational(F(i, j)) for j in range(i - 1, i + w + 1)] for i in range(n)]
        wid = max(len(s) for r in cells for s in r)
        for i, r in enumerate(cells):
            lines.append(" " * ((wid + 1) * i) + " ".join(s.rjust(wid) for s in r))
        return "\n".join(lines)
    if fmt == "csv":
        n, w = F.n, F.w
        return _csv_grid(n, range(0, 2 * n), lambda i, j: F(i, j) if i <= j <= i + w - 1 else None, range(n))
    return _json(F.to_json())


# ------------------------------------------------------------ coxeter

def cmd_coxeter_build(args) -> str:
    if (args.quiddity is None) == (args.diagonal is None):
        raise UsageError("give exactly one of --quiddity or --diagonal")
    if args.quiddity is not None:
        F = coxeter.frieze_from_first_row(args.quiddity)
    else:
        F = coxeter.frieze_from_diagonal(args.diagonal)
    return render_coxeter(F, args.format)


def _load(path: str) -> dict:
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc


def cmd_coxeter_validate(args) -> str:
    F = coxeter.CoxeterFrieze.from_json(_load(args.file))
    report = coxeter.validate(F)
    out = _json(report.as_dict())
    if not report.ok:
        raise ValidationFailed(out)
    return out


def cmd_coxeter_from_points(args) -> str:
    return render_coxeter(coxeter.frieze_from_points(args.points), args.format)


# ------------------------------------------------------------ polygon

def cmd_polygon_enumerate(args) -> str:
    Ts = polygon.enumerate_triangulations(args.n)
    if args.count_only:
        return str(len(Ts))
    if args.format == "csv":
        return sltiling.to_csv([polygon.quiddity_of_triangulation(T) for T in Ts])
    if args.format == "pretty":
        return "\n".join(f"{list(T.diagonals)}  quiddity {polygon.quiddity_of_triangulation(T)}" for T in Ts)
    return _json([{**T.to_json(), "quiddity": list(polygon.quiddity_of_triangulation(T))} for T in Ts])


def _triangulation(args) -> polygon.Triangulation:
    if args.quiddity is not None:
        return polygon.triangulation_of_quiddity(args.quiddity)
    if args.n is None:
        raise UsageError("give --quiddity, or --n with --diagonals")
    return polygon.Triangulation.make(args.n, args.diagonals or [])


def cmd_polygon_frieze(args) -> str:
    T = _triangulation(args)
    F = coxeter.frieze_from_first_row(polygon.quiddity_of_triangulation(T))
    if args.format == "json":
        return _json({"triangulation": T.to_json(), "frieze": F.to_json()})
    return render_coxeter(F, args.format)


def _matrix_output(M, det, fmt: str, extra: dict) -> str:
    rows = M.tolist()
    if fmt == "pretty":
        return _matrix_text(rows) + f"\ndet = {format_rational(det)}"
    if fmt == "csv":
        return _matrix_csv(rows)
    return _json({**extra, "matrix": [[rational_to_json(x) for x in r] for r in rows],
                  "determinant": rational_to_json(det)})


def cmd_polygon_bci(args) -> str:
    T = _triangulation(args)
    M = polygon.bci_matrix(T)
    return _matrix_output(M, M.determinant(), args.format, {"triangulation": T.to_json()})


def cmd_polygon_dissection_matrix(args) -> str:
    if args.cells is not None:
        n = args.n or max(v for c in args.cells for v in c)
        D = polygon.Dissection.from_cells(n, args.cells)
    elif args.n is not None:
        D = polygon.Dissection.make(args.n, args.diagonals or [])
    else:
        raise UsageError("give --cells, or --n with --diagonals")
    M = polygon.dissection_matrix(D)
    return _matrix_output(M, M.determinant(), args.format,
                          {"dissection": D.to_json(),
                           "formula": polygon.dissection_determinant_formula(D)})


# ------------------------------------------------------------ quiver

def _quiver(args) -> tuple:
    if args.type is not None:
        t = quiverfrieze.DynkinType.parse(args.type)
        return quiverfrieze.dynkin_quiver(t), t
    if args.n is None:
        raise UsageError("give --type, or --n with --arrows")
    Q = quiverfrieze.Quiver.make(args.n, args.arrows or [])
    return Q, quiverfrieze.dynkin_type_of(Q)


def cmd_quiver_frieze(args) -> str:
    Q, t = _quiver(args)
    if args.slice is None:
        raise UsageError("--slice is required")
    f = quiverfrieze.QFrieze(Q, args.rule, tuple(args.slice))
    lo, hi = args.start, args.stop
    slices = {m: f.slice(m) for m in range(lo, hi)}
    p = quiverfrieze.period(f)
    if args.format == "pretty":
        wid = max(len(format_rational(x)) for s in slices.values() for x in s)
        lines = [f"m={m:>3}: " + " ".join(format_rational(x).rjust(wid) for x in s) for m, s in slices.items()]
        lines.append(f"period: {p if p is not None else 'none up to 64'}")
        return "\n".join(lines)
    if args.format == "csv":
        return sltiling.to_csv([["m"] + [f"v{i}" for i in range(1, Q.n + 1)]] +
                               [[m] + list(s) for m, s in slices.items()])
    out = f.to_json()
    out["slices"] = {str(m): [rational_to_json(x) for x in s] for m, s in slices.items()}
    out["period"] = p
    if t is not None and args.rule in ("additive", "multiplicative"):
        out["symmetries"] = quiverfrieze.check_symmetries(f, t).as_dict()
    return _json(out)


def cmd_quiver_enumerate(args) -> str:
    t = quiverfrieze.DynkinType.parse(args.type)
    c = quiverfrieze.enumerate_integer_friezes(t, args.bound)
    if args.count_only:
        return str(c.count)
    if args.format == "csv":
        return sltiling.to_csv(c.friezes)
    if args.format == "pretty":
        return "\n".join(" ".join(map(str, s)) for s in c.friezes) + f"\n{c.count} friezes; {c.note}"
    return _json({"type": str(t), "bound": c.bound, "count": c.count, "note": c.note,
                  "slices": [list(s) for s in c.friezes]})


def cmd_quiver_mutate(args) -> str:
    n = len(args.values)
    Q = quiverfrieze.Quiver.make(n, args.arrows or [])
    S = quiverfrieze.Seed(tuple(args.values), Q)
    for k in args.at:
        S = quiverfrieze.mutate_seed(S, k)
    vals = [rational_to_json(x) for x in S.values]
    if args.format == "pretty":
        return f"values: {' '.join(format_rational(x) for x in S.values)}\narrows: {list(S.quiver.arrows)}"
    if args.format == "csv":
        return sltiling.to_csv([S.values])
    return _json({"values": vals, "quiver": S.quiver.to_json()})


# ------------------------------------------------------------ SL_{k+1}

def _sl_frieze(args) -> sltiling.SLFrieze:
    if args.file is not None:
        return sltiling.SLFrieze.from_json(_load(args.file))
    if args.k is None or args.band is None:
        raise UsageError("give -f FILE, or --k with --band")
    return sltiling.SLFrieze.make(args.k, args.band)


def cmd_slk_validate(args) -> str:
    F = _sl_frieze(args)
    rep = sltiling.validate(F)
    out = _json({**rep.as_dict(), "periodic": sltiling.is_periodic(F)})
    if not rep.ok:
        raise ValidationFailed(out)
    return out


def cmd_slk_equation(args) -> str:
    if args.coefficients is not None:
        if args.k is None:
            raise UsageError("--coefficients needs --k")
        E = sltiling.DifferenceEqK.make(args.k, args.coefficients)
        return render_sl(sltiling.frieze_of_equation(E), args.format)
    E = sltiling.equation_of(_sl_frieze(args))
    rows = [list(r) for r in E.coefficients]
    if args.format == "pretty":
        return _matrix_text(rows)
    if args.format == "csv":
        return _matrix_csv(rows)
    out = E.to_json()
    out["superperiodic"] = sltiling.is_superperiodic(E)
    return _json(out)


def cmd_slk_gale(args) -> str:
    return render_sl(sltiling.gale_dual(_sl_frieze(args)), args.format)


def cmd_slk_dual(args) -> str:
    return render_sl(sltiling.projective_dual(_sl_frieze(args)), args.format)


def cmd_slk_tbox(args) -> str:
    F = _sl_frieze(args)
    box = sltiling.tsystem_box(F)
    res = box.max_abs_residual()
    summary = {"k": F.k, "window": list(box.window), "points": len(box.values),
               "max_abs_residual": rational_to_json(res), "boundary_ok": box.boundary_ok(),
               "gale_plane_ok": sltiling.gale_plane_ok(F)}
    if args.format == "csv":
        rows = [["alpha", "u", "v", "T"]] + [[a, u, v, x] for (a, u, v), x in sorted(box.values.items())]
        return sltiling.to_csv(rows)
    if args.format == "pretty":
        return "\n".join(f"{k}: {v}" for k, v in summary.items())
    if res != 0 or not summary["boundary_ok"]:
        raise ValidationFailed(_json(summary))
    return _json(summary)


def cmd_slk_census(args) -> str:
    found = sltiling.census(args.k, args.w, args.bound)
    if args.count_only:
        return str(len(found))
    if args.format == "csv":
        return sltiling.to_csv([[x for row in F.band for x in row] for F in found])
    if args.format == "pretty":
        return "\n\n".join(render_sl(F, "pretty") for F in found) + f"\n\n{len(found)} friezes"
    return _json({"k": args.k, "w": args.w, "bound": args.bound, "count": len(found),
                  "note": f"complete relative to bound {args.bound}",
                  "friezes": [F.to_json()["band"] for F in found]})


def cmd_slk_block(args) -> str:
    M = [[int(x) for x in r] for r in args.matrix]
    if len(M) != 2 or any(len(r) != 2 for r in M):
        raise UsageError("--matrix must be 2x2, e.g. '2,5;7,18'")
    B = sltiling.antiperiodic_sl2_block(args.q, args.qp, M)
    if args.format == "pretty":
        return _matrix_text(B.block)
    if args.format == "csv":
        return _matrix_csv(B.block)
    return _json(B.to_json())


# ------------------------------------------------------------ parser

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="friezekit", description="Frieze patterns, quiver friezes and SL_{k+1} tilings.")
    top = p.add_subparsers(dest="group", required=True, parser_class=_Parser)

    def leaf(sub, name, fn, help_=None):
        q = sub.add_parser(name, help=help_)
        q.add_argument("--format", choices=("json", "csv", "pretty"), default="json")
        q.set_defaults(func=fn)
        return q

    rats, ints, pairs, rows = _wrap(_rationals), _wrap(_ints), _wrap(_pairs), _wrap(_rows)

    cox = top.add_parser("coxeter", help="Coxeter friezes").add_subparsers(dest="cmd", required=True,
                                                                          parser_class=_Parser)
    q = leaf(cox, "build", cmd_coxeter_build, "frieze from a quiddity or a diagonal")
    q.add_argument("--quiddity", type=rats)
    q.add_argument("--diagonal", type=rats)
    q = leaf(cox, "validate", cmd_coxeter_validate, "check a frieze JSON file")
    q.add_argument("-f", "--file", required=True)
    q = leaf(cox, "from-points", cmd_coxeter_from_points, "frieze of an odd n-gon on the projective line")
    q.add_argument("--points", type=_wrap(_points), required=True,
                   help="comma separated: rationals, 'inf', or x:y pairs")

    pol = top.add_parser("polygon", help="triangulations and dissections").add_subparsers(
        dest="cmd", required=True, parser_class=_Parser)
    q = leaf(pol, "enumerate", cmd_polygon_enumerate, "all triangulations of an n-gon")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--count-only", action="store_true")
    for name, fn in (("frieze", cmd_polygon_frieze), ("bci", cmd_polygon_bci)):
        q = leaf(pol, name, fn)
        q.add_argument("--quiddity", type=rats)
        q.add_argument("--n", type=int)
        q.add_argument("--diagonals", type=pairs, help="e.g. 1-3,1-4")
    q = leaf(pol, "dissection-matrix", cmd_polygon_dissection_matrix)
    q.add_argument("--cells", type=_wrap(_cells), help="e.g. '1,2,3,4;1,4,5'")
    q.add_argument("--n", type=int)
    q.add_argument("--diagonals", type=pairs)

    qv = top.add_parser("quiver", help="friezes on repetition quivers").add_subparsers(
        dest="cmd", required=True, parser_class=_Parser)
    q = leaf(qv, "frieze", cmd_quiver_frieze)
    q.add_argument("--type")
    q.add_argument("--n", type=int)
    q.add_argument("--arrows", type=pairs)
    q.add_argument("--rule", choices=quiverfrieze.RULES, default="multiplicative")
    q.add_argument("--slice", type=rats)
    q.add_argument("--start", type=int, default=0)
    q.add_argument("--stop", type=int, default=8)
    q = leaf(qv, "enumerate", cmd_quiver_enumerate, "positive integer friezes with slice entries <= bound")
    q.add_argument("--type", required=True)
    q.add_argument("--bound", type=int, required=True)
    q.add_argument("--count-only", action="store_true")
    q = leaf(qv, "mutate", cmd_quiver_mutate)
    q.add_argument("--arrows", type=pairs)
    q.add_argument("--values", type=rats, required=True)
    q.add_argument("--at", type=ints, required=True, help="vertex, or comma separated sequence")

    sl = top.add_parser("slk", help="SL_{k+1} friezes").add_subparsers(dest="cmd", required=True,
                                                                      parser_class=_Parser)

    def frieze_input(q):
        q.add_argument("-f", "--file")
        q.add_argument("--k", type=int)
        q.add_argument("--band", type=rows, help="rows separated by ';', e.g. '1,1;2,3;...'")

    for name, fn, help_ in (("validate", cmd_slk_validate, "unit minors and tameness"),
                            ("gale", cmd_slk_gale, "Gale dual frieze"),
                            ("dual", cmd_slk_dual, "projective dual and the duality checks"),
                            ("tbox", cmd_slk_tbox, "T-system box residuals")):
        frieze_input(leaf(sl, name, fn, help_))
    q = leaf(sl, "equation", cmd_slk_equation, "coefficients of a frieze, or the frieze of --coefficients")
    frieze_input(q)
    q.add_argument("--coefficients", type=rows)
    q = leaf(sl, "census", cmd_slk_census, "positive integer friezes with entries <= bound")
    q.add_argument("--k", type=int, required=True)
    q.add_argument("--w", type=int, required=True)
    q.add_argument("--bound", type=int, default=60)
    q.add_argument("--count-only", action="store_true")
    q = leaf(sl, "block", cmd_slk_block, "antiperiodic SL_2 block from (q, q', M)")
    q.add_argument("--q", type=ints, required=True)
    q.add_argument("--qp", type=ints, required=True)
    q.add_argument("--matrix", type=rows, required=True)
    return p


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        text = args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=err)
        return 1
    except FriezeError as exc:
        print(f"{exc.name}: {exc}", file=err)
        return 2
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    print(text, file=out)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
