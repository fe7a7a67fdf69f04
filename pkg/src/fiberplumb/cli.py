"""Command line interface: ``fiberplumb <command> ...``."""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import driver as pl
from .curvegraph import min_k, validate
from .formats import ParseError, emit_graph, parse_curve_graph, parse_plumb_graph
from .numtheory import StringError, hj_string
from .plumbing import canonicalize_signs, homology_invariants


def _read(path: str) -> str:
    return sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")


def _is_plumb_text(text: str) -> bool:
    for raw in text.splitlines():
        body = raw.split("#", 1)[0].split()
        if body:
            return body[0] in ("pvertex", "pedge")
    return False


def _plumb_from(path: str):
    """A plumbing graph, read directly or computed from a curve graph."""
    text = _read(path)
    if _is_plumb_text(text):
        try:
            return parse_plumb_graph(text), None
        except ParseError as exc:
            return None, (f"{path}: [parse] {exc}", pl.EXIT_INVALID)
    try:
        res = pl.run(parse_curve_graph(text))
    except ParseError as exc:
        return None, (f"{path}: [parse] {exc}", pl.EXIT_INVALID)
    except pl.PipelineError as exc:
        return None, (f"{path}: {exc}", exc.code)
    return res.plumb, None


def _resolve_one(args):
    path, stop_after, fmt = args
    out, notes, code = pl.pipeline(_read(path), stop_after, fmt)
    return path, out, notes, code


def cmd_resolve(args) -> int:
    jobs = [(p, args.stop_after, args.format) for p in args.files]
    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            results = list(pool.map(_resolve_one, jobs))
    else:
        results = [_resolve_one(j) for j in jobs]
    worst = 0
    for path, out, notes, code in results:
        if len(results) > 1 and out:
            sys.stdout.write(f"# {path}\n")
        sys.stdout.write(out)
        if notes:
            print(f"{path}: {notes}", file=sys.stderr)
        worst = max(worst, code)
    return worst


def cmd_cover(args) -> int:
    args.stop_after = "cover"
    return cmd_resolve(args)


def cmd_validate(args) -> int:
    worst = 0
    for path in args.files:
        try:
            g = parse_curve_graph(_read(path))
        except ParseError as exc:
            print(f"{path}: [parse] {exc}", file=sys.stderr)
            worst = max(worst, pl.EXIT_INVALID)
            continue
        report = validate(g)
        for issue in report:
            print(f"{path}: {issue.format(g.lines)}")
        if report.ok:
            print(f"{path}: ok")
        else:
            worst = max(worst, pl.EXIT_INVALID)
    return worst


def cmd_mink(args) -> int:
    try:
        g = parse_curve_graph(_read(args.file))
    except ParseError as exc:
        print(f"{args.file}: [parse] {exc}", file=sys.stderr)
        return pl.EXIT_INVALID
    report = validate(g)
    if not report.ok:
        for issue in report.errors:
            print(f"{args.file}: {issue.format(g.lines)}", file=sys.stderr)
        return pl.EXIT_INVALID
    k, constraints = min_k(g)
    print(f"k={k}")
    for c in constraints:
        print(f"  {c.describe()}")
    return pl.EXIT_OK


def cmd_invariants(args) -> int:
    pg, err = _plumb_from(args.file)
    if err:
        print(err[0], file=sys.stderr)
        return err[1]
    inv = homology_invariants(pg)
    print(f"determinant={inv.determinant}")
    print(f"invariant_factors={','.join(map(str, inv.invariant_factors))}")
    print(f"torsion={','.join(map(str, inv.torsion))}")
    print(f"corank={inv.corank}")
    print(f"genus_rank={inv.genus_rank}")
    print(f"cycle_rank={inv.cycle_rank}")
    return pl.EXIT_OK


def cmd_normalize(args) -> int:
    pg, err = _plumb_from(args.file)
    if err:
        print(err[0], file=sys.stderr)
        return err[1]
    sys.stdout.write(emit_graph(canonicalize_signs(pg), args.format))
    return pl.EXIT_OK


def cmd_string(args) -> int:
    try:
        s = hj_string(args.a, args.b, args.c, args.n1, args.n2, args.n3)
    except StringError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return pl.EXIT_UNREALIZABLE
    print(f"delta={s.delta}")
    print(f"alpha={s.alpha}")
    print(f"coeffs={','.join(map(str, s.coeffs))}")
    print(f"mus={','.join(map(str, s.mus))}")
    return pl.EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fiberplumb",
        description="Plumbing graphs for Milnor fiber boundaries from decorated curve graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    fmt = dict(choices=["native", "dot"], default="native")

    p = sub.add_parser("validate", help="check a curve graph")
    p.add_argument("files", nargs="+", help="curve graph files")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("mink", help="smallest admissible even k")
    p.add_argument("file", help="curve graph file")
    p.set_defaults(func=cmd_mink)

    p = sub.add_parser("cover", help="emit the cyclic covering")
    p.add_argument("files", nargs="+", help="curve graph files")
    p.add_argument("--format", **fmt)
    p.add_argument("--jobs", type=int, default=1, help="worker processes for several files")
    p.set_defaults(func=cmd_cover)

    p = sub.add_parser("resolve", help="run the pipeline")
    p.add_argument("files", nargs="+", help="curve graph files")
    p.add_argument("--stop-after", choices=pl.STAGES, default="plumb", help="last stage to run")
    p.add_argument("--format", **fmt)
    p.add_argument("--jobs", type=int, default=1, help="worker processes for several files")
    p.set_defaults(func=cmd_resolve)

    p = sub.add_parser("invariants", help="determinant and Smith form of the intersection matrix")
    p.add_argument("file")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("normalize", help="reduce minus edges by orientation flips")
    p.add_argument("file")
    p.add_argument("--format", **fmt)
    p.set_defaults(func=cmd_normalize)

    p = sub.add_parser("string", help="Hirzebruch-Jung string Str(a;b,c|n1;n2,n3)")
    for name in ("a", "b", "c", "n1", "n2", "n3"):
        p.add_argument(name, type=int)
    p.set_defaults(func=cmd_string)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
