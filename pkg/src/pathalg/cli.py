"""Command-line entry point.

Exit codes: 0 success (EQUAL for ``equal``), 2 NOT-EQUAL, 3 input error,
4 verification failure.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .algebra import minpoly_4cos2
from .cohn import cohn_check
from .coxeter import coxeter_analyze
from .errors import PathAlgError
from .iso import build_context, describe_Q, equal_in_R, phi, verify_context
from .parsing import parse_coxeter_file, parse_expression, parse_graph_file

EXIT_OK = 0
EXIT_NOT_EQUAL = 2
EXIT_INPUT = 3
EXIT_VERIFY = 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_INPUT)


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise PathAlgError(f"cannot read {path}: {exc.strerror}") from None


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="pathalg", description="Path-algebra quotients as matrix rings over free products.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("verify", help="run the identity checks on a graph file")
    s.add_argument("graph")
    s.add_argument("--seed", type=int, default=0)

    s = sub.add_parser("describe-q", help="list the free factors of Q")
    s.add_argument("graph")

    s = sub.add_parser("phi", help="print phi(expr) as a matrix")
    s.add_argument("graph")
    s.add_argument("-e", "--expr", required=True)

    s = sub.add_parser("equal", help="decide a == b in the quotient algebra")
    s.add_argument("graph")
    s.add_argument("-a", required=True)
    s.add_argument("-b", required=True)

    s = sub.add_parser("coxeter", help="analyze a Coxeter matrix file")
    s.add_argument("coxfile")
    g = s.add_mutually_exclusive_group()
    g.add_argument("--verify", action="store_true")
    g.add_argument("--describe-q", action="store_true")
    s.add_argument("--root", type=int, default=None, help="override the file's root vertex")
    s.add_argument("--seed", type=int, default=0)

    s = sub.add_parser("cohn", help="Cohn path algebra check on a graph file")
    s.add_argument("graph")
    s.add_argument("--seed", type=int, default=0)

    s = sub.add_parser("minpoly", help="print C_m, the minimal polynomial of 4cos^2(pi/m)")
    s.add_argument("m", type=int)
    return p


def _context(path: str):
    gf = parse_graph_file(_read(path))
    return gf, build_context(gf.graph, gf.fam, gf.root)


def run(args: argparse.Namespace, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr

    def emit(text) -> None:
        print(text, file=out)

    cmd = args.command
    if cmd == "minpoly":
        if args.m < 3:
            print("error: C_m needs m >= 3", file=err)
            return EXIT_INPUT
        emit(minpoly_4cos2(args.m))
        return EXIT_OK
    if cmd == "verify":
        _, ctx = _context(args.graph)
        rep = verify_context(ctx, seed=args.seed)
        emit(rep)
        return EXIT_OK if rep.ok else EXIT_VERIFY
    if cmd == "describe-q":
        _, ctx = _context(args.graph)
        emit(describe_Q(ctx))
        return EXIT_OK
    if cmd == "phi":
        gf, ctx = _context(args.graph)
        emit(phi(ctx, parse_expression(args.expr, gf.graph)))
        return EXIT_OK
    if cmd == "equal":
        gf, ctx = _context(args.graph)
        a = parse_expression(args.a, gf.graph)
        b = parse_expression(args.b, gf.graph)
        if equal_in_R(ctx, a, b):
            emit("EQUAL")
            return EXIT_OK
        emit("NOT-EQUAL")
        return EXIT_NOT_EQUAL
    if cmd == "coxeter":
        cm, root = parse_coxeter_file(_read(args.coxfile))
        if args.root is not None:
            root = args.root
        ana = coxeter_analyze(cm, root, verify=not args.describe_q, seed=args.seed)
        if not args.verify:
            emit(ana)
            emit(ana.report)
        if ana.verification is not None and not args.describe_q:
            emit(ana.verification)
            if not ana.verification.ok:
                return EXIT_VERIFY
        return EXIT_OK
    if cmd == "cohn":
        gf = parse_graph_file(_read(args.graph))
        if gf.has_polys:
            print("warning: cohn mode ignores 'poly' lines; every edge gets t - 1", file=err)
        rep = cohn_check(gf.graph, gf.root, seed=args.seed)
        emit(rep)
        return EXIT_OK if rep.ok else EXIT_VERIFY
    raise AssertionError(cmd)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return run(args)
    except PathAlgError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
