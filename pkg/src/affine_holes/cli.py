"""Command-line front end.

    affine-holes holes A.mat [--no-trick] [--format json] [--jobs 4]
    affine-holes gen cdem 3 | affine-holes holes -
    affine-holes frobenius 6 9 20

Matrix columns are the generators; ``--transpose`` reads one generator per
row instead.  Exit status: 0 on success, 1 for a negative answer when
``--exit-status`` is given (or a failed ``--degree-check``), 2 for usage
and input errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .diophantine import LATTICES, saturation_hilbert_basis
from .errors import ParseError
from .linalg import IntMat
from .models import cdem_matrix, idp_check, lop_matrix, polytope_lift
from .report import parse_mat, render_mat, render_report, vec
from .semigroup import (
    SemigroupProblem,
    Tag,
    classify_point,
    degree_check,
    frobenius_number,
    fundamental_holes,
    hole_report,
)


class UsageError(Exception):
    pass


def _read_matrix(path: str, transpose: bool = False) -> IntMat:
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    try:
        M = parse_mat(text)
    except ParseError as exc:
        raise UsageError(f"{path}: {exc}") from None
    return M.transpose() if transpose else M


def _problem(args) -> SemigroupProblem:
    return SemigroupProblem(_read_matrix(args.file, args.transpose), args.lattice)


def _parse_only(items, P):
    out = []
    for item in items:
        parts = item.replace(",", " ").split()
        try:
            nums = [int(p) for p in parts]
        except ValueError:
            raise UsageError(f"--only-hole expects an index or a vector, got {item!r}") from None
        if len(nums) == 1 and P.A.m != 1:
            out.append(nums[0] - 1)
        elif len(nums) == 1:
            # one-row matrices: a bare number is a vector, as in the output
            out.append((nums[0],))
        else:
            out.append(tuple(nums))
    return out


def cmd_holes(args) -> int:
    P = _problem(args)
    only = _parse_only(args.only_hole, P) if args.only_hole else None
    try:
        report = hole_report(P, use_trick=args.trick, jobs=args.jobs, only=only)
    except (IndexError, ValueError) as exc:
        if only is None:
            raise
        raise UsageError(str(exc)) from None
    sys.stdout.write(render_report(report, args.format))
    if args.degree_check is not None:
        if only is not None:
            # a partial report cannot be checked against all holes
            print("degree check skipped: --only-hole restricts the families", file=sys.stderr)
            return 0
        bad = degree_check(P, report, args.degree_check)
        if bad:
            print(f"degree check up to {args.degree_check} FAILED at {len(bad)} points:", file=sys.stderr)
            for z in bad[:20]:
                print("  " + vec(z), file=sys.stderr)
            return 1
        print(f"degree check up to {args.degree_check}: ok", file=sys.stderr)
    return 0


def cmd_fundamental(args) -> int:
    P = _problem(args)
    F = fundamental_holes(P)
    if args.format == "json":
        print(json.dumps({"matrix_dims": list(P.A.shape), "fundamental_holes": [list(f) for f in F]}))
    else:
        print(f"Found {len(F)} fundamental holes.")
        for f in F:
            print(vec(f))
    return 0


def cmd_hilbert(args) -> int:
    P = _problem(args)
    hb = saturation_hilbert_basis(P.A, args.lattice, frame=P.frame)
    if args.format == "json":
        print(json.dumps([list(h) for h in hb]))
    else:
        for h in hb:
            print(vec(h))
    return 0


def cmd_member(args) -> int:
    P = _problem(args)
    if len(args.b) != P.A.m:
        raise UsageError(f"point has {len(args.b)} entries, matrix has {P.A.m} rows")
    pc = classify_point(P, args.b)
    if args.format == "json":
        print(json.dumps({"class": str(pc.tag), "witness": None if pc.witness is None else list(pc.witness)}))
    else:
        print(str(pc.tag) if pc.witness is None else f"{pc.tag} {vec(pc.witness)}")
    return 1 if args.exit_status and pc.tag is not Tag.IN_Q else 0


def cmd_idp(args) -> int:
    V = _read_matrix(args.file, args.transpose)
    poly = polytope_lift(V.columns())
    holds, cert = idp_check(poly)
    if args.format == "json":
        print(json.dumps({"idp": holds, "certificate": None if cert is None else list(cert)}))
    else:
        print("true" if holds else f"false {vec(cert)}")
    return 1 if args.exit_status and not holds else 0


def cmd_gen(args) -> int:
    if args.model == "cdem":
        M = cdem_matrix(args.size).matrix
    else:
        poly = lop_matrix(args.size)
        M = poly.lifted_generators if args.lifted else IntMat.from_columns(poly.vertices)
    sys.stdout.write(render_mat(M))
    return 0


def cmd_frobenius(args) -> int:
    print(frobenius_number(IntMat((tuple(args.generators),))))
    return 0


def _matrix_args(p, with_format=True):
    p.add_argument("file", help="matrix file, or - for stdin")
    p.add_argument("--transpose", action="store_true", help="generators are rows, not columns")
    p.add_argument("--lattice", choices=LATTICES, default="ambient",
                   help="lattice used for the saturation (default: ambient)")
    if with_format:
        p.add_argument("--format", choices=("text", "json"), default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="affine-holes", description="Holes of affine semigroups.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("holes", help="fundamental holes and all hole families")
    _matrix_args(p)
    p.add_argument("--trick", dest="trick", action="store_true", default=True,
                   help="drop columns a_i with f + a_i in Q first (default)")
    p.add_argument("--no-trick", dest="trick", action="store_false")
    p.add_argument("--only-hole", action="append", metavar="HOLE",
                   help="1-based index or vector of a fundamental hole; repeatable")
    p.add_argument("--degree-check", type=int, metavar="D",
                   help="compare the families with brute force up to degree D")
    p.add_argument("--jobs", type=int, default=None,
                   help="worker processes (default: $HASE_JOBS or 1)")
    p.set_defaults(func=cmd_holes)

    p = sub.add_parser("fundamental", help="fundamental holes only")
    _matrix_args(p)
    p.set_defaults(func=cmd_fundamental)

    p = sub.add_parser("hilbert", help="Hilbert basis of the saturation")
    _matrix_args(p)
    p.set_defaults(func=cmd_hilbert)

    p = sub.add_parser("member", help="classify a point")
    _matrix_args(p)
    p.add_argument("b", nargs="+", type=int)
    p.add_argument("--exit-status", action="store_true", help="exit 1 unless the point is in Q")
    p.set_defaults(func=cmd_member)

    p = sub.add_parser("idp", help="integer decomposition property of conv(columns)")
    p.add_argument("file", help="vertex matrix (one vertex per column), or -")
    p.add_argument("--transpose", action="store_true", help="one vertex per row")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--exit-status", action="store_true", help="exit 1 when the property fails")
    p.set_defaults(func=cmd_idp)

    p = sub.add_parser("gen", help="write a model matrix")
    p.add_argument("model", choices=("cdem", "lop"))
    p.add_argument("size", type=int)
    p.add_argument("--lifted", action="store_true", help="lop: emit the height-1 lift instead of the vertices")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("frobenius", help="Frobenius number of positive integers")
    p.add_argument("generators", nargs="+", type=int)
    p.set_defaults(func=cmd_frobenius)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "jobs", None) is not None and args.jobs < 1:
        parser.error("--jobs must be positive")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"affine-holes: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        # bad input matrices: zero columns, non-pointed cones, wrong shapes
        print(f"affine-holes: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
