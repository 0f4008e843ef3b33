"""Command line: `twotangles <command> ...`.

Exit codes: 0 success or Equal, 1 Unknown or a failed check, 2 parse
error, 3 type error, 4 boundary mismatch.  Diagnostics go to stderr.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .cells import (
    bar_movie, dagger_movie, drop_identities, star_movie, vcompose,
)
from .errors import (
    BoundaryMismatch, DocumentTypeError, IllFormed, NotClosed, ParseError, TangleError,
    TypeMismatch, Unsupported,
)
from .invariants import surface_invariants
from .relations import SCHEMAS, VARIANTS, check_typing, instantiate, schema_params
from .render import render_movie
from .rewrite import decide_equal
from .structure import expand_generator
from .textio import MovieDocument, parse_cell, parse_document, serialize

OK, FAILED, PARSE, TYPE, BOUNDARY = 0, 1, 2, 3, 4


class _Exit(Exception):
    def __init__(self, code: int, message: str = ""):
        self.code = code
        self.message = message


def _read(path: str) -> MovieDocument:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise _Exit(FAILED, f"{path}: {e.strerror}") from None
    try:
        return parse_document(text)
    except ParseError as e:
        raise _Exit(PARSE, f"{path}: {e}") from None
    except DocumentTypeError as e:
        raise _Exit(TYPE, f"{path}: {e}") from None


def _write(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def cmd_validate(args) -> int:
    doc = _read(args.file)
    m = doc.movie
    print(f"{doc.name}: {len(m.slices)} slices, {m.source} => {m.target}")
    return OK


def cmd_compose(args) -> int:
    a, b = _read(args.a), _read(args.b)
    if a.movie.target != b.movie.source:
        raise _Exit(BOUNDARY, f"target {a.movie.target} of {a.name} is not source {b.movie.source} of {b.name}")
    _write(serialize(MovieDocument(f"{a.name}_{b.name}", vcompose(a.movie, b.movie))), args.output)
    return OK


_OPS = {"star": star_movie, "bar": bar_movie, "dagger": dagger_movie}


def cmd_op(args) -> int:
    doc = _read(args.file)
    _write(serialize(MovieDocument(f"{doc.name}_{args.op}", _OPS[args.op](doc.movie))), args.output)
    return OK


def cmd_eq(args) -> int:
    a, b = _read(args.a).movie, _read(args.b).movie
    if a.source != b.source or a.target != b.target:
        raise _Exit(BOUNDARY, f"boundaries differ: {a.source} => {a.target} vs {b.source} => {b.target}")
    ca, cb = drop_identities(a), drop_identities(b)
    if (ca, cb) != (a, b):
        print("# identity slices removed before searching")
    v = decide_equal(ca, cb, depth=args.depth, node_budget=args.budget, catalog_bound=args.catalog_bound)
    if not v:
        print(f"unknown\texplored={v.explored}\tdepth={v.depth}", file=sys.stderr)
        return FAILED
    print(f"# equal: {v.relation_steps} relation steps, {len(v.path)} steps in all")
    for step in v.path:
        print(step)
    return OK


def cmd_invariants(args) -> int:
    doc = _read(args.file)
    inv = surface_invariants(doc.movie)
    print(f"euler\t{inv.euler}")
    print(f"births\t{inv.births}")
    print(f"deaths\t{inv.deaths}")
    print(f"saddles\t{inv.saddles}")
    if inv.closed:
        print(f"components\t{inv.components}")
        if args.assume_orientable:
            try:
                genera = inv.genus()
            except ValueError as e:
                raise _Exit(FAILED, str(e)) from None
            print("genus\t" + ",".join(str(g) for g in genera))
    elif args.assume_orientable:
        raise _Exit(FAILED, "genus needs a closed movie")
    return OK


def cmd_render(args) -> int:
    doc = _read(args.file)
    _write(render_movie(doc.movie, args.format), args.output)
    return OK


def cmd_expand(args) -> int:
    try:
        c = parse_cell(args.cellspec)
    except ParseError as e:
        raise _Exit(PARSE, str(e)) from None
    except DocumentTypeError as e:
        raise _Exit(TYPE, str(e)) from None
    try:
        m = expand_generator(c)
    except Unsupported as e:
        raise _Exit(FAILED, f"cannot expand {args.cellspec}: {e}") from None
    name = "expand_" + "".join(ch if ch.isalnum() else "_" for ch in args.cellspec).strip("_")
    _write(serialize(MovieDocument(name, m)), args.output)
    return OK


def relation_report(max_index: int):
    """(id, params, variant, verdict) for every enumerated instance."""
    for schema in SCHEMAS:
        for p in schema_params(schema.id, max_index):
            ptext = ",".join(f"{k}={v}" for k, v in p.items()) or "-"
            for v in VARIANTS:
                vtext = "+".join(v) or "plain"
                try:
                    ok = check_typing(instantiate(schema.id, p, v))
                    verdict = "PASS" if ok else "FAIL"
                except TangleError as e:
                    verdict = f"FAIL {e}"
                yield schema.id, ptext, vtext, verdict


def cmd_relations(args) -> int:
    lines = []
    failed = 0
    for rid, ptext, vtext, verdict in relation_report(args.max_index):
        lines.append(f"{rid}\t{ptext}\t{vtext}\t{verdict}")
        if verdict != "PASS":
            failed += 1
            print(lines[-1], file=sys.stderr)
    if args.report:
        Path(args.report).write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"{len(lines)} instances, {failed} failures")
    return FAILED if failed else OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="twotangles", description="Movies of unframed unoriented 2-tangles.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="parse and type-check a .movie file")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("compose", help="vertical composite A then B")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_compose)

    p = sub.add_parser("op", help="apply star, bar or dagger")
    p.add_argument("op", choices=sorted(_OPS))
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_op)

    p = sub.add_parser("eq", help="search for a rewrite path between two movies")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--depth", type=int, default=3)
    p.add_argument("--budget", type=int, default=20000)
    p.add_argument("--catalog-bound", type=int, default=1)
    p.set_defaults(func=cmd_eq)

    p = sub.add_parser("invariants", help="Euler characteristic and components")
    p.add_argument("file")
    p.add_argument("--assume-orientable", action="store_true",
                   help="also report the genus of each component of a closed surface")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("render", help="draw every frame of a movie")
    p.add_argument("file")
    p.add_argument("--format", choices=("ascii", "svg"), default="ascii")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("expand", help="structural composite of a generator")
    p.add_argument("cellspec")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("relations", help="relation catalog tools")
    rsub = p.add_subparsers(dest="action", required=True)
    q = rsub.add_parser("check", help="type-check every relation instance")
    q.add_argument("--max-index", type=int, default=1)
    q.add_argument("--report")
    q.set_defaults(func=cmd_relations)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        # argparse reports usage errors itself
        return PARSE if e.code else OK
    try:
        return args.func(args)
    except _Exit as e:
        if e.message:
            print(e.message, file=sys.stderr)
        return e.code
    except BoundaryMismatch as e:
        print(e, file=sys.stderr)
        return BOUNDARY
    except (TypeMismatch, IllFormed, DocumentTypeError) as e:
        print(e, file=sys.stderr)
        return TYPE
    except (NotClosed, Unsupported) as e:
        print(e, file=sys.stderr)
        return FAILED


cli_main = main


if __name__ == "__main__":
    sys.exit(main())
