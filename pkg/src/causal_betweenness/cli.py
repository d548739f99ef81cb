"""Command-line interface.

Exit codes: 0 success, 1 betweenness axioms fail (or round-trip mismatch),
2 cyclic / not realizable / UNSAT, 3 parse or I/O error.
"""

from __future__ import annotations

import argparse
import sys
from typing import List, Optional

from .errors import DuplicateEvents, NotABetweenness, NotRealizable, ParseError, TooLarge
from .formats import (
    dump_space,
    format_relation,
    load_space_dump,
    parse_relation,
    read_csv_space,
    read_events,
    to_dot,
)
from .orderability import brute_force_order, solve_order
from .probspace import extract_cb
from .relation import (
    ABSTRACT_CAUSAL,
    CYCLIC,
    decide_theorem1,
    derived_digraph,
    format_cycle,
    format_pair,
)
from .witness import EXPAND_LIMIT, construct_witness, expand

EXIT_OK, EXIT_AXIOMS, EXIT_CYCLIC, EXIT_INPUT = 0, 1, 2, 3


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def _load_relation(args):
    return parse_relation(_read(args.relation), close=args.close_reversal)


def _certificate_lines(cert, lines) -> List[str]:
    if cert.verdict == ABSTRACT_CAUSAL:
        out = [ABSTRACT_CAUSAL]
        out += [f"rank {format_pair(p)} {r}" for p, r in sorted(cert.rank.items())]
        return out
    if cert.verdict == CYCLIC:
        return [f"cyclic: {format_cycle(cert.cycle)}"]
    out = []
    for axiom, t in cert.report.violations:
        where = f" at line {lines[t]}" if t in lines else ""
        out.append(f"not-betweenness: {axiom} violated{where} ({' '.join(map(str, t))})")
    return out


def _exit_for(cert) -> int:
    if cert.verdict == ABSTRACT_CAUSAL:
        return EXIT_OK
    return EXIT_CYCLIC if cert.verdict == CYCLIC else EXIT_AXIOMS


def cmd_check(args) -> int:
    parsed = _load_relation(args)
    cert = decide_theorem1(parsed.relation)
    print("\n".join(_certificate_lines(cert, parsed.lines)))
    return _exit_for(cert)


def cmd_witness(args) -> int:
    parsed = _load_relation(args)
    try:
        space = construct_witness(parsed.relation)
    except NotRealizable as exc:
        print("\n".join(_certificate_lines(exc.certificate, parsed.lines)), file=sys.stderr)
        return _exit_for(exc.certificate)
    _write(args.output, dump_space(space, expand_limit=args.expand_limit))
    return EXIT_OK


def cmd_extract(args) -> int:
    text = _read(args.space)
    if text.lstrip().startswith("{"):
        structured, explicit = load_space_dump(text)
        space = explicit if explicit is not None else expand(structured, limit=args.expand_limit)
    else:
        space = read_csv_space(text)
    if args.events:
        events = read_events(_read(args.events), space)
    elif space.events:
        events = list(space.events)
    else:
        raise ParseError("an events file is required for CSV spaces")
    _write(args.output, format_relation(extract_cb(space, events)))
    return EXIT_OK


def cmd_order(args) -> int:
    rel = _load_relation(args).relation
    verdict = brute_force_order(rel) if args.brute_force else solve_order(rel)
    if not verdict.satisfiable:
        print("UNSAT")
        return EXIT_CYCLIC
    print("SAT")
    for x, pos in sorted(verdict.witness.items()):
        print(f"{x} {pos}")
    return EXIT_OK


def cmd_roundtrip(args) -> int:
    parsed = _load_relation(args)
    rel = parsed.relation
    try:
        space = construct_witness(rel)
    except NotRealizable as exc:
        print("\n".join(_certificate_lines(exc.certificate, parsed.lines)), file=sys.stderr)
        return _exit_for(exc.certificate)
    back = extract_cb(expand(space, limit=args.expand_limit))
    if back == rel:
        print(f"PASS m={rel.m} triples={len(rel)}")
        return EXIT_OK
    print(f"FAIL missing={sorted(rel.triples - back.triples)} extra={sorted(back.triples - rel.triples)}")
    return EXIT_AXIOMS


def cmd_export_dot(args) -> int:
    parsed = _load_relation(args)
    try:
        graph = derived_digraph(parsed.relation)
    except NotABetweenness:
        cert = decide_theorem1(parsed.relation)
        print("\n".join(_certificate_lines(cert, parsed.lines)), file=sys.stderr)
        return EXIT_AXIOMS
    _write(args.output, to_dot(graph))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="causal-betweenness",
        description="Recognize, realize and extract causal betweenness relations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def relation_cmd(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("relation", help="relation file, or - for stdin")
        p.add_argument("--close-reversal", action="store_true",
                       help="add (c,b,a) for every (a,b,c) on ingest")
        p.set_defaults(func=func)
        return p

    relation_cmd("check", cmd_check, "decide whether a relation is an abstract causal betweenness")
    p = relation_cmd("witness", cmd_witness, "write an exact probability space realizing the relation")
    p.add_argument("-o", "--output", default="-")
    p.add_argument("--expand-limit", type=int, default=EXPAND_LIMIT,
                   help="include explicit atoms when m is at most this")
    p = relation_cmd("order", cmd_order, "decide total orderability")
    p.add_argument("--brute-force", action="store_true", help="enumerate permutations instead")
    p = relation_cmd("roundtrip", cmd_roundtrip, "witness, expand, extract and compare")
    p.add_argument("--expand-limit", type=int, default=EXPAND_LIMIT)
    p = relation_cmd("export-dot", cmd_export_dot, "write the pair digraph G(B) as DOT")
    p.add_argument("-o", "--output", default="-")

    p = sub.add_parser("extract", help="extract the causal betweenness relation of a space")
    p.add_argument("space", help="space dump (JSON) or CSV with header atom,weight")
    p.add_argument("events", nargs="?", help="event file, lines 'name: label label ...'")
    p.add_argument("-o", "--output", default="-")
    p.add_argument("--expand-limit", type=int, default=EXPAND_LIMIT)
    p.set_defaults(func=cmd_extract)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, DuplicateEvents, TooLarge, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
