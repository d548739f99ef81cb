"""Reading and writing the text formats used by the command line.

Relation files::

    m 4
    # comment
    1 2 3
    3 2 1

Space dumps are JSON with every rational written as an exact ``"num/den"``
string. Empirical spaces come as CSV (``atom,weight``) plus an events file
with lines ``name: label label ...``.
"""

from __future__ import annotations

import csv
import io
import json
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .errors import ConstructionError, ParseError
from .probspace import Event, ProbabilitySpace
from .relation import PairDigraph, TernaryRelation, Triple, close_reversal, format_pair
from .witness import (
    ConstructionParams,
    MomentTables,
    StructuredSpace,
    build_weights,
    expand,
)

_RATIONAL = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


def parse_rational(text: str, line: Optional[int] = None) -> Fraction:
    """Parse ``"num/den"`` or an integer. Floats are refused on purpose."""
    match = _RATIONAL.match(str(text))
    if not match:
        raise ParseError(f"not an exact rational: {text!r}", line)
    num, den = match.groups()
    if den is not None and int(den) == 0:
        raise ParseError(f"zero denominator in {text!r}", line)
    return Fraction(int(num), int(den) if den else 1)


def format_rational(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class ParsedRelation:
    relation: TernaryRelation
    lines: Dict[Triple, int]


def parse_relation(text: str, close: bool = False) -> ParsedRelation:
    m = None
    triples: Dict[Triple, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if m is None:
            if len(fields) != 2 or fields[0] != "m" or not fields[1].isdigit():
                raise ParseError("expected header 'm <integer>'", lineno)
            m = int(fields[1])
            continue
        if len(fields) != 3 or not all(re.fullmatch(r"-?\d+", f) for f in fields):
            raise ParseError(f"expected three integers, got {line!r}", lineno)
        t = tuple(int(f) for f in fields)
        if not all(1 <= x <= m for x in t):
            raise ParseError(f"element outside 1..{m} in {line!r}", lineno)
        triples.setdefault(t, lineno)
    if m is None:
        raise ParseError("missing header 'm <integer>'")
    rel = TernaryRelation(m, frozenset(triples))
    if close:
        rel = close_reversal(rel)
    return ParsedRelation(rel, triples)


def format_relation(rel: TernaryRelation) -> str:
    lines = [f"m {rel.m}"]
    lines += [f"{a} {b} {c}" for a, b, c in sorted(rel.triples)]
    return "\n".join(lines) + "\n"


def dump_space(space: StructuredSpace, expand_limit: int = 20) -> str:
    data = {
        "m": space.m,
        "epsilon": format_rational(space.params.epsilon),
        "delta": format_rational(space.params.delta),
        "beta": [[i, j, format_rational(b)] for (i, j), b in sorted(space.tables.beta.items())],
        "gamma": [[i, j, k, format_rational(g)] for (i, j, k), g in sorted(space.tables.gamma.items())],
    }
    if space.m <= expand_limit:
        base = space.default_weight
        data["atoms"] = [
            [str(mask), format_rational(space.weights.get(mask, base))]
            for mask in range(2**space.m)
        ]
    return json.dumps(data, indent=1) + "\n"


def load_space_dump(text: str) -> Tuple[StructuredSpace, Optional[ProbabilitySpace]]:
    """Rebuild the structured witness from its tables; atoms are cross-checked."""
    try:
        data = json.loads(text)
        m = int(data["m"])
        params = ConstructionParams(
            m, parse_rational(data["epsilon"]), parse_rational(data["delta"])
        )
        beta = {(int(i), int(j)): parse_rational(b) for i, j, b in data["beta"]}
        gamma = {(int(i), int(j), int(k)): parse_rational(g) for i, j, k, g in data["gamma"]}
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(f"malformed space dump: {exc}") from None
    try:
        space = build_weights(params, MomentTables(beta, gamma))
    except ConstructionError as exc:
        raise ParseError(f"tables do not define a valid witness: {exc}") from None
    explicit = None
    if "atoms" in data:
        rebuilt = expand(space, limit=m)
        atoms = tuple((int(mask), parse_rational(w)) for mask, w in data["atoms"])
        if atoms != rebuilt.atoms:
            raise ParseError("atom weights disagree with the beta/gamma tables")
        explicit = rebuilt
    return space, explicit


def read_csv_space(text: str) -> ProbabilitySpace:
    """CSV ``atom,weight``. All-integer weights are counts and get normalized."""
    reader = csv.reader(io.StringIO(text))
    rows = [r for r in reader if r and any(cell.strip() for cell in r)]
    if not rows or [c.strip() for c in rows[0]] != ["atom", "weight"]:
        raise ParseError("expected CSV header 'atom,weight'", 1)
    labels, weights = [], []
    for lineno, row in enumerate(rows[1:], start=2):
        if len(row) != 2:
            raise ParseError(f"expected two columns, got {row}", lineno)
        labels.append(row[0].strip())
        w = parse_rational(row[1], lineno)
        if w < 0:
            raise ParseError("negative weight", lineno)
        weights.append(w)
    total = sum(weights, Fraction(0))
    counts = all("/" not in row[1] for row in rows[1:])
    if counts and total > 0:
        weights = [w / total for w in weights]
    elif total != 1:
        raise ParseError(f"rational weights sum to {total}, not 1")
    try:
        return ProbabilitySpace(tuple(zip(labels, weights)))
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def read_events(text: str, space: ProbabilitySpace) -> List[Event]:
    events = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if ":" not in line:
            raise ParseError("expected 'name: label label ...'", lineno)
        name, rest = line.split(":", 1)
        labels = rest.split()
        # dump atoms are integer bitmasks, CSV atoms are strings
        if all(isinstance(lab, int) for lab, _ in space.atoms):
            if not all(re.fullmatch(r"\d+", lab) for lab in labels):
                raise ParseError("atom labels must be integers for this space", lineno)
            labels = [int(lab) for lab in labels]
        try:
            events.append(space.event(name.strip(), labels))
        except ValueError as exc:
            raise ParseError(str(exc), lineno) from None
    return events


def to_dot(graph: PairDigraph) -> str:
    out = ["digraph G {"]
    for v in graph.vertices:
        out.append(f'  "{format_pair(v)}";')
    for u, v in sorted(graph.edges):
        out.append(f'  "{format_pair(u)}" -> "{format_pair(v)}";')
    out.append("}")
    return "\n".join(out) + "\n"
