"""Exact finite probability spaces and Reichenbach's causal betweenness.

``B`` is causally between ``A`` and ``C`` when

    (1) P(AC) > P(A) P(C)
    (2) P(C|B) > P(C|A)
    (3) P(A|B) > P(A|C)
    (4) P(AC|B) = P(A|B) P(C|B)          (B screens off A from C)
    (5) P(B-A) > 0 and P(B-C) > 0

All values are ``Fraction``; the equality in (4) is decided exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from typing import Dict, FrozenSet, Hashable, Iterable, Optional, Sequence, Tuple

from .errors import ConditionOnNull, DuplicateEvents
from .relation import TernaryRelation


@dataclass(frozen=True)
class Event:
    name: str
    members: FrozenSet[int]

    def __and__(self, other: "Event") -> "Event":
        return Event(f"{self.name}{other.name}", self.members & other.members)

    def __sub__(self, other: "Event") -> "Event":
        return Event(f"{self.name}-{other.name}", self.members - other.members)


@dataclass(frozen=True)
class ProbabilitySpace:
    atoms: Tuple[Tuple[Hashable, Fraction], ...]
    events: Tuple[Event, ...] = ()
    _index: Dict[Hashable, int] = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        atoms = tuple((label, Fraction(w)) for label, w in self.atoms)
        if any(w < 0 for _, w in atoms):
            raise ValueError("atom weights must be nonnegative")
        if sum(w for _, w in atoms) != 1:
            raise ValueError("atom weights must sum to exactly 1")
        object.__setattr__(self, "atoms", atoms)
        index = {label: k for k, (label, _) in enumerate(atoms)}
        if len(index) != len(atoms):
            raise ValueError("atom labels must be unique")
        object.__setattr__(self, "_index", index)
        for e in self.events:
            self._check_event(e)

    def _check_event(self, e: Event) -> None:
        if any(not 0 <= k < len(self.atoms) for k in e.members):
            raise ValueError(f"event {e.name} refers to atoms outside the space")

    @property
    def weights(self) -> Tuple[Fraction, ...]:
        return tuple(w for _, w in self.atoms)

    def event(self, name: str, labels: Iterable[Hashable]) -> Event:
        """Build an event from atom labels (rather than atom positions)."""
        try:
            return Event(name, frozenset(self._index[lab] for lab in labels))
        except KeyError as exc:
            raise ValueError(f"event {name}: unknown atom {exc.args[0]!r}") from None

    def everything(self) -> Event:
        return Event("S", frozenset(range(len(self.atoms))))


def probability(space: ProbabilitySpace, event: Event) -> Fraction:
    w = space.atoms
    return sum((w[k][1] for k in event.members), Fraction(0))


def conditional(space: ProbabilitySpace, a: Event, b: Event) -> Fraction:
    pb = probability(space, b)
    if pb == 0:
        raise ConditionOnNull(f"P({b.name}) = 0")
    return probability(space, a & b) / pb


def correlation_ratio(space: ProbabilitySpace, a: Event, b: Event) -> Fraction:
    """``P(AB) / (P(A) P(B))``; strictly decreasing along every edge of G(CB(X))."""
    pa, pb = probability(space, a), probability(space, b)
    if pa == 0 or pb == 0:
        raise ConditionOnNull(f"P({a.name}) P({b.name}) = 0")
    return probability(space, a & b) / (pa * pb)


@dataclass(frozen=True)
class CbBreakdown:
    c1: bool
    c2: bool
    c3: bool
    c4: bool
    c5: bool
    well_defined: bool
    values: Dict[str, Fraction]

    @property
    def causally_between(self) -> bool:
        return self.c1 and self.c2 and self.c3 and self.c4 and self.c5


def _breakdown(pa, pb, pc, pab, pac, pbc, pabc) -> CbBreakdown:
    values = {
        "P(A)": pa, "P(B)": pb, "P(C)": pc,
        "P(AB)": pab, "P(AC)": pac, "P(BC)": pbc, "P(ABC)": pabc,
    }
    c5 = pb - pab > 0 and pb - pbc > 0
    c1 = pac > pa * pc
    c2 = c3 = c4 = False
    if pb > 0:
        if pa > 0:
            values["P(C|B)"], values["P(C|A)"] = pbc / pb, pac / pa
            c2 = values["P(C|B)"] > values["P(C|A)"]
        if pc > 0:
            values["P(A|B)"], values["P(A|C)"] = pab / pb, pac / pc
            c3 = values["P(A|B)"] > values["P(A|C)"]
        values["P(AC|B)"] = pabc / pb
        values["P(A|B)P(C|B)"] = pab * pbc / (pb * pb)
        c4 = values["P(AC|B)"] == values["P(A|B)P(C|B)"]
    return CbBreakdown(c1, c2, c3, c4, c5, pa > 0 and pb > 0 and pc > 0, values)


def causal_breakdown(space: ProbabilitySpace, a: Event, b: Event, c: Event) -> CbBreakdown:
    """Evaluate the five conditions for ``b`` between ``a`` and ``c``.

    Conditions whose conditionals are undefined are reported false.
    """
    p = lambda e: probability(space, e)  # noqa: E731
    return _breakdown(p(a), p(b), p(c), p(a & b), p(a & c), p(b & c), p(a & b & c))


def is_causally_between(space: ProbabilitySpace, a: Event, b: Event, c: Event) -> bool:
    return causal_breakdown(space, a, b, c).causally_between


class _Intersections:
    """Memoized probabilities of intersections of up to three events."""

    def __init__(self, space: ProbabilitySpace, events: Sequence[Event]):
        self.weights = space.weights
        self.events = events
        self.cache: Dict[Tuple[int, ...], Fraction] = {}

    def __call__(self, *idx: int) -> Fraction:
        key = tuple(sorted(idx))
        if key not in self.cache:
            members = self.events[key[0]].members
            for k in key[1:]:
                members = members & self.events[k].members
            self.cache[key] = sum((self.weights[s] for s in members), Fraction(0))
        return self.cache[key]


def extract_cb(space: ProbabilitySpace, events: Optional[Sequence[Event]] = None) -> TernaryRelation:
    """All ordered triples ``(i, j, k)`` with ``X[j]`` causally between ``X[i]``, ``X[k]``.

    Positions are 1-based. ``events`` defaults to the events stored on the space.
    """
    xs = list(space.events if events is None else events)
    seen: Dict[FrozenSet[int], str] = {}
    for e in xs:
        if e.members in seen:
            raise DuplicateEvents(f"events {seen[e.members]} and {e.name} are the same set")
        seen[e.members] = e.name
    p = _Intersections(space, xs)
    found = set()
    for i, j, k in permutations(range(len(xs)), 3):
        bd = _breakdown(p(i), p(j), p(k), p(i, j), p(i, k), p(j, k), p(i, j, k))
        if bd.causally_between:
            found.add((i + 1, j + 1, k + 1))
    return TernaryRelation(len(xs), frozenset(found))

