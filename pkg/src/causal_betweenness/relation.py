"""Ternary relations, the betweenness axioms and the pair digraph G(B).

Elements are the integers ``1..m``. A triple is a plain ``(a, b, c)`` tuple
and a pair is a sorted 2-tuple ``(i, j)`` with ``i < j``.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

from .errors import CyclicGraph, NotABetweenness

Triple = Tuple[int, int, int]
Pair = Tuple[int, int]

DISTINCTNESS = "distinctness"
REVERSAL = "reversal-closure"
ROTATION = "rotation-exclusion"


def pair(i: int, j: int) -> Pair:
    if i == j:
        raise ValueError(f"a pair needs two distinct elements, got {i} twice")
    return (i, j) if i < j else (j, i)


def all_pairs(m: int) -> List[Pair]:
    return list(combinations(range(1, m + 1), 2))


@dataclass(frozen=True)
class TernaryRelation:
    m: int
    triples: FrozenSet[Triple] = frozenset()

    def __post_init__(self):
        if self.m < 0:
            raise ValueError("ground-set size must be nonnegative")
        triples = frozenset(tuple(int(x) for x in t) for t in self.triples)
        for t in triples:
            if len(t) != 3:
                raise ValueError(f"not a triple: {t}")
            if not all(1 <= x <= self.m for x in t):
                raise ValueError(f"triple {t} has an element outside 1..{self.m}")
        object.__setattr__(self, "triples", triples)

    def __contains__(self, t) -> bool:
        return tuple(t) in self.triples

    def __iter__(self):
        return iter(sorted(self.triples))

    def __len__(self) -> int:
        return len(self.triples)


def close_reversal(rel: TernaryRelation) -> TernaryRelation:
    return TernaryRelation(rel.m, rel.triples | {(c, b, a) for a, b, c in rel.triples})


@dataclass(frozen=True)
class BetweennessReport:
    violations: Tuple[Tuple[str, Triple], ...] = ()

    @property
    def is_betweenness(self) -> bool:
        return not self.violations


def check_betweenness(rel: TernaryRelation) -> BetweennessReport:
    """Report every triple that breaks one of the three betweenness axioms.

    A triple can appear several times, once per axiom it breaks.
    """
    violations = []
    for a, b, c in sorted(rel.triples):
        if len({a, b, c}) < 3:
            violations.append((DISTINCTNESS, (a, b, c)))
        if (c, b, a) not in rel.triples:
            violations.append((REVERSAL, (a, b, c)))
        if (c, a, b) in rel.triples:
            violations.append((ROTATION, (a, b, c)))
    return BetweennessReport(tuple(violations))


@dataclass(frozen=True)
class PairDigraph:
    m: int
    edges: FrozenSet[Tuple[Pair, Pair]] = frozenset()

    @property
    def vertices(self) -> List[Pair]:
        return all_pairs(self.m)

    def successors(self) -> Dict[Pair, List[Pair]]:
        succ: Dict[Pair, List[Pair]] = {v: [] for v in self.vertices}
        for u, v in self.edges:
            succ[u].append(v)
        for targets in succ.values():
            targets.sort()
        return succ


def _require_betweenness(rel: TernaryRelation) -> None:
    report = check_betweenness(rel)
    if not report.is_betweenness:
        raise NotABetweenness(report)


def derived_digraph(rel: TernaryRelation) -> PairDigraph:
    """Edge ``{a,b} -> {a,c}`` for every ``(a, b, c)`` in the relation."""
    _require_betweenness(rel)
    edges = frozenset((pair(a, b), pair(a, c)) for a, b, c in rel.triples)
    return PairDigraph(rel.m, edges)


def _canonical_rotation(cycle: List[Pair]) -> List[Pair]:
    start = cycle.index(min(cycle))
    return cycle[start:] + cycle[:start]


def find_cycle(graph: PairDigraph) -> Optional[List[Pair]]:
    """Return a directed cycle (without repeating its first vertex) or None.

    Iterative DFS over vertices and successors in lexicographic order. The
    cycle is rotated to start at its smallest pair.
    """
    succ = graph.successors()
    WHITE, GRAY, BLACK = 0, 1, 2
    color = {v: WHITE for v in succ}
    for root in graph.vertices:
        if color[root] != WHITE:
            continue
        path = [root]
        stack = [iter(succ[root])]
        color[root] = GRAY
        while stack:
            nxt = next(stack[-1], None)
            if nxt is None:
                color[path.pop()] = BLACK
                stack.pop()
            elif color[nxt] == GRAY:
                cycle = path[path.index(nxt):]
                return _canonical_rotation(cycle)
            elif color[nxt] == WHITE:
                color[nxt] = GRAY
                path.append(nxt)
                stack.append(iter(succ[nxt]))
    return None


def topological_rank(graph: PairDigraph) -> Dict[Pair, int]:
    """Bijection onto ``1..C(m,2)`` with ``rank[u] > rank[v]`` on every edge.

    Sinks are ranked first; among available pairs the smallest goes next.
    """
    outdeg = {v: 0 for v in graph.vertices}
    preds: Dict[Pair, List[Pair]] = {v: [] for v in graph.vertices}
    for u, v in graph.edges:
        outdeg[u] += 1
        preds[v].append(u)
    heap = [v for v, d in outdeg.items() if d == 0]
    heapq.heapify(heap)
    rank: Dict[Pair, int] = {}
    while heap:
        v = heapq.heappop(heap)
        rank[v] = len(rank) + 1
        for u in preds[v]:
            outdeg[u] -= 1
            if outdeg[u] == 0:
                heapq.heappush(heap, u)
    if len(rank) < len(outdeg):
        raise CyclicGraph(find_cycle(graph))
    return rank


ABSTRACT_CAUSAL = "abstract-causal"
NOT_BETWEENNESS = "not-betweenness"
CYCLIC = "cyclic"


@dataclass(frozen=True)
class Theorem1Certificate:
    verdict: str
    report: BetweennessReport
    rank: Optional[Dict[Pair, int]] = None
    cycle: Optional[List[Pair]] = None

    @property
    def realizable(self) -> bool:
        return self.verdict == ABSTRACT_CAUSAL


def decide_theorem1(rel: TernaryRelation) -> Theorem1Certificate:
    """Decide whether ``rel`` is an abstract causal betweenness.

    It is exactly when the axioms hold and G(B) is acyclic; the certificate
    carries either a monotone rank, the axiom violations, or a cycle.
    """
    report = check_betweenness(rel)
    if not report.is_betweenness:
        return Theorem1Certificate(NOT_BETWEENNESS, report)
    graph = derived_digraph(rel)
    cycle = find_cycle(graph)
    if cycle is not None:
        return Theorem1Certificate(CYCLIC, report, cycle=cycle)
    return Theorem1Certificate(ABSTRACT_CAUSAL, report, rank=topological_rank(graph))


def verify_certificate(rel: TernaryRelation, cert: Theorem1Certificate) -> bool:
    """Re-check a certificate against ``rel`` without trusting how it was made."""
    report = check_betweenness(rel)
    if cert.verdict == NOT_BETWEENNESS:
        return not report.is_betweenness
    if not report.is_betweenness:
        return False
    edges = derived_digraph(rel).edges
    if cert.verdict == CYCLIC:
        cyc = cert.cycle or []
        return bool(cyc) and all(
            (cyc[i], cyc[(i + 1) % len(cyc)]) in edges for i in range(len(cyc))
        )
    if cert.verdict == ABSTRACT_CAUSAL and cert.rank is not None:
        n = len(all_pairs(rel.m))
        if sorted(cert.rank.values()) != list(range(1, n + 1)):
            return False
        return all(cert.rank[u] > cert.rank[v] for u, v in edges)
    return False


def check_transitivity(rel: TernaryRelation) -> Tuple[bool, List[Tuple[Triple, Triple]]]:
    """Check ``(A,B,C), (A,D,B) in R  =>  (A,D,C) in R``.

    Returns the verdict and every premise pair whose conclusion is missing.
    """
    _require_betweenness(rel)
    by_ends: Dict[Tuple[int, int], List[int]] = {}
    for a, d, b in rel.triples:
        by_ends.setdefault((a, b), []).append(d)
    missing = []
    for a, b, c in sorted(rel.triples):
        for d in sorted(by_ends.get((a, b), ())):
            if (a, d, c) not in rel.triples:
                missing.append(((a, b, c), (a, d, b)))
    return not missing, missing


def sigma(rel: TernaryRelation, a: int, b: int) -> int:
    """Number of elements lying between ``a`` and ``b``."""
    if a == b:
        raise ValueError("sigma needs two distinct elements")
    return sum(1 for x, _, y in rel.triples if x == a and y == b)


def middles_by_triad(rel: TernaryRelation) -> Dict[FrozenSet[int], set]:
    """Map each 3-set hosting a triple to the set of its middle elements."""
    out: Dict[FrozenSet[int], set] = {}
    for a, b, c in rel.triples:
        if len({a, b, c}) == 3:
            out.setdefault(frozenset((a, b, c)), set()).add(b)
    return out


def format_pair(p: Pair, first: Optional[int] = None) -> str:
    i, j = p
    if first == j:
        i, j = j, i
    return f"{{{i},{j}}}"


def format_cycle(cycle: Iterable[Pair]) -> str:
    """Render a cycle as ``{4,1}->{4,2}->{4,3}->{4,1}``.

    Each pair is written with the element it shares with the next pair first.
    """
    cyc = list(cycle)
    parts = []
    for k, p in enumerate(cyc):
        shared = set(p) & set(cyc[(k + 1) % len(cyc)])
        parts.append(format_pair(p, min(shared) if shared else None))
    return "->".join(parts + parts[:1])
