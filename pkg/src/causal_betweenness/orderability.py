"""Total orderability of ternary relations.

A relation is totally orderable when the ground set can be laid out on a
line with every triple's middle element strictly between its two ends.
Deciding this is NP-complete, so the solver is a plain backtracking search.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Dict, List, Mapping, Optional, Set

from .errors import TooLarge
from .relation import TernaryRelation

BRUTE_FORCE_LIMIT = 10


@dataclass(frozen=True)
class OrderVerdict:
    witness: Optional[Dict[int, int]]
    explored: int = 0

    @property
    def satisfiable(self) -> bool:
        return self.witness is not None


def verify_order(rel: TernaryRelation, t: Mapping[int, int]) -> bool:
    for a, b, c in rel.triples:
        if not (t[a] < t[b] < t[c] or t[c] < t[b] < t[a]):
            return False
    return True


def brute_force_order(rel: TernaryRelation, limit: int = BRUTE_FORCE_LIMIT) -> OrderVerdict:
    if rel.m > limit:
        raise TooLarge(f"{rel.m} elements is too many to enumerate (limit {limit})")
    elements = range(1, rel.m + 1)
    explored = 0
    for perm in permutations(range(1, rel.m + 1)):
        explored += 1
        t = dict(zip(elements, perm))
        if verify_order(rel, t):
            return OrderVerdict(t, explored)
    return OrderVerdict(None, explored)


class _Search:
    def __init__(self, rel: TernaryRelation):
        self.n = rel.m
        self.triples = sorted(rel.triples)
        self.touching: Dict[int, List[tuple]] = {x: [] for x in range(1, self.n + 1)}
        for t in self.triples:
            for x in set(t):
                self.touching[x].append(t)
        self.assigned: Dict[int, int] = {}
        self.nodes = 0

    def _prune(self, domains: Dict[int, Set[int]], x: int) -> Optional[Dict[int, Set[int]]]:
        """Forward-check after placing ``x``; None on a wipeout."""
        pos = self.assigned[x]
        new = {v: d - {pos} for v, d in domains.items() if v not in self.assigned}
        for a, b, c in self.touching[x]:
            ta, tb, tc = (self.assigned.get(v) for v in (a, b, c))
            known = sum(v is not None for v in (ta, tb, tc))
            if known == 3:
                if not (ta < tb < tc or tc < tb < ta):
                    return None
            elif known == 2:
                if tb is None:
                    lo, hi = sorted((ta, tc))
                    new[b] = {p for p in new[b] if lo < p < hi}
                elif ta is None:
                    new[a] = {p for p in new[a] if (p < tb) == (tb < tc) and p != tb}
                else:
                    new[c] = {p for p in new[c] if (p > tb) == (ta < tb) and p != tb}
        if any(not d for d in new.values()):
            return None
        return new

    def _pick(self, domains: Dict[int, Set[int]]) -> int:
        # most constrained first, then most triples, then smallest id
        return min(domains, key=lambda v: (len(domains[v]), -len(self.touching[v]), v))

    def run(self, domains: Dict[int, Set[int]]) -> bool:
        self.nodes += 1
        if not domains:
            return True
        x = self._pick(domains)
        for pos in sorted(domains[x]):
            self.assigned[x] = pos
            pruned = self._prune(domains, x)
            if pruned is not None and self.run(pruned):
                return True
            del self.assigned[x]
        return False


def solve_order(rel: TernaryRelation) -> OrderVerdict:
    """Backtracking search for positions ``1..m`` satisfying every triple."""
    if any(len(set(t)) < 3 for t in rel.triples):
        return OrderVerdict(None, 0)
    search = _Search(rel)
    domains = {x: set(range(1, rel.m + 1)) for x in range(1, rel.m + 1)}
    if search.run(domains):
        t = dict(sorted(search.assigned.items()))
        assert verify_order(rel, t)
        return OrderVerdict(t, search.nodes)
    return OrderVerdict(None, search.nodes)


def reverse_order(t: Mapping[int, int]) -> Dict[int, int]:
    n = len(t)
    return {x: n + 1 - p for x, p in t.items()}
