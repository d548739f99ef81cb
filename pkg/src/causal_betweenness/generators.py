"""Random instances for tests and experiment scripts.

Every generator takes a ``random.Random`` so runs are reproducible.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Sequence

from .probspace import Event, ProbabilitySpace
from .relation import TernaryRelation, all_pairs, check_betweenness, pair


def order_relation(order: Sequence[int], keep: float, rng: random.Random) -> TernaryRelation:
    """Betweenness consistent with a hidden line order, each 3-set kept with prob ``keep``.

    ``order`` lists the elements ``1..n`` from left to right.
    """
    n = len(order)
    triples = set()
    for x, y, z in combinations(order, 3):
        if rng.random() < keep:
            triples |= {(x, y, z), (z, y, x)}
    return TernaryRelation(n, frozenset(triples))


def random_orderable(n: int, rng: random.Random, keep: float = 0.5) -> TernaryRelation:
    order = list(range(1, n + 1))
    rng.shuffle(order)
    return order_relation(order, keep, rng)


def random_acyclic(m: int, rng: random.Random, keep: float = 0.6) -> TernaryRelation:
    """Pick a random pair ranking, then only triples it makes monotone.

    A triple ``(i, j, k)`` is admissible when both ``{i,j}`` and ``{j,k}``
    outrank ``{i,k}``; every edge of G then points down the ranking.
    """
    pairs = all_pairs(m)
    rng.shuffle(pairs)
    rank: Dict = {p: r for r, p in enumerate(pairs, start=1)}
    triples = set()
    for triad in combinations(range(1, m + 1), 3):
        if rng.random() >= keep:
            continue
        options = []
        for j in triad:
            i, k = (x for x in triad if x != j)
            if rank[pair(i, j)] > rank[pair(i, k)] and rank[pair(j, k)] > rank[pair(i, k)]:
                options.append((i, j, k))
        if options:
            i, j, k = rng.choice(options)
            triples |= {(i, j, k), (k, j, i)}
    rel = TernaryRelation(m, frozenset(triples))
    if not check_betweenness(rel).is_betweenness:
        raise AssertionError("generator produced an axiom violation")
    return rel


def collinear_relation(points: Sequence[int]) -> TernaryRelation:
    """Metric betweenness of distinct integer points; element ``i`` sits at ``points[i-1]``."""
    if len(set(points)) != len(points):
        raise ValueError("points must be distinct")
    n = len(points)
    triples = {
        (a, b, c)
        for a in range(1, n + 1)
        for b in range(1, n + 1)
        for c in range(1, n + 1)
        if min(points[a - 1], points[c - 1]) < points[b - 1] < max(points[a - 1], points[c - 1])
    }
    return TernaryRelation(n, frozenset(triples))


def random_collinear(n: int, rng: random.Random) -> TernaryRelation:
    return collinear_relation(rng.sample(range(-50, 50), n))


def random_relation(n: int, count: int, rng: random.Random) -> TernaryRelation:
    """Arbitrary triples of distinct elements; no axioms enforced."""
    triples = set()
    while len(triples) < count:
        triples.add(tuple(rng.sample(range(1, n + 1), 3)))
    return TernaryRelation(n, frozenset(triples))


def random_space(rng: random.Random, max_atoms: int = 8, max_events: int = 5,
                 max_weight: int = 12) -> ProbabilitySpace:
    """Positive integer weights normalized exactly, plus distinct random events."""
    n = rng.randint(1, max_atoms)
    raw = [rng.randint(1, max_weight) for _ in range(n)]
    total = sum(raw)
    atoms = tuple((k, Fraction(w, total)) for k, w in enumerate(raw))
    want = rng.randint(0, min(max_events, 2**n))
    seen: List[frozenset] = []
    for _ in range(50 * max_events):
        if len(seen) == want:
            break
        members = frozenset(k for k in range(n) if rng.random() < 0.5)
        if members not in seen:
            seen.append(members)
    events = tuple(Event(f"X{i + 1}", s) for i, s in enumerate(seen))
    return ProbabilitySpace(atoms, events)


def random_chain_space(rng: random.Random, max_events: int = 5, grain: int = 9) -> ProbabilitySpace:
    """Three binary variables forming a Markov chain ``a -> b -> c`` on 8 atoms.

    ``{b=1}`` screens off ``{a=1}`` from ``{c=1}`` by construction, so these
    spaces actually exercise the equality condition. Extra random events are
    appended up to ``max_events``.
    """
    def coin():
        return Fraction(rng.randint(1, grain - 1), grain)

    def link():
        lo, hi = sorted(rng.sample(range(1, grain), 2))
        return {0: Fraction(lo, grain), 1: Fraction(hi, grain)}

    pa = coin()
    pb, pc = link(), link()
    atoms = []
    for mask in range(8):
        a, b, c = mask & 1, mask >> 1 & 1, mask >> 2 & 1
        w = (pa if a else 1 - pa)
        w *= pb[a] if b else 1 - pb[a]
        w *= pc[b] if c else 1 - pc[b]
        atoms.append((mask, w))
    sets = [frozenset(k for k in range(8) if k >> bit & 1) for bit in range(3)]
    rng.shuffle(sets)
    want = rng.randint(3, max_events)
    for _ in range(200):
        if len(sets) >= want:
            break
        extra = frozenset(k for k in range(8) if rng.random() < 0.5)
        if extra not in sets:
            sets.append(extra)
    events = tuple(Event(f"X{i + 1}", s) for i, s in enumerate(sets))
    return ProbabilitySpace(tuple(atoms), events)
