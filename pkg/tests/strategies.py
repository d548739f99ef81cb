from fractions import Fraction
from itertools import combinations, product

from hypothesis import strategies as st

from causal_betweenness import Event, ProbabilitySpace, TernaryRelation, pair
from causal_betweenness.relation import all_pairs


@st.composite
def acyclic_betweennesses(draw, max_m=6):
    """Betweenness whose every triple goes down a drawn pair ranking."""
    m = draw(st.integers(1, max_m))
    order = draw(st.permutations(all_pairs(m)))
    rank = {p: r for r, p in enumerate(order, start=1)}
    triples = set()
    for triad in combinations(range(1, m + 1), 3):
        options = [None]
        for j in triad:
            i, k = (x for x in triad if x != j)
            if rank[pair(i, j)] > rank[pair(i, k)] < rank[pair(j, k)]:
                options.append((i, j, k))
        pick = draw(st.sampled_from(options))
        if pick:
            i, j, k = pick
            triples |= {(i, j, k), (k, j, i)}
    return TernaryRelation(m, frozenset(triples))


@st.composite
def orderable_betweennesses(draw, max_n=7):
    n = draw(st.integers(1, max_n))
    order = draw(st.permutations(range(1, n + 1)))
    triples = set()
    for x, y, z in combinations(order, 3):
        if draw(st.booleans()):
            triples |= {(x, y, z), (z, y, x)}
    return TernaryRelation(n, frozenset(triples))


@st.composite
def ternary_relations(draw, max_n=5, distinct=False):
    n = draw(st.integers(1, max_n))
    universe = [t for t in product(range(1, n + 1), repeat=3) if not distinct or len(set(t)) == 3]
    if not universe:
        return TernaryRelation(n)
    triples = draw(st.sets(st.sampled_from(universe), max_size=12))
    return TernaryRelation(n, frozenset(triples))


@st.composite
def probability_spaces(draw, max_atoms=8, max_events=5, zeros=False):
    weights = draw(st.lists(st.integers(0 if zeros else 1, 6), min_size=1, max_size=max_atoms))
    if sum(weights) == 0:
        weights[0] = 1
    total = sum(weights)
    n = len(weights)
    sets = draw(
        st.lists(st.frozensets(st.integers(0, n - 1)), unique=True, max_size=max_events)
    )
    atoms = tuple((k, Fraction(w, total)) for k, w in enumerate(weights))
    return ProbabilitySpace(atoms, tuple(Event(f"X{i + 1}", s) for i, s in enumerate(sets)))


@st.composite
def betweennesses(draw, max_m=6):
    """Any betweenness: at most one middle per 3-set, closed under reversal. May be cyclic."""
    m = draw(st.integers(1, max_m))
    triples = set()
    for triad in combinations(range(1, m + 1), 3):
        j = draw(st.sampled_from((None,) + triad))
        if j is not None:
            i, k = (x for x in triad if x != j)
            triples |= {(i, j, k), (k, j, i)}
    return TernaryRelation(m, frozenset(triples))
