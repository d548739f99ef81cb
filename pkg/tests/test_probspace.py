import random
from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, settings

from causal_betweenness import (
    ConditionOnNull,
    DuplicateEvents,
    Event,
    ProbabilitySpace,
    TernaryRelation,
    causal_breakdown,
    check_betweenness,
    conditional,
    construct_witness,
    correlation_ratio,
    derived_digraph,
    expand,
    extract_cb,
    find_cycle,
    probability,
)
from causal_betweenness.generators import random_chain_space

from strategies import probability_spaces


def uniform(n):
    return ProbabilitySpace(tuple((k, Fraction(1, n)) for k in range(n)))


def ev(name, *members):
    return Event(name, frozenset(members))


def naive_cb(weights, sets):
    """Straight from the definitions, one triple at a time, no shared code."""
    def P(s):
        return sum((weights[k] for k in s), Fraction(0))

    out = set()
    for i, j, k in permutations(range(len(sets)), 3):
        A, B, C = sets[i], sets[j], sets[k]
        if not (P(B - A) > 0 and P(B - C) > 0 and P(A & C) > P(A) * P(C)):
            continue
        cond = lambda X, Y: P(X & Y) / P(Y)  # noqa: E731
        if (cond(C, B) > cond(C, A) and cond(A, B) > cond(A, C)
                and cond(A & C, B) == cond(A, B) * cond(C, B)):
            out.add((i + 1, j + 1, k + 1))
    return out


class TestProbability:
    def test_full_and_empty(self):
        s = uniform(5)
        assert probability(s, s.everything()) == 1
        assert probability(s, ev("0")) == 0

    def test_witness_singletons(self, reichenbach):
        ps = expand(construct_witness(reichenbach))
        assert all(probability(ps, e) == Fraction(1, 2) for e in ps.events)

    def test_weights_must_sum_to_one(self):
        with pytest.raises(ValueError):
            ProbabilitySpace(((0, Fraction(1, 2)), (1, Fraction(1, 3))))


class TestConditional:
    def test_self(self):
        s = uniform(4)
        b = ev("B", 1, 2)
        assert conditional(s, b, b) == 1

    def test_disjoint(self):
        s = uniform(4)
        assert conditional(s, ev("A", 0), ev("B", 1, 2)) == 0

    def test_null(self):
        with pytest.raises(ConditionOnNull):
            conditional(uniform(4), ev("A", 0), ev("B"))

    def test_witness_m3(self):
        space = construct_witness(TernaryRelation(3, frozenset({(1, 2, 3), (3, 2, 1)})))
        ps = expand(space)
        e1, e2, _ = ps.events
        assert conditional(ps, e1, e2) == 2 * space.tables.beta[(1, 2)]


class TestCorrelationRatio:
    def test_independent(self):
        assert correlation_ratio(uniform(4), ev("A", 0, 1), ev("B", 0, 2)) == 1

    def test_witness(self, reichenbach):
        space = construct_witness(reichenbach)
        ps = expand(space)
        for (i, j), b in space.tables.beta.items():
            r = correlation_ratio(ps, ps.events[i - 1], ps.events[j - 1])
            assert r == 4 * b
            assert r > 1

    def test_nested(self):
        assert correlation_ratio(uniform(4), ev("A", 0), ev("B", 0, 1)) == 2

    def test_null(self):
        with pytest.raises(ConditionOnNull):
            correlation_ratio(uniform(4), ev("A"), ev("B", 1))


class TestBreakdown:
    def test_reichenbach_triple(self, reichenbach):
        ps = expand(construct_witness(reichenbach))
        e = ps.events
        bd = causal_breakdown(ps, e[0], e[1], e[2])
        assert (bd.c1, bd.c2, bd.c3, bd.c4, bd.c5) == (True,) * 5
        assert bd.causally_between and bd.well_defined

    def test_rotation_fails_screening(self, reichenbach):
        ps = expand(construct_witness(reichenbach))
        e = ps.events
        bd = causal_breakdown(ps, e[2], e[0], e[1])
        assert not bd.c4
        assert not bd.causally_between

    def test_same_ends(self):
        s = uniform(4)
        a = ev("A", 0, 1)
        bd = causal_breakdown(s, a, ev("B", 0, 2), a)
        assert not bd.c2
        assert not bd.causally_between

    def test_null_middle_reported_not_raised(self):
        bd = causal_breakdown(uniform(4), ev("A", 0), ev("B"), ev("C", 1))
        assert not bd.well_defined
        assert not bd.causally_between


class TestExtract:
    def test_fewer_than_three(self):
        s = uniform(2)
        assert len(extract_cb(s, [ev("A", 0), ev("B", 1)])) == 0

    def test_pairwise_independent(self):
        s = uniform(4)
        xs = [ev("A", 0, 1), ev("B", 0, 2), ev("C", 0, 3)]
        assert extract_cb(s, xs).triples == frozenset()

    def test_duplicates(self):
        with pytest.raises(DuplicateEvents):
            extract_cb(uniform(4), [ev("A", 0, 1), ev("B", 1, 0), ev("C", 2)])

    def test_chain(self):
        # a -> b -> c with positive links; b is between a and c
        ps = random_chain_space(random.Random(3), max_events=3)
        got = extract_cb(ps)
        assert got.triples == naive_cb(ps.weights, [e.members for e in ps.events])
        assert len(got) == 2

    @settings(max_examples=150, deadline=None)
    @given(probability_spaces(zeros=True))
    def test_matches_naive(self, space):
        assert extract_cb(space).triples == naive_cb(space.weights, [e.members for e in space.events])


@settings(max_examples=200, deadline=None)
@given(probability_spaces(zeros=True))
def test_only_if_direction(space):
    r = extract_cb(space)
    assert check_betweenness(r).is_betweenness
    g = derived_digraph(r)
    assert find_cycle(g) is None
    ev_ = space.events
    for (a, b), (a2, c) in g.edges:
        shared = ({a, b} & {a2, c}).pop()
        x = ev_[shared - 1]
        y = ev_[({a, b} - {shared}).pop() - 1]
        z = ev_[({a2, c} - {shared}).pop() - 1]
        assert correlation_ratio(space, x, y) > correlation_ratio(space, x, z)


def test_rotation_argument_on_chain_spaces():
    rng = random.Random(11)
    for _ in range(40):
        ps = random_chain_space(rng)
        for a, b, c in extract_cb(ps):
            A, B, C = (ps.events[i - 1] for i in (a, b, c))
            lhs = conditional(ps, C & B, A)
            assert lhs == conditional(ps, C, B) * conditional(ps, B, A)
            assert lhs > conditional(ps, C, A) * conditional(ps, B, A)
