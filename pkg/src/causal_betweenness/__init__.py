"""Reichenbach's causal betweenness: recognition, exact witnesses, extraction."""

from .errors import (
    ConditionOnNull,
    ConstructionError,
    CyclicGraph,
    DuplicateEvents,
    NotABetweenness,
    NotRealizable,
    ParseError,
    TooLarge,
    UnsupportedOrder,
)
from .orderability import OrderVerdict, brute_force_order, solve_order, verify_order
from .probspace import (
    CbBreakdown,
    Event,
    ProbabilitySpace,
    causal_breakdown,
    conditional,
    correlation_ratio,
    extract_cb,
    probability,
)
from .relation import (
    BetweennessReport,
    PairDigraph,
    TernaryRelation,
    Theorem1Certificate,
    check_betweenness,
    check_transitivity,
    close_reversal,
    decide_theorem1,
    derived_digraph,
    find_cycle,
    pair,
    sigma,
    topological_rank,
    verify_certificate,
)
from .witness import (
    ConstructionParams,
    MomentTables,
    StructuredSpace,
    build_beta,
    build_gamma,
    build_weights,
    choose_params,
    construct_witness,
    expand,
    moment,
)

REICHENBACH = TernaryRelation(
    4, frozenset({(1, 2, 3), (3, 2, 1), (1, 2, 4), (4, 2, 1), (4, 2, 3), (3, 2, 4)})
)
"""Reichenbach's non-orderable example with its reversals, elements A1..A4 -> 1..4."""
