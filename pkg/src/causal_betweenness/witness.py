"""Build an exact probability space realizing a given betweenness.

The space lives on ``{0,1}^m`` with ``E_i = {s : s_i = 1}``. Atoms are
bitmasks (bit ``i-1`` set when element ``i`` is present). Every atom with
four or more set bits weighs ``2^-m``; the remaining ``1 + m + C(m,2) + C(m,3)``
atoms carry explicit weights tuned so that the single, pair and triple
intersection probabilities hit ``1/2``, ``beta`` and ``gamma``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Dict, Iterable, Mapping, Tuple

from .errors import ConstructionError, NotRealizable, TooLarge, UnsupportedOrder
from .probspace import Event, ProbabilitySpace
from .relation import (
    Pair,
    TernaryRelation,
    decide_theorem1,
    middles_by_triad,
    pair,
)

Triad = Tuple[int, int, int]

EXPAND_LIMIT = 20
QUARTER = Fraction(1, 4)
EIGHTH = Fraction(1, 8)
HALF = Fraction(1, 2)


def mask_of(elements: Iterable[int]) -> int:
    out = 0
    for i in elements:
        out |= 1 << (i - 1)
    return out


def members_of(mask: int) -> Tuple[int, ...]:
    return tuple(i + 1 for i in range(mask.bit_length()) if mask >> i & 1)


@dataclass(frozen=True)
class ConstructionParams:
    m: int
    epsilon: Fraction
    delta: Fraction

    def __post_init__(self):
        m = self.m
        if not 0 < self.epsilon < Fraction(1, m * m * 4**m):
            raise ValueError(f"epsilon {self.epsilon} outside (0, m^-2 4^-m) for m={m}")
        if not 0 < self.delta < self.epsilon / (m * m):
            raise ValueError(f"delta {self.delta} outside (0, m^-2 epsilon) for m={m}")


def choose_params(m: int) -> ConstructionParams:
    if m < 1:
        raise ValueError("need at least one element")
    eps = Fraction(1, m * m * 4**m + 1)
    return ConstructionParams(m, eps, eps / (m * m + 1))


@dataclass(frozen=True)
class MomentTables:
    beta: Dict[Pair, Fraction]
    gamma: Dict[Triad, Fraction]


def build_beta(rank: Mapping[Pair, int], params: ConstructionParams) -> Dict[Pair, Fraction]:
    return {p: QUARTER + params.delta * r for p, r in sorted(rank.items())}


def _screening_product(beta, i, j, k) -> Fraction:
    """``2 beta({i,j}) beta({j,k})``: the triple moment that makes ``j`` screen off."""
    return 2 * beta[pair(i, j)] * beta[pair(j, k)]


def build_gamma(
    rel: TernaryRelation, beta: Mapping[Pair, Fraction], params: ConstructionParams
) -> Dict[Triad, Fraction]:
    middles = middles_by_triad(rel)
    eps = params.epsilon
    gamma: Dict[Triad, Fraction] = {}
    for triad in combinations(range(1, params.m + 1), 3):
        mids = middles.get(frozenset(triad), set())
        if len(mids) > 1:
            raise ConstructionError(f"3-set {triad} has middles {sorted(mids)}")
        if mids:
            (j,) = mids
            i, k = (x for x in triad if x != j)
            gamma[triad] = _screening_product(beta, i, j, k)
            continue
        i, j, k = triad
        forbidden = {
            _screening_product(beta, i, j, k),
            _screening_product(beta, j, k, i),
            _screening_product(beta, k, i, j),
        }
        # four candidates, at most three forbidden values
        for step in range(1, 5):
            cand = EIGHTH + eps * step / 5
            if cand not in forbidden:
                gamma[triad] = cand
                break
    return gamma


@dataclass(frozen=True)
class StructuredSpace:
    """Sparse witness: explicit weights for ``|W| <= 3``, ``2^-m`` elsewhere."""

    m: int
    params: ConstructionParams
    tables: MomentTables
    weights: Dict[int, Fraction]

    @property
    def default_weight(self) -> Fraction:
        return Fraction(1, 2**self.m)

    def weight(self, mask: int) -> Fraction:
        if mask in self.weights:
            return self.weights[mask]
        if bin(mask).count("1") < 4 or mask >> self.m:
            raise KeyError(mask)
        return self.default_weight


def build_weights(params: ConstructionParams, tables: MomentTables) -> StructuredSpace:
    m = params.m
    base = Fraction(1, 2**m)
    dev: Dict[int, Fraction] = {}
    for triad, g in tables.gamma.items():
        dev[mask_of(triad)] = g - EIGHTH
    for (i, j), b in tables.beta.items():
        dev[mask_of((i, j))] = (b - QUARTER) - sum(
            dev[mask_of((i, j, k))] for k in range(1, m + 1) if k not in (i, j)
        )
    for i in range(1, m + 1):
        bit = 1 << (i - 1)
        dev[bit] = -sum(d for mask, d in dev.items() if mask & bit and mask != bit)
    weights = {mask: base + d for mask, d in dev.items()}
    rest = sum(weights.values()) + base * (2**m - 1 - len(weights))
    weights[0] = 1 - rest
    space = StructuredSpace(m, params, tables, dict(sorted(weights.items())))
    check_bounds(space)
    return space


def check_bounds(space: StructuredSpace) -> None:
    """Assert the per-size weight bounds and the moment identities exactly."""
    m, eps = space.m, space.params.epsilon
    base = space.default_weight
    bounds = {
        3: (base, base + eps),
        2: (base - m * eps, base + eps),
        1: (base - m * m * eps, base + m * m * eps),
        0: (base - m**3 * eps, base + m * m * eps),
    }
    for mask, w in space.weights.items():
        lo, hi = bounds[bin(mask).count("1")]
        if not (w > 0 and lo < w < hi):
            raise ConstructionError(f"weight of atom {mask} is {w}, outside ({lo}, {hi})")
    for p, b in space.tables.beta.items():
        if not QUARTER < b < QUARTER + eps / 2:
            raise ConstructionError(f"beta{p} = {b} out of range")
        if moment(space, p) != b:
            raise ConstructionError(f"pair moment {p} != beta")
    for t, g in space.tables.gamma.items():
        if not EIGHTH < g < EIGHTH + eps:
            raise ConstructionError(f"gamma{t} = {g} out of range")
        if moment(space, t) != g:
            raise ConstructionError(f"triple moment {t} != gamma")
    if len(set(space.tables.beta.values())) != len(space.tables.beta):
        raise ConstructionError("beta is not injective")
    for i in range(1, m + 1):
        if moment(space, (i,)) != HALF:
            raise ConstructionError(f"P(E_{i}) != 1/2")
    if moment(space, ()) != 1:
        raise ConstructionError("total mass != 1")


def moment(space: StructuredSpace, indices: Iterable[int]) -> Fraction:
    """``P(E_i1 ... E_ik)`` in closed form, for at most three indices.

    Atoms containing the index set contribute ``2^-|I|`` at the default weight,
    plus the deviation of each explicit atom that contains it.
    """
    idx = frozenset(indices)
    if len(idx) > 3:
        raise UnsupportedOrder(f"closed-form moments stop at order 3, got {len(idx)}")
    if any(not 1 <= i <= space.m for i in idx):
        raise ValueError(f"index outside 1..{space.m}")
    need = mask_of(idx)
    base = space.default_weight
    total = Fraction(1, 2 ** len(idx))
    for mask, w in space.weights.items():
        if mask & need == need:
            total += w - base
    return total


def expand(space: StructuredSpace, limit: int = EXPAND_LIMIT) -> ProbabilitySpace:
    """Materialize all ``2^m`` atoms and the events ``E_1..E_m``."""
    m = space.m
    if m > limit:
        raise TooLarge(f"m={m} exceeds the expansion limit {limit}")
    base = space.default_weight
    weights = [space.weights.get(mask, base) for mask in range(2**m)]
    events = tuple(
        Event(f"E{i}", frozenset(mask for mask in range(2**m) if mask >> (i - 1) & 1))
        for i in range(1, m + 1)
    )
    return ProbabilitySpace(tuple(zip(range(2**m), weights)), events)


def construct_witness(rel: TernaryRelation) -> StructuredSpace:
    cert = decide_theorem1(rel)
    if not cert.realizable:
        raise NotRealizable(cert)
    params = choose_params(rel.m)
    beta = build_beta(cert.rank, params)
    tables = MomentTables(beta, build_gamma(rel, beta, params))
    space = build_weights(params, tables)
    _check_selectivity(rel, space)
    return space


def _check_selectivity(rel: TernaryRelation, space: StructuredSpace) -> None:
    beta, gamma = space.tables.beta, space.tables.gamma
    for triad in combinations(range(1, rel.m + 1), 3):
        a, b, c = triad
        for i, j, k in ((a, b, c), (b, c, a), (c, a, b)):
            screens = gamma[triad] == _screening_product(beta, i, j, k)
            if screens != ((i, j, k) in rel.triples):
                raise ConstructionError(f"screening mismatch at middle {j} of {triad}")
    for a, b, c in rel.triples:
        if not (beta[pair(a, b)] > beta[pair(a, c)] and beta[pair(b, c)] > beta[pair(a, c)]):
            raise ConstructionError(f"beta not monotone on {(a, b, c)}")


__all__ = [
    "ConstructionParams",
    "MomentTables",
    "StructuredSpace",
    "build_beta",
    "build_gamma",
    "build_weights",
    "check_bounds",
    "choose_params",
    "construct_witness",
    "expand",
    "mask_of",
    "members_of",
    "moment",
]
