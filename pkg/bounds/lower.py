# bounds/lower.py
"""
Lower bounds on M(n) by mutual dynamic programming over three constructions:

  chain    the best q(n; m1; ...; ml)
  cushion  g(s) = max over m, h of C(s-h, m) * c(h) + g(m-1), c(0) = 1, c(h) = lb(h) + 1
           (thickness-h cushion is an optimal family on h elements plus the empty set)
  split    lb(h) + lb(n-h), two optimal families on disjoint supports

Every bound comes with a witness that materialize_lower_bound turns into a family.
"""
import logging
import threading
from dataclasses import dataclass, field
from math import comb
from typing import Dict, Optional, Tuple

from constructors.chain import best_chain, chain_family
from constructors.cushion import cushion_family
from constructors.layered import layered_compose
from constructors.models import ChainSpec, CushionLevel, CushionSpec, LayeredSpec
from family_core.algebra import shift
from family_core.family import Family
from family_core.masks import check_ground

logger = logging.getLogger(__name__)

CHAIN = "chain"
CUSHION = "cushion"
SPLIT = "split"


@dataclass(frozen=True)
class LowerBoundWitness:
    """How a lower bound was reached.

    chain / cushion: levels are (m, h) pairs, h = 0 throughout for a chain.
    split: halves = (h, n - h).
    """
    kind: str
    n: int
    value: int
    levels: Tuple[Tuple[int, int], ...] = ()
    halves: Optional[Tuple[int, int]] = None

    def describe(self) -> str:
        if self.kind == SPLIT:
            return f"split {self.halves[0]}+{self.halves[1]}"
        if self.kind == CHAIN:
            return f"chain q({self.n}; {','.join(str(m) for m, _ in self.levels)})"
        parts = "; ".join(f"{m},{h}" for m, h in self.levels)
        return f"cushion q({self.n}; {parts})"


@dataclass
class BoundState:
    """Memoised bound tables shared between callers; guarded by a lock."""
    lower: Dict[int, LowerBoundWitness] = field(default_factory=dict)
    cushion: Dict[int, Tuple[int, int, int]] = field(default_factory=lambda: {0: (0, 0, 0)})
    upper: Dict[int, Tuple[int, Optional[Tuple[int, int]]]] = field(default_factory=dict)
    lock: threading.RLock = field(default_factory=threading.RLock, repr=False)

    def record_lower(self, witness: LowerBoundWitness) -> LowerBoundWitness:
        with self.lock:
            known = self.lower.get(witness.n)
            if known is None or witness.value > known.value:
                self.lower[witness.n] = witness
                return witness
            return known

    def record_upper(self, n: int, value: int, split: Optional[Tuple[int, int]]) -> Tuple[int, Optional[Tuple[int, int]]]:
        with self.lock:
            known = self.upper.get(n)
            if known is None or value < known[0]:
                self.upper[n] = (value, split)
                return self.upper[n]
            return known

    def clear(self) -> None:
        with self.lock:
            self.lower.clear()
            self.upper.clear()
            self.cushion.clear()
            self.cushion[0] = (0, 0, 0)


DEFAULT_STATE = BoundState()


def _thickness_factor(state: BoundState, h: int) -> int:
    return 1 if h == 0 else state.lower[h].value + 1


def _fill_cushion(state: BoundState, s: int) -> None:
    # g(s) needs lb(h) for h < s and g(m - 1) for m <= s
    best = None
    for m in range(1, s + 1):
        for h in range(0, s - m + 1):
            value = comb(s - h, m) * _thickness_factor(state, h) + state.cushion[m - 1][0]
            if best is None or value > best[0]:
                best = (value, m, h)
    state.cushion[s] = best


def _cushion_levels(state: BoundState, s: int) -> Tuple[Tuple[int, int], ...]:
    levels = []
    while s > 0:
        _, m, h = state.cushion[s]
        levels.append((m, h))
        s = m - 1
    return tuple(levels)


def _fill_lower(state: BoundState, n: int) -> None:
    spec, size = best_chain(n)
    witness = LowerBoundWitness(CHAIN, n, size, tuple((m, 0) for m in spec.ms))

    _fill_cushion(state, n)
    cushioned = state.cushion[n][0]
    if cushioned > witness.value:
        witness = LowerBoundWitness(CUSHION, n, cushioned, _cushion_levels(state, n))

    for h in range(1, n // 2 + 1):
        value = state.lower[h].value + state.lower[n - h].value
        if value > witness.value:
            witness = LowerBoundWitness(SPLIT, n, value, halves=(h, n - h))

    state.record_lower(witness)
    logger.debug("lb(%d) = %d via %s", n, witness.value, witness.describe())


def lower_bound(n: int, state: Optional[BoundState] = None) -> Tuple[int, LowerBoundWitness]:
    check_ground(n)
    state = DEFAULT_STATE if state is None else state
    with state.lock:
        for s in range(1, n + 1):
            if s not in state.lower:
                _fill_lower(state, s)
        witness = state.lower[n]
    return witness.value, witness


def _padded_cushion(n: int, h: int, offset: int, state: Optional[BoundState]) -> Family:
    """{∅} ∪ W(h) moved into [offset+1, offset+h], over ground n."""
    if h == 0:
        return Family.of(n, [0])
    inner = materialize_lower_bound(h, state)
    return Family.of(n, list(shift(inner, offset, n)) + [0])


def materialize_lower_bound(n: int, state: Optional[BoundState] = None) -> Family:
    """A union-free family of non-empty subsets of [n] of size lower_bound(n)."""
    _, witness = lower_bound(n, state)

    if witness.kind == CHAIN:
        return chain_family(ChainSpec(n=n, ms=[m for m, _ in witness.levels]))

    if witness.kind == CUSHION:
        levels = []
        top = n
        for m, h in witness.levels:
            cushion = _padded_cushion(n, h, top - h, state)
            levels.append(CushionLevel.from_family(m, h, cushion))
            top = m - 1
        return cushion_family(CushionSpec(n=n, levels=levels))

    h, rest = witness.halves
    low = shift(materialize_lower_bound(h, state), 0, n)
    high = shift(materialize_lower_bound(rest, state), h, n)
    empty = Family.of(n, [0])
    spec = LayeredSpec.from_families([empty, low], [high, empty])
    return layered_compose(spec)
