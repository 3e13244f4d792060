# constructors/chain.py
"""
Chain families q(n; m1; ...; ml) = C([n], m1) ∪ C([m1-1], m2) ∪ ... ∪ C([m_{l-1}-1], ml)
and the canonical q(n).
"""
import logging
from functools import lru_cache
from math import comb
from typing import Iterator, List, Tuple

from config import UnionFreeConfig
from constructors.models import ChainSpec
from family_core.errors import CapacityExceeded
from family_core.family import Family
from family_core.masks import check_ground, prefix_layer

logger = logging.getLogger(__name__)


def _grounds(spec: ChainSpec) -> List[int]:
    return [spec.n] + [m - 1 for m in spec.ms[:-1]]


def chain_size(spec: ChainSpec) -> int:
    return sum(comb(g, m) for g, m in zip(_grounds(spec), spec.ms))


def chain_family(spec: ChainSpec) -> Family:
    masks = []
    for ground, m in zip(_grounds(spec), spec.ms):
        masks.extend(prefix_layer(ground, m))
    logger.debug("built %s with %d members", spec.label(), len(masks))
    return Family.of(spec.n, masks)


def _canonical_ms(n: int) -> List[int]:
    ms = []
    while n >= 1:
        m = (n + 1) // 2
        ms.append(m)
        n = m - 1
    return ms


def canonical_chain(n: int) -> ChainSpec:
    """q(n): m1 = ceil(n/2), then q(m1 - 1) on the shrunk prefix."""
    check_ground(n)
    return ChainSpec(n=n, ms=_canonical_ms(n))


@lru_cache(maxsize=None)
def q_size(n: int) -> int:
    if n <= 0:
        return 0
    m = (n + 1) // 2
    return comb(n, m) + q_size(m - 1)


def _chains_below(top: int) -> Iterator[Tuple[int, ...]]:
    for m in range(1, top + 1):
        if m == 1:
            yield (1,)
        else:
            for rest in _chains_below(m - 1):
                yield (m,) + rest


def enumerate_chain_specs(n: int) -> Iterator[ChainSpec]:
    """Every member of Q(n), lexicographic in (m1, m2, ...)."""
    check_ground(n)
    if n > UnionFreeConfig.ENUMERATE_MAX_N:
        raise CapacityExceeded(
            f"Q({n}) has 2^{n - 1} chains; enumeration is limited to n <= "
            f"{UnionFreeConfig.ENUMERATE_MAX_N}, use best_chain instead"
        )
    for ms in _chains_below(n):
        yield ChainSpec(n=n, ms=list(ms))


@lru_cache(maxsize=None)
def _best_table(n: int) -> Tuple[Tuple[int, int, int], ...]:
    # entry s: (size, levels, m) of the best chain on ground s
    table = [(0, 0, 0)]
    for s in range(1, n + 1):
        best = None
        for m in range(1, s + 1):
            size = comb(s, m) + table[m - 1][0]
            levels = 1 + table[m - 1][1]
            key = (size, -levels, m)
            if best is None or key > best[0]:
                best = (key, (size, levels, m))
        table.append(best[1])
    return tuple(table)


def best_chain(n: int) -> Tuple[ChainSpec, int]:
    """Largest family in Q(n); ties go to fewer levels, then larger m1."""
    check_ground(n)
    table = _best_table(n)
    ms = []
    s = n
    while s > 0:
        m = table[s][2]
        ms.append(m)
        s = m - 1
    return ChainSpec(n=n, ms=ms), table[n][0]
