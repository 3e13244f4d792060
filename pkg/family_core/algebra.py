# family_core/algebra.py
"""
Set-family algebra: U(F), the ⊕ product, augmentation, relabelling, translation.
"""
import logging
from collections import deque
from typing import FrozenSet, Optional, Sequence, Set

from config import UnionFreeConfig
from family_core.errors import CapacityExceeded, GroundSetMismatch, InvalidMaskError
from family_core.family import Family
from family_core.masks import SubsetMask, check_ground, fits, popcount

logger = logging.getLogger(__name__)


def union_closure(family: Family, cap: Optional[int] = None) -> Set[SubsetMask]:
    """U(F): every union of a sub-collection of F, the empty union included."""
    cap = UnionFreeConfig.CLOSURE_CAP if cap is None else cap
    if cap < 1:
        raise ValueError("cap must be at least 1")

    closure = {0}
    for member in family:
        closure |= {u | member for u in closure}
        if len(closure) > cap:
            raise CapacityExceeded(f"union closure exceeds cap={cap}")
    return closure


def oplus(first: Family, second: Family) -> Family:
    """F1 ⊕ F2 = {A ∪ B : A ∈ F1, B ∈ F2}."""
    if first.n != second.n:
        raise GroundSetMismatch(f"cannot combine families over n={first.n} and n={second.n}")
    return Family.of(first.n, (a | b for a in first for b in second))


def augment_reach(family: Family, start: SubsetMask, cap: Optional[int] = None) -> FrozenSet[SubsetMask]:
    """All masks S ∪ u with u ∈ U(F), found breadth-first from S."""
    cap = UnionFreeConfig.AUGMENT_STATE_CAP if cap is None else cap
    if not fits(start, family.n):
        raise InvalidMaskError(f"start set has bits beyond n={family.n}")

    visited = {start}
    queue = deque([start])
    while queue:
        state = queue.popleft()
        for member in family:
            nxt = state | member
            if nxt not in visited:
                visited.add(nxt)
                if len(visited) > cap:
                    raise CapacityExceeded(f"augmentation state space exceeds cap={cap}")
                queue.append(nxt)
    return frozenset(visited)


def can_augment(family: Family, start: SubsetMask, target_size: int, cap: Optional[int] = None) -> bool:
    """True iff some A1..Ak in F (k >= 0) give |S ∪ A1 ∪ ... ∪ Ak| = t."""
    cap = UnionFreeConfig.AUGMENT_STATE_CAP if cap is None else cap
    n = family.n
    if not fits(start, n):
        raise InvalidMaskError(f"start set has bits beyond n={n}")
    if target_size < 0 or target_size > n:
        raise ValueError(f"target size {target_size} outside [0, {n}]")

    if popcount(start) == target_size:
        return True
    if popcount(start) > target_size:
        return False

    visited = {start}
    queue = deque([start])
    while queue:
        state = queue.popleft()
        for member in family:
            nxt = state | member
            if nxt in visited:
                continue
            size = popcount(nxt)
            if size == target_size:
                return True
            visited.add(nxt)
            if len(visited) > cap:
                raise CapacityExceeded(f"augmentation state space exceeds cap={cap}")
            # supersets of an overshoot only grow
            if size < target_size:
                queue.append(nxt)
    return False


def relabel_mask(mask: SubsetMask, perm: Sequence[int]) -> SubsetMask:
    out = 0
    i = 0
    while mask:
        if mask & 1:
            out |= 1 << (perm[i] - 1)
        mask >>= 1
        i += 1
    return out


def relabel(family: Family, perm: Sequence[int]) -> Family:
    """Apply the element map i -> perm[i-1] to every member."""
    n = family.n
    if len(perm) != n or sorted(perm) != list(range(1, n + 1)):
        raise InvalidMaskError(f"permutation {list(perm)} is not a bijection on [1, {n}]")
    return Family.of(n, (relabel_mask(m, perm) for m in family))


def shift(family: Family, offset: int, n: int) -> Family:
    """Translate every member by offset positions into a family over [n]."""
    check_ground(n)
    if offset < 0:
        raise ValueError("offset must be non-negative")
    return Family.of(n, (m << offset for m in family))
