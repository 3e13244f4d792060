# family_core/masks.py
"""
A subset A of [n] = {1, ..., n} is stored as a plain int whose bit i-1 is set
exactly when i is in A. Element numbering is 1-based everywhere outside this
module.
"""
from itertools import combinations
from typing import Iterable, Iterator, List, Tuple

from config import UnionFreeConfig
from family_core.errors import InvalidMaskError

SubsetMask = int

EMPTY: SubsetMask = 0


def check_ground(n: int) -> int:
    if not isinstance(n, int) or isinstance(n, bool):
        raise InvalidMaskError(f"ground-set size must be an integer, got {n!r}")
    if n < 1 or n > UnionFreeConfig.MAX_GROUND:
        raise InvalidMaskError(f"ground-set size n={n} outside [1, {UnionFreeConfig.MAX_GROUND}]")
    return n


def full_mask(n: int) -> SubsetMask:
    return (1 << n) - 1


def fits(mask: SubsetMask, n: int) -> bool:
    return mask >= 0 and mask >> n == 0


def popcount(mask: SubsetMask) -> int:
    return mask.bit_count()


def canonical_key(mask: SubsetMask) -> Tuple[int, int]:
    """Sort key of the canonical member order: cardinality, then numeric value."""
    return mask.bit_count(), mask


def is_proper_subset(b: SubsetMask, a: SubsetMask) -> bool:
    return b != a and b & ~a == 0


def mask_from_elements(elements: Iterable[int], n: int) -> SubsetMask:
    mask = 0
    for e in elements:
        if e < 1 or e > n:
            raise InvalidMaskError(f"element {e} outside [1, {n}]")
        mask |= 1 << (e - 1)
    return mask


def elements_of(mask: SubsetMask) -> List[int]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def interval_mask(a: int, b: int) -> SubsetMask:
    """[a, b] = {a, ..., b}; empty when a > b."""
    if a > b:
        return EMPTY
    return ((1 << (b - a + 1)) - 1) << (a - 1)


def prefix_layer(ground: int, size: int) -> Iterator[SubsetMask]:
    """Every size-element subset of [ground]."""
    if size < 0 or size > ground:
        return
    for combo in combinations(range(ground), size):
        mask = 0
        for i in combo:
            mask |= 1 << i
        yield mask


def layer_ascending(n: int, size: int) -> Iterator[SubsetMask]:
    """Every size-element subset of [n], in increasing mask order."""
    if size < 0 or size > n:
        return
    if size == 0:
        yield EMPTY
        return
    mask = (1 << size) - 1
    limit = 1 << n
    while mask < limit:
        yield mask
        low = mask & -mask
        ripple = mask + low
        mask = (((ripple ^ mask) >> 2) // low) | ripple


def iter_masks(n: int, include_empty: bool = False) -> Iterator[SubsetMask]:
    """Every subset of [n] in canonical order, generated layer by layer."""
    for size in range(0 if include_empty else 1, n + 1):
        yield from layer_ascending(n, size)


def all_masks(n: int, include_empty: bool = False) -> List[SubsetMask]:
    return list(iter_masks(n, include_empty))


def format_mask(mask: SubsetMask) -> str:
    return "{" + ",".join(str(e) for e in elements_of(mask)) + "}"
