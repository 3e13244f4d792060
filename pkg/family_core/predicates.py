# family_core/predicates.py
"""
Verification predicates over families.

Union-free criterion used throughout: A is a union of other members iff the
union of all members that are proper subsets of A equals A (any covering
member is necessarily a proper subset of A). The empty set is never such a
union, since it has no proper subsets.
"""
import logging
from fractions import Fraction
from math import comb
from typing import Dict, Iterator, List, Optional, Sequence

import numpy as np

from config import UnionFreeConfig
from family_core.errors import CapacityExceeded, NotAMemberError, NotUnionFreeError
from family_core.family import Family, Verdict, Witness, WitnessKind
from family_core.masks import SubsetMask, check_ground, format_mask, is_proper_subset, iter_masks

logger = logging.getLogger(__name__)

# families at least this large go through the numpy path
VECTOR_THRESHOLD = 64


def cover_of(family: Family, target: SubsetMask) -> SubsetMask:
    """Union of the members of F that are proper subsets of target."""
    acc = 0
    for m in family:
        if m != target and m & ~target == 0:
            acc |= m
    return acc


def _proper_subsets(members: Sequence[SubsetMask], target: SubsetMask) -> List[SubsetMask]:
    return [m for m in members if m != target and m & ~target == 0]


def _union_witness_small(members: Sequence[SubsetMask]) -> Optional[Witness]:
    for a in members:
        if a == 0:
            continue
        acc = 0
        for b in members:
            if b != a and b & ~a == 0:
                acc |= b
        if acc == a:
            return Witness(WitnessKind.NOT_UNION_FREE, a, tuple(_proper_subsets(members, a)))
    return None


def _union_witness_vector(family: Family) -> Optional[Witness]:
    arr = family.as_array()
    full = np.uint64((1 << family.n) - 1)
    for a in family:
        if a == 0:
            continue
        a64 = np.uint64(a)
        inside = arr[((arr & (full ^ a64)) == 0) & (arr != a64)]
        if inside.size and int(np.bitwise_or.reduce(inside)) == a:
            return Witness(WitnessKind.NOT_UNION_FREE, a, tuple(int(m) for m in inside))
    return None


def is_union_free(family: Family) -> Verdict:
    if len(family) < VECTOR_THRESHOLD:
        witness = _union_witness_small(family.members)
    else:
        witness = _union_witness_vector(family)
    if witness is not None:
        logger.debug("not union-free: %s", witness.describe())
        return Verdict(False, witness)
    return Verdict(True)


def is_antichain(family: Family) -> Verdict:
    members = family.members
    if len(members) < VECTOR_THRESHOLD:
        for a in members:
            for b in members:
                if b != a and b & ~a == 0:
                    return Verdict(False, Witness(WitnessKind.NOT_ANTICHAIN, a, (b,)))
        return Verdict(True)

    arr = family.as_array()
    full = np.uint64((1 << family.n) - 1)
    for a in members:
        a64 = np.uint64(a)
        inside = arr[((arr & (full ^ a64)) == 0) & (arr != a64)]
        if inside.size:
            return Verdict(False, Witness(WitnessKind.NOT_ANTICHAIN, a, (int(inside[0]),)))
    return Verdict(True)


def lym_sum(family: Family) -> Fraction:
    """Exact sum of 1 / C(n, |A|) over the members."""
    counts: Dict[int, int] = {}
    for m in family:
        k = m.bit_count()
        counts[k] = counts.get(k, 0) + 1
    return sum((Fraction(c, comb(family.n, k)) for k, c in counts.items()), Fraction(0))


def sperner_bound(n: int) -> int:
    """Size of the largest antichain in P([n])."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return comb(n, n // 2)


def is_superfluous(family: Family, member: SubsetMask) -> bool:
    """U(F) = U(F minus {A}), decided without materialising U."""
    if member not in family:
        raise NotAMemberError(f"{format_mask(member)} is not a member of the family")
    if member == 0:
        return True
    return cover_of(family, member) == member


def can_add(family: Family, candidate: SubsetMask, covers: Optional[Dict[SubsetMask, SubsetMask]] = None) -> bool:
    """Whether F ∪ {S} stays union-free, for union-free F and S not in F."""
    if candidate != 0 and cover_of(family, candidate) == candidate:
        return False
    for a in family:
        if is_proper_subset(candidate, a):
            cover = covers[a] if covers is not None else cover_of(family, a)
            if candidate | cover == a:
                return False
    return True


def addable_subsets(family: Family) -> Iterator[SubsetMask]:
    """Non-empty non-members S, in canonical order, with F ∪ {S} union-free."""
    if family.n > UnionFreeConfig.MAXIMAL_MAX_N:
        raise CapacityExceeded(
            f"maximality scans 2^n - 1 candidates; n={family.n} exceeds {UnionFreeConfig.MAXIMAL_MAX_N}"
        )
    verdict = is_union_free(family)
    if not verdict:
        raise NotUnionFreeError(f"family is not union-free ({verdict.witness.describe()})")
    check_ground(family.n)

    covers = {a: cover_of(family, a) for a in family}
    for s in iter_masks(family.n):
        if s not in family and can_add(family, s, covers):
            yield s


def is_maximal_union_free(family: Family) -> Verdict:
    for s in addable_subsets(family):
        return Verdict(False, Witness(WitnessKind.NOT_MAXIMAL, s))
    return Verdict(True)
