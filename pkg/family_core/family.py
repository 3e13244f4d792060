# family_core/family.py
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import FrozenSet, Iterable, Iterator, List, Optional, Tuple

import numpy as np

from family_core.errors import InvalidMaskError
from family_core.masks import (
    SubsetMask,
    canonical_key,
    check_ground,
    elements_of,
    fits,
    format_mask,
    mask_from_elements,
)


@dataclass(frozen=True)
class Family:
    """
    A duplicate-free family of subsets of [n], members kept in canonical order
    (cardinality ascending, then mask value ascending). May contain the empty set.

    Build with Family.of / Family.from_sets; the plain constructor trusts its input.
    """
    n: int
    members: Tuple[SubsetMask, ...] = field(default=())

    @classmethod
    def of(cls, n: int, masks: Iterable[SubsetMask]) -> "Family":
        check_ground(n)
        unique = set(masks)
        for m in unique:
            if not fits(m, n):
                raise InvalidMaskError(f"mask {m:#x} has bits beyond n={n}")
        return cls(n, tuple(sorted(unique, key=canonical_key)))

    @classmethod
    def from_sets(cls, n: int, sets: Iterable[Iterable[int]]) -> "Family":
        check_ground(n)
        return cls.of(n, (mask_from_elements(s, n) for s in sets))

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[SubsetMask]:
        return iter(self.members)

    def __contains__(self, mask: object) -> bool:
        return mask in self.member_set

    @cached_property
    def member_set(self) -> FrozenSet[SubsetMask]:
        return frozenset(self.members)

    @cached_property
    def support(self) -> SubsetMask:
        acc = 0
        for m in self.members:
            acc |= m
        return acc

    def as_array(self) -> np.ndarray:
        return np.fromiter(self.members, dtype=np.uint64, count=len(self.members))

    def with_member(self, mask: SubsetMask) -> "Family":
        return Family.of(self.n, self.members + (mask,))

    def without(self, mask: SubsetMask) -> "Family":
        return Family(self.n, tuple(m for m in self.members if m != mask))

    def without_empty(self) -> "Family":
        return self.without(0)

    def to_sets(self) -> List[List[int]]:
        return [elements_of(m) for m in self.members]

    def __str__(self) -> str:
        body = ", ".join(format_mask(m) for m in self.members)
        return f"Family(n={self.n}, [{body}])"


class WitnessKind(str, Enum):
    NOT_UNION_FREE = "not-union-free"
    NOT_ANTICHAIN = "not-antichain"
    NOT_MAXIMAL = "not-maximal"
    SUPERFLUOUS = "superfluous"


@dataclass(frozen=True)
class Witness:
    """Certificate for a failed predicate.

    not-union-free: offending = union of evidence, evidence are proper subsets in F.
    not-antichain: evidence holds the member contained in offending.
    not-maximal: offending is a set that can be added; evidence is empty.
    """
    kind: WitnessKind
    offending: SubsetMask
    evidence: Tuple[SubsetMask, ...] = ()

    def describe(self) -> str:
        text = f"{self.kind.value}: {format_mask(self.offending)}"
        if self.evidence:
            text += " <- " + " ".join(format_mask(m) for m in self.evidence)
        return text


@dataclass(frozen=True)
class Verdict:
    holds: bool
    witness: Optional[Witness] = None

    def __bool__(self) -> bool:
        return self.holds
