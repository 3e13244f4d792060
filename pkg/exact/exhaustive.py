# exact/exhaustive.py
"""
Brute-force certificate: walk every family of non-empty subsets of [n].
There are 2^(2^n - 1) of them, so this only runs for n <= 4.
"""
import logging
from typing import Optional

from tqdm import tqdm

from config import UnionFreeConfig
from family_core.errors import SearchRefused
from family_core.family import Family
from family_core.masks import all_masks, check_ground
from family_core.predicates import is_union_free

logger = logging.getLogger(__name__)


def find_exceeding_family(n: int, bound: int) -> Optional[Family]:
    """First union-free family (in enumeration order) with more than `bound` members, if any."""
    check_ground(n)
    if n > UnionFreeConfig.EXHAUSTIVE_MAX_N:
        raise SearchRefused(
            f"exhaustive enumeration is limited to n <= {UnionFreeConfig.EXHAUSTIVE_MAX_N}, got n={n}"
        )

    subsets = all_masks(n)
    total = 1 << len(subsets)
    for code in tqdm(range(total), desc=f"families of [{n}]", disable=not UnionFreeConfig.SHOW_PROGRESS):
        if code.bit_count() <= bound:
            continue
        family = Family.of(n, (s for k, s in enumerate(subsets) if code >> k & 1))
        if is_union_free(family):
            logger.info("union-free family of size %d exceeds %d", len(family), bound)
            return family
    return None


def exhaustive_bound_check(n: int, bound: int) -> bool:
    """True iff no union-free family of non-empty subsets of [n] has more than `bound` members."""
    return find_exceeding_family(n, bound) is None
