# constructors/cushion.py
"""
Cushioned chain families

    (C([n-h1], m1) ⊕ F1) ∪ (C([m1-h2-1], m2) ⊕ F2) ∪ ... ∪ (C([m_{l-1}-h_l-1], m_l) ⊕ F_l)

with n >= m1+h1 >= m1 > m2+h2 >= m2 > ... and every F_j a union-free family
(possibly holding the empty set) on the window just above its block's ground.
"""
import logging
from typing import List, Tuple

from constructors.models import CushionSpec
from family_core.errors import InvalidMaskError, SpecValidationError
from family_core.family import Family
from family_core.masks import format_mask, interval_mask, prefix_layer
from family_core.predicates import is_union_free

logger = logging.getLogger(__name__)


def level_windows(spec: CushionSpec) -> List[Tuple[int, int, int]]:
    """(block ground, window start, window end) per level; window empty when h = 0."""
    out = []
    top = spec.n
    for j, level in enumerate(spec.levels, start=1):
        if level.m + level.h > top:
            raise SpecValidationError(
                f"level {j}: m+h = {level.m + level.h} exceeds the available ground {top}"
            )
        ground = top - level.h
        out.append((ground, ground + 1, top))
        top = level.m - 1
    return out


def _level_cushion(spec: CushionSpec, j: int, window: Tuple[int, int]) -> Family:
    level = spec.levels[j - 1]
    try:
        cushion = Family.from_sets(spec.n, level.cushion)
    except InvalidMaskError as exc:
        raise SpecValidationError(f"level {j}: {exc}") from exc

    if len(cushion) == 0:
        raise SpecValidationError(f"level {j}: cushion must hold at least one set")
    if level.h == 0:
        if cushion.members != (0,):
            raise SpecValidationError(f"level {j}: thickness 0 requires the cushion {{∅}}")
        return cushion

    lo, hi = window
    allowed = interval_mask(lo, hi)
    for member in cushion:
        if member & ~allowed:
            raise SpecValidationError(
                f"level {j}: cushion member {format_mask(member)} lies outside window [{lo},{hi}]"
            )
    verdict = is_union_free(cushion)
    if not verdict:
        raise SpecValidationError(f"level {j}: cushion is not union-free ({verdict.witness.describe()})")
    return cushion


def cushion_family(spec: CushionSpec) -> Family:
    masks = []
    for j, (ground, lo, hi) in enumerate(level_windows(spec), start=1):
        cushion = _level_cushion(spec, j, (lo, hi))
        m = spec.levels[j - 1].m
        for block in prefix_layer(ground, m):
            masks.extend(block | c for c in cushion)
    family = Family.of(spec.n, masks)
    logger.debug("built cushioned family %s with %d members", spec.label(), len(family))
    return family
