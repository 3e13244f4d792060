# constructors/layered.py
"""
Layered composition ⋃_j (F_j ⊕ G_j).

Accepted only when
  * the F-side and G-side supports are disjoint,
  * for i < j every A1 ∈ F_i, A2 ∈ F_j satisfy A1 ⊊ A2,
    and every B1 ∈ G_i, B2 ∈ G_j satisfy B2 ⊊ B1,
  * every F_j and G_j is union-free,
  * in every layer at least one of F_j, G_j is an antichain.

The last condition keeps a single layer union-free: {∅,{1}} ⊕ {∅,{2}} contains
{1,2} = {1} ∪ {2} although both factors are union-free.
"""
import logging
from typing import List, Tuple

from constructors.models import LayeredSpec
from family_core.errors import InvalidMaskError, SpecValidationError
from family_core.family import Family
from family_core.masks import format_mask, is_proper_subset
from family_core.predicates import is_antichain, is_union_free

logger = logging.getLogger(__name__)


def _families(spec: LayeredSpec) -> Tuple[List[Family], List[Family]]:
    def build(side: str, layers):
        out = []
        for j, sets in enumerate(layers, start=1):
            try:
                fam = Family.from_sets(spec.n, sets)
            except InvalidMaskError as exc:
                raise SpecValidationError(f"{side}{j}: {exc}") from exc
            if len(fam) == 0:
                raise SpecValidationError(f"{side}{j} must hold at least one set")
            verdict = is_union_free(fam)
            if not verdict:
                raise SpecValidationError(f"{side}{j} is not union-free ({verdict.witness.describe()})")
            out.append(fam)
        return out

    return build("F", spec.fs), build("G", spec.gs)


def _check_nesting(side: str, layers: List[Family], ascending: bool) -> None:
    for i in range(len(layers)):
        for j in range(i + 1, len(layers)):
            for a in layers[i]:
                for b in layers[j]:
                    ok = is_proper_subset(a, b) if ascending else is_proper_subset(b, a)
                    if not ok:
                        relation = "⊊" if ascending else "⊋"
                        raise SpecValidationError(
                            f"pair ({i + 1},{j + 1}): {side}-members {format_mask(a)} {relation} "
                            f"{format_mask(b)} does not hold"
                        )


def validate_layered(spec: LayeredSpec) -> Tuple[List[Family], List[Family]]:
    fs, gs = _families(spec)

    f_support = 0
    for fam in fs:
        f_support |= fam.support
    g_support = 0
    for fam in gs:
        g_support |= fam.support
    if f_support & g_support:
        raise SpecValidationError(
            f"F and G supports overlap on {format_mask(f_support & g_support)}"
        )

    _check_nesting("F", fs, ascending=True)
    _check_nesting("G", gs, ascending=False)

    for j, (f, g) in enumerate(zip(fs, gs), start=1):
        if not is_antichain(f) and not is_antichain(g):
            raise SpecValidationError(f"layer {j}: neither F{j} nor G{j} is an antichain")
    return fs, gs


def layered_compose(spec: LayeredSpec) -> Family:
    fs, gs = validate_layered(spec)
    masks = set()
    for f, g in zip(fs, gs):
        masks.update(a | b for a in f for b in g)
    family = Family.of(spec.n, masks)
    logger.debug("composed %d layers into %d members", len(fs), len(family))
    return family
