# family_core/__init__.py
from family_core.algebra import augment_reach, can_augment, oplus, relabel, shift, union_closure
from family_core.family import Family, Verdict, Witness, WitnessKind
from family_core.predicates import (
    addable_subsets,
    can_add,
    is_antichain,
    is_maximal_union_free,
    is_superfluous,
    is_union_free,
    lym_sum,
    sperner_bound,
)
from family_core.uff_format import load_family, parse_family, save_family, serialize_family

__all__ = [
    "Family",
    "Verdict",
    "Witness",
    "WitnessKind",
    "addable_subsets",
    "augment_reach",
    "can_add",
    "can_augment",
    "is_antichain",
    "is_maximal_union_free",
    "is_superfluous",
    "is_union_free",
    "load_family",
    "lym_sum",
    "oplus",
    "parse_family",
    "relabel",
    "save_family",
    "serialize_family",
    "shift",
    "sperner_bound",
    "union_closure",
]
