# tests/test_family_core.py
import os
import sys
from fractions import Fraction
from itertools import combinations
from math import comb

sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from config import UnionFreeConfig
from constructors.chain import canonical_chain, chain_family, enumerate_chain_specs
from family_core.algebra import augment_reach, can_augment, oplus, relabel, shift, union_closure
from family_core.errors import (
    CapacityExceeded,
    GroundSetMismatch,
    InvalidMaskError,
    NotAMemberError,
    NotUnionFreeError,
)
from family_core.family import Family, WitnessKind
from family_core.masks import all_masks, iter_masks, layer_ascending, mask_from_elements, popcount
from family_core.predicates import (
    VECTOR_THRESHOLD,
    addable_subsets,
    can_add,
    is_antichain,
    is_maximal_union_free,
    is_superfluous,
    is_union_free,
    lym_sum,
    sperner_bound,
)
from strategies import antichains, families, permutations_of, union_free_families


def fam(n, *sets):
    return Family.from_sets(n, sets)


def m(*elements):
    return mask_from_elements(elements, 64)


Q3 = fam(3, [1, 2], [1, 3], [2, 3], [1])
Q4 = fam(4, [1, 2], [1, 3], [1, 4], [2, 3], [2, 4], [3, 4], [1])
EXAMPLE3 = fam(
    5, [1], [2], [1, 3], [2, 3], [1, 3, 4], [2, 3, 4], [1, 3, 5], [2, 3, 5], [1, 4, 5], [2, 4, 5]
)


# ---------------------------------------------------------------- Family

def test_family_is_canonical_and_deduplicated():
    f = Family.of(3, [0b110, 0b001, 0b011, 0b001])
    assert f.members == (0b001, 0b011, 0b110)
    assert len(f) == 3
    assert 0b011 in f and 0b111 not in f


def test_family_rejects_bits_beyond_n():
    with pytest.raises(InvalidMaskError):
        Family.of(2, [0b100])
    with pytest.raises(InvalidMaskError):
        Family.of(65, [])
    with pytest.raises(InvalidMaskError):
        fam(2, [3])


def test_family_support_and_empty_handling():
    f = fam(5, [], [1], [2, 5])
    assert f.support == m(1, 2, 5)
    assert 0 in f
    assert 0 not in f.without_empty()
    assert f.to_sets() == [[], [1], [2, 5]]


# ---------------------------------------------------------------- union closure

def test_union_closure_examples():
    assert union_closure(fam(2, [1], [2])) == {0, m(1), m(2), m(1, 2)}
    assert union_closure(fam(2, [1, 2])) == {0, m(1, 2)}
    # empty set, {1}, six pairs, four triples and [4]
    assert len(union_closure(Q4)) == 13


def test_union_closure_cap():
    with pytest.raises(CapacityExceeded):
        union_closure(Q4, cap=5)
    with pytest.raises(ValueError):
        union_closure(Q4, cap=0)


# ---------------------------------------------------------------- oplus

def test_oplus_examples():
    assert oplus(fam(5, [1], [2]), fam(5, [], [5])) == fam(5, [1], [2], [1, 5], [2, 5])
    assert oplus(Q3, fam(3, [])) == Q3
    assert oplus(fam(2, [1]), fam(2, [1])) == fam(2, [1])


def test_oplus_ground_mismatch():
    with pytest.raises(GroundSetMismatch):
        oplus(fam(2, [1]), fam(3, [1]))


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_oplus_associative_with_identity(data):
    n = data.draw(st.integers(1, 5))
    a, b, c = (data.draw(families(min_n=n, max_n=n, max_size=5, allow_empty=True)) for _ in range(3))
    assert oplus(oplus(a, b), c) == oplus(a, oplus(b, c))
    assert oplus(a, Family.of(n, [0])) == a


# ---------------------------------------------------------------- union-free

def test_union_free_counterexample_has_witness():
    verdict = is_union_free(fam(3, [1, 2], [2, 3], [1, 2, 3]))
    assert not verdict
    w = verdict.witness
    assert w.kind is WitnessKind.NOT_UNION_FREE
    assert w.offending == m(1, 2, 3)
    assert set(w.evidence) == {m(1, 2), m(2, 3)}


def test_union_free_examples():
    assert is_union_free(Q3)
    assert is_union_free(fam(4, [1, 2], [1, 3], [1, 4], [2, 3], [2, 4], [3, 4]))
    assert is_union_free(fam(2, [], [1]))


def test_union_free_vector_path_matches_small_path():
    q8 = chain_family(canonical_chain(8))
    assert len(q8) >= VECTOR_THRESHOLD
    assert is_union_free(q8)

    broken = q8.with_member(m(1, 2, 3, 4, 5, 6, 7, 8))
    verdict = is_union_free(broken)
    assert not verdict
    assert verdict.witness.offending == m(1, 2, 3, 4, 5, 6, 7, 8)
    union = 0
    for e in verdict.witness.evidence:
        assert e in broken and e != verdict.witness.offending
        union |= e
    assert union == verdict.witness.offending


def _naive_union_free(family):
    for a in family:
        others = [b for b in family if b != a]
        for k in range(1, len(others) + 1):
            for combo in combinations(others, k):
                u = 0
                for b in combo:
                    u |= b
                if u == a:
                    return False
    return True


@settings(max_examples=300, deadline=None)
@given(families(max_n=5, max_size=10))
def test_union_free_agrees_with_subcollection_oracle(family):
    assert bool(is_union_free(family)) == _naive_union_free(family)


@settings(max_examples=1000, deadline=None)
@given(families(max_n=6, max_size=12))
def test_union_free_iff_no_superfluous_member(family):
    has_superfluous = any(is_superfluous(family, a) for a in family)
    assert bool(is_union_free(family)) == (not has_superfluous)


@settings(max_examples=300, deadline=None)
@given(families(max_n=6, max_size=10, allow_empty=True))
def test_superfluous_matches_closure_definition(family):
    for a in family:
        expected = union_closure(family) == union_closure(family.without(a))
        assert is_superfluous(family, a) == expected


# ---------------------------------------------------------------- antichains, LYM, Sperner

def test_antichain_examples():
    assert is_antichain(fam(4, [1, 2], [1, 3], [1, 4], [2, 3], [2, 4], [3, 4]))
    verdict = is_antichain(fam(2, [1], [1, 2]))
    assert not verdict and verdict.witness.kind is WitnessKind.NOT_ANTICHAIN
    assert not is_antichain(Q4)


def test_lym_examples():
    assert lym_sum(fam(4, [1, 2], [1, 3], [1, 4], [2, 3], [2, 4], [3, 4])) == 1
    assert lym_sum(fam(3, [1])) == Fraction(1, 3)
    assert lym_sum(fam(2, [1], [1, 2])) == Fraction(3, 2)


def test_sperner_bound_examples():
    assert sperner_bound(4) == 6
    assert sperner_bound(5) == 10
    assert sperner_bound(30) == 155117520


@settings(max_examples=1000, deadline=None)
@given(antichains(max_n=12))
def test_lym_inequality_on_antichains(family):
    assert is_antichain(family)
    assert lym_sum(family) <= 1
    assert len(family) <= sperner_bound(family.n)
    assert is_union_free(family)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_no_antichain_beats_sperner_bound_exhaustively(n):
    subsets = all_masks(n)
    limit = sperner_bound(n)
    for code in range(1 << len(subsets)):
        if code.bit_count() <= limit:
            continue
        family = Family.of(n, (s for k, s in enumerate(subsets) if code >> k & 1))
        assert not is_antichain(family)


# ---------------------------------------------------------------- superfluous

def test_superfluous_examples():
    assert is_superfluous(fam(2, [1], [2], [1, 2]), m(1, 2))
    assert not is_superfluous(Q3, m(1))
    assert is_superfluous(fam(1, [], [1]), 0)


def test_superfluous_needs_member():
    with pytest.raises(NotAMemberError):
        is_superfluous(Q3, m(3))


# ---------------------------------------------------------------- augmentation

def test_can_augment_examples():
    assert can_augment(Q4, m(2), 2)
    assert can_augment(Q4, m(1, 3), 2)
    assert can_augment(Q4, 0, 4)
    assert not can_augment(fam(3, [1, 2, 3]), m(1), 2)


def test_can_augment_rejects_bad_input():
    with pytest.raises(InvalidMaskError):
        can_augment(Q3, m(4), 2)
    with pytest.raises(ValueError):
        can_augment(Q3, 0, 4)


def test_augment_reach_is_start_joined_with_closure():
    reach = augment_reach(Q3, m(3))
    assert reach == {m(3) | u for u in union_closure(Q3)}
    with pytest.raises(CapacityExceeded):
        augment_reach(Q4, 0, cap=3)


@pytest.mark.parametrize("n", range(1, 9))
def test_canonical_chain_augments_every_subset(n):
    family = chain_family(canonical_chain(n))
    for start in all_masks(n, include_empty=True):
        sizes = {popcount(x) for x in augment_reach(family, start)}
        assert set(range(popcount(start), n + 1)) <= sizes


@pytest.mark.parametrize("n", range(1, 6))
def test_every_q_family_augments_every_subset(n):
    for spec in enumerate_chain_specs(n):
        family = chain_family(spec)
        for start in all_masks(n, include_empty=True):
            for t in range(popcount(start), n + 1):
                assert can_augment(family, start, t)


def _closure_masks(family):
    closure = np.zeros(1 << family.n, dtype=bool)
    closure[0] = True
    for member in family:
        closure[np.flatnonzero(closure) | member] = True
    return np.flatnonzero(closure)


@pytest.mark.parametrize("n", range(6, 11))
def test_every_q_family_reaches_every_larger_size(n):
    # every S ∪ u, u ∈ U(F), at once: row S, column |S ∪ u|
    canonical = chain_family(canonical_chain(n))
    assert set(_closure_masks(canonical).tolist()) == union_closure(canonical)

    sizes_of = np.array([popcount(x) for x in range(1 << n)])
    starts = np.arange(1 << n)
    wanted = np.arange(n + 1)[None, :] >= sizes_of[:, None]
    for spec in enumerate_chain_specs(n):
        closure = _closure_masks(chain_family(spec))
        sizes = sizes_of[starts[:, None] | closure[None, :]]
        reached = np.zeros((1 << n, n + 1), dtype=bool)
        reached[np.repeat(starts, len(closure)), sizes.ravel()] = True
        assert (reached | ~wanted).all(), spec.label()


# ---------------------------------------------------------------- maximality

def test_maximal_examples():
    assert is_maximal_union_free(Q3)
    verdict = is_maximal_union_free(fam(2, [1]))
    assert not verdict
    assert verdict.witness.kind is WitnessKind.NOT_MAXIMAL
    assert verdict.witness.offending == m(2)


def test_example3_family_is_not_maximal():
    assert is_union_free(EXAMPLE3)
    verdict = is_maximal_union_free(EXAMPLE3)
    assert not verdict
    assert verdict.witness.offending == m(1, 2, 4)
    assert can_add(EXAMPLE3, m(3, 4, 5))
    assert m(3, 4, 5) in set(addable_subsets(EXAMPLE3))
    assert is_union_free(EXAMPLE3.with_member(m(3, 4, 5)))


def test_maximality_requires_union_free():
    with pytest.raises(NotUnionFreeError):
        is_maximal_union_free(fam(3, [1, 2], [2, 3], [1, 2, 3]))


def test_maximality_refuses_large_ground():
    with pytest.raises(CapacityExceeded):
        is_maximal_union_free(Family.of(40, [1]))
    with pytest.raises(CapacityExceeded):
        next(addable_subsets(Family.of(UnionFreeConfig.MAXIMAL_MAX_N + 1, [1])))


@pytest.mark.parametrize("n", range(1, 11))
def test_masks_are_generated_in_canonical_order(n):
    expected = sorted(range(1, 1 << n), key=lambda x: (popcount(x), x))
    assert list(iter_masks(n)) == expected
    assert list(iter_masks(n, include_empty=True)) == [0] + expected
    for size in range(n + 1):
        assert len(list(layer_ascending(n, size))) == comb(n, size)


@settings(max_examples=300, deadline=None)
@given(union_free_families(max_n=5))
def test_addable_subsets_agree_with_full_check(family):
    addable = set(addable_subsets(family))
    for s in all_masks(family.n):
        if s in family:
            continue
        assert (s in addable) == bool(is_union_free(family.with_member(s)))


# ---------------------------------------------------------------- relabel and shift

def test_relabel_examples():
    assert relabel(Q3, [1, 2, 3]) == Q3
    assert relabel(fam(2, [1], [1, 2]), [2, 1]) == fam(2, [2], [1, 2])


def test_relabel_rejects_non_bijection():
    with pytest.raises(InvalidMaskError):
        relabel(Q3, [1, 1, 2])
    with pytest.raises(InvalidMaskError):
        relabel(Q3, [1, 2])


@settings(max_examples=300, deadline=None)
@given(st.data())
def test_relabel_preserves_verdicts(data):
    family = data.draw(families(max_n=5, max_size=10))
    perm = data.draw(permutations_of(family.n))
    inverse = [0] * family.n
    for i, p in enumerate(perm, start=1):
        inverse[p - 1] = i

    moved = relabel(family, perm)
    assert relabel(moved, inverse) == family
    assert len(moved) == len(family)
    assert bool(is_union_free(moved)) == bool(is_union_free(family))
    assert bool(is_antichain(moved)) == bool(is_antichain(family))
    assert lym_sum(moved) == lym_sum(family)
    if is_union_free(family):
        assert bool(is_maximal_union_free(moved)) == bool(is_maximal_union_free(family))


def test_shift_moves_members_into_window():
    assert shift(fam(2, [1], [2]), 3, 5) == fam(5, [4], [5])
    with pytest.raises(InvalidMaskError):
        shift(fam(2, [1], [2]), 4, 5)


if __name__ == "__main__":
    pytest.main([__file__])
