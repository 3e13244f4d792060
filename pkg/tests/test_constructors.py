# tests/test_constructors.py
import os
import sys
from math import comb

sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

import pytest
from hypothesis import given, settings
from pydantic import ValidationError

from constructors.chain import (
    best_chain,
    canonical_chain,
    chain_family,
    chain_size,
    enumerate_chain_specs,
    q_size,
)
from constructors.cushion import cushion_family, level_windows
from constructors.layered import layered_compose
from constructors.models import (
    ChainSpec,
    CushionLevel,
    CushionSpec,
    LayeredSpec,
    load_cushion_spec,
    load_layered_spec,
)
from family_core.algebra import oplus
from family_core.errors import CapacityExceeded, SpecValidationError
from family_core.family import Family
from family_core.masks import mask_from_elements, prefix_layer
from family_core.predicates import can_add, is_maximal_union_free, is_union_free
from strategies import cushion_specs, layered_specs

DATA_DIR = os.path.join(os.path.dirname(__file__), "..", "data")


def fam(n, *sets):
    return Family.from_sets(n, sets)


def data_path(name):
    return os.path.join(DATA_DIR, name)


EXAMPLE3 = fam(
    5, [1], [2], [1, 3], [2, 3], [1, 3, 4], [2, 3, 4], [1, 3, 5], [2, 3, 5], [1, 4, 5], [2, 4, 5]
)


# ---------------------------------------------------------------- chain specs

def test_chain_spec_validation():
    assert ChainSpec(n=4, ms=[2, 1]).in_q
    assert not ChainSpec(n=4, ms=[3, 2]).in_q
    for bad in ([1, 2], [5, 1], [2, 2], [2, 0]):
        with pytest.raises(ValidationError):
            ChainSpec(n=4, ms=bad)
    with pytest.raises(ValidationError):
        ChainSpec(n=4, ms=[])


def test_chain_family_examples():
    spec = ChainSpec(n=20, ms=[15, 6, 1])
    assert chain_size(spec) == 15504 + 3003 + 5 == 18512

    q4 = chain_family(ChainSpec(n=4, ms=[2, 1]))
    assert q4 == fam(4, [1, 2], [1, 3], [1, 4], [2, 3], [2, 4], [3, 4], [1])
    assert chain_family(ChainSpec(n=3, ms=[3])) == fam(3, [1, 2, 3])


def test_canonical_chain_examples():
    assert canonical_chain(20).ms == [10, 5, 2, 1]
    assert canonical_chain(1).ms == [1]
    assert canonical_chain(9).ms == [5, 2, 1]
    # C([6],3) with C([2],1) below it
    assert canonical_chain(6).ms == [3, 1]
    assert q_size(6) == 22


def test_q_size_examples():
    assert q_size(4) == 7
    assert q_size(14) == 3454
    assert q_size(30) == 155120974


@pytest.mark.parametrize("n", range(1, 25))
def test_q_size_matches_materialised_family(n):
    family = chain_family(canonical_chain(n))
    assert len(family) == q_size(n) == chain_size(canonical_chain(n))


def test_enumerate_small_cases():
    assert [s.ms for s in enumerate_chain_specs(1)] == [[1]]
    assert [s.ms for s in enumerate_chain_specs(2)] == [[1], [2, 1]]
    assert len(list(enumerate_chain_specs(3))) == 4


@pytest.mark.parametrize("n", range(1, 11))
def test_enumerate_yields_each_q_chain_once(n):
    specs = list(enumerate_chain_specs(n))
    assert len(specs) == 2 ** (n - 1)
    assert len({tuple(s.ms) for s in specs}) == len(specs)
    assert all(s.in_q and s.n == n for s in specs)
    assert [s.ms for s in specs] == sorted(s.ms for s in specs)


def test_enumerate_refuses_large_n():
    with pytest.raises(CapacityExceeded):
        next(enumerate_chain_specs(21))


def test_best_chain_examples():
    spec, size = best_chain(5)
    assert (spec.ms, size) == ([3, 1], 12)
    spec, size = best_chain(1)
    assert (spec.ms, size) == ([1], 1)
    assert best_chain(2)[0].ms == [1]
    assert best_chain(13)[1] == 1738


@pytest.mark.parametrize("n", range(1, 13))
def test_best_chain_is_the_maximum_over_q(n):
    spec, size = best_chain(n)
    assert size == max(chain_size(s) for s in enumerate_chain_specs(n))
    assert chain_size(spec) == size and spec.in_q


def test_best_chain_never_below_canonical():
    for n in range(1, 65):
        assert best_chain(n)[1] >= q_size(n)


@pytest.mark.parametrize("n", range(1, 11))
def test_every_q_chain_is_union_free(n):
    for spec in enumerate_chain_specs(n):
        assert is_union_free(chain_family(spec)), spec.label()


@pytest.mark.parametrize("n", range(1, 9))
def test_every_q_chain_is_maximal(n):
    for spec in enumerate_chain_specs(n):
        assert is_maximal_union_free(chain_family(spec)), spec.label()


@pytest.mark.parametrize("n", [9, 10])
def test_canonical_chain_is_maximal(n):
    assert is_maximal_union_free(chain_family(canonical_chain(n)))


@pytest.mark.parametrize("n", range(11, 15))
def test_canonical_chain_is_union_free(n):
    assert is_union_free(chain_family(canonical_chain(n)))


# ---------------------------------------------------------------- cushions

def test_doubling_example():
    spec = load_cushion_spec(data_path("example1_doubling.json"))
    family = cushion_family(spec)
    assert len(family) == 2 * comb(4, 2) + 1 == 13
    assert is_union_free(family)

    block = Family.of(5, prefix_layer(4, 2))
    expected = oplus(block, fam(5, [], [5])).members + (mask_from_elements([1], 5),)
    assert family == Family.of(5, expected)


def test_tripling_example():
    family = cushion_family(load_cushion_spec(data_path("example2_tripling.json")))
    assert len(family) == 3 * comb(3, 2) + 1 == 10
    assert is_union_free(family)


def test_reduction_example():
    family = cushion_family(load_cushion_spec(data_path("reduction_example.json")))
    expected = list(prefix_layer(5, 4)) + [mask_from_elements(s, 5) for s in ([1], [1, 2], [1, 3])]
    assert family == Family.of(5, expected)


def test_example3_cushion_is_union_free_but_not_maximal():
    family = cushion_family(load_cushion_spec(data_path("example3_cushion.json")))
    assert family == EXAMPLE3
    assert is_union_free(family)
    assert not is_maximal_union_free(family)
    assert can_add(family, mask_from_elements([3, 4, 5], 5))


def test_zero_thickness_reduces_to_chain():
    spec = CushionSpec(n=9, levels=[CushionLevel(m=5, h=0), CushionLevel(m=2, h=0), CushionLevel(m=1, h=0)])
    assert cushion_family(spec) == chain_family(ChainSpec(n=9, ms=[5, 2, 1]))


def test_level_windows():
    spec = load_cushion_spec(data_path("example1_doubling.json"))
    assert level_windows(spec) == [(4, 5, 5), (1, 2, 1)]


@pytest.mark.parametrize(
    "levels, message",
    [
        ([{"m": 4, "h": 2, "cushion": [[], [5]]}], "level 1: m+h = 6"),
        ([{"m": 2, "h": 1, "cushion": [[], [4]]}], "level 1: cushion member {4} lies outside window [5,5]"),
        ([{"m": 2, "h": 0, "cushion": [[5]]}], "level 1: thickness 0"),
        ([{"m": 1, "h": 3, "cushion": [[3], [4], [3, 4]]}], "level 1: cushion is not union-free"),
        ([{"m": 2, "h": 1, "cushion": []}], "level 1: cushion must hold at least one set"),
        ([{"m": 3, "h": 0}, {"m": 2, "h": 1, "cushion": [[], [3]]}], "level 2: m+h = 3"),
    ],
)
def test_cushion_validation_names_the_level(levels, message):
    spec = CushionSpec(n=5, levels=[CushionLevel(**lv) for lv in levels])
    with pytest.raises(SpecValidationError) as info:
        cushion_family(spec)
    assert message in str(info.value)


@settings(max_examples=200, deadline=None)
@given(cushion_specs(max_n=10))
def test_fuzzed_cushion_families_are_union_free(spec):
    family = cushion_family(spec)
    assert is_union_free(family), spec.model_dump_json()


# ---------------------------------------------------------------- layered compositions

def test_layered_decomposition_reproduces_example3_plus_one():
    family = layered_compose(load_layered_spec(data_path("layered_decomposition.json")))
    assert len(family) == 11
    assert family == EXAMPLE3.with_member(mask_from_elements([3, 4, 5], 5))
    assert is_union_free(family)


def test_single_layer_with_empty_f_is_g():
    g = fam(4, [1, 2], [3], [2, 4])
    spec = LayeredSpec.from_families([fam(4, [])], [g])
    assert layered_compose(spec) == g


def test_disjoint_halves_stack():
    low = fam(5, [1], [2])
    high = fam(5, [3, 4], [3, 5], [4, 5])
    empty = fam(5, [])
    family = layered_compose(LayeredSpec.from_families([empty, low], [high, empty]))
    assert family == Family.of(5, low.members + high.members)


@pytest.mark.parametrize(
    "fs, gs, message",
    [
        ([[[1]]], [[[1, 2]]], "supports overlap"),
        ([[[1]], [[]]], [[[2]], [[]]], "pair (1,2): F-members {1}"),
        ([[[]], [[1]]], [[[2]], [[2, 3]]], "pair (1,2): G-members {2}"),
        ([[[], [1]]], [[[], [2]]], "layer 1: neither F1 nor G1 is an antichain"),
        ([[[1], [2], [1, 2]]], [[[]]], "F1 is not union-free"),
        ([[]], [[[2]]], "F1 must hold at least one set"),
    ],
)
def test_layered_validation(fs, gs, message):
    with pytest.raises(SpecValidationError) as info:
        layered_compose(LayeredSpec(fs=fs, gs=gs))
    assert message in str(info.value)


def test_layered_spec_shape_checks():
    with pytest.raises(ValidationError):
        LayeredSpec(fs=[[[]], [[1]]], gs=[[[2]]])
    with pytest.raises(ValidationError):
        LayeredSpec(fs=[[[4]]], gs=[[[]]], n=3)
    assert LayeredSpec(fs=[[[1]]], gs=[[[5]]]).n == 5


@settings(max_examples=200, deadline=None)
@given(layered_specs(max_n=10))
def test_fuzzed_layered_compositions_are_union_free(spec):
    family = layered_compose(spec)
    assert is_union_free(family), spec.model_dump_json()


if __name__ == "__main__":
    pytest.main([__file__])
