# constructors/__init__.py
from constructors.chain import (
    best_chain,
    canonical_chain,
    chain_family,
    chain_size,
    enumerate_chain_specs,
    q_size,
)
from constructors.cushion import cushion_family
from constructors.layered import layered_compose, validate_layered
from constructors.models import (
    ChainSpec,
    CushionLevel,
    CushionSpec,
    LayeredSpec,
    load_cushion_spec,
    load_layered_spec,
)

__all__ = [
    "ChainSpec",
    "CushionLevel",
    "CushionSpec",
    "LayeredSpec",
    "best_chain",
    "canonical_chain",
    "chain_family",
    "chain_size",
    "cushion_family",
    "enumerate_chain_specs",
    "layered_compose",
    "load_cushion_spec",
    "load_layered_spec",
    "q_size",
    "validate_layered",
]
