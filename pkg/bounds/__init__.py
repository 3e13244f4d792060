# bounds/__init__.py
from bounds.filibuster import FilibusterEstimate, filibuster_duration, filibuster_estimate
from bounds.lower import BoundState, LowerBoundWitness, lower_bound, materialize_lower_bound
from bounds.table import (
    BoundsRow,
    TableMode,
    bounds_table,
    replica_lower,
    replica_upper,
    to_csv,
    to_markdown,
)
from bounds.upper import upper_bound, upper_bound_ck, upper_bound_split

__all__ = [
    "BoundState",
    "BoundsRow",
    "FilibusterEstimate",
    "LowerBoundWitness",
    "TableMode",
    "bounds_table",
    "filibuster_duration",
    "filibuster_estimate",
    "lower_bound",
    "materialize_lower_bound",
    "replica_lower",
    "replica_upper",
    "to_csv",
    "to_markdown",
    "upper_bound",
    "upper_bound_ck",
    "upper_bound_split",
]
