# bounds/filibuster.py
from dataclasses import dataclass

from bounds.table import replica_lower
from config import UnionFreeConfig


@dataclass(frozen=True)
class FilibusterEstimate:
    """Amendments a union-free filibuster can table on an n-article bill, and how long they take."""
    n: int
    amendments: int
    minutes: float
    years: float


def filibuster_estimate(n: int, minutes_per_amendment: float = 1.0) -> FilibusterEstimate:
    if minutes_per_amendment < 0:
        raise ValueError("minutes per amendment must be non-negative")
    amendments, _ = replica_lower(n)
    minutes = amendments * minutes_per_amendment
    return FilibusterEstimate(n, amendments, minutes, minutes / UnionFreeConfig.MINUTES_PER_YEAR)


def filibuster_duration(n: int, minutes_per_amendment: float = 1.0) -> float:
    """Duration in years."""
    return filibuster_estimate(n, minutes_per_amendment).years
