# exact/__init__.py
from exact.exhaustive import exhaustive_bound_check, find_exceeding_family
from exact.models import EXACT, TIMEOUT, SearchConfig, SearchResult
from exact.search import max_union_free, search_order

__all__ = [
    "EXACT",
    "TIMEOUT",
    "SearchConfig",
    "SearchResult",
    "exhaustive_bound_check",
    "find_exceeding_family",
    "max_union_free",
    "search_order",
]
