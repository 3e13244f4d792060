# approx/__init__.py
from approx.formulas import (
    ApproxReport,
    central_binom_approx,
    central_report,
    cushion_split_estimate,
    dominance_ratio,
    reports_frame,
    stirling_binom,
    stirling_report,
)

__all__ = [
    "ApproxReport",
    "central_binom_approx",
    "central_report",
    "cushion_split_estimate",
    "dominance_ratio",
    "reports_frame",
    "stirling_binom",
    "stirling_report",
]
