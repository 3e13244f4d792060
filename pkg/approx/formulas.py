# approx/formulas.py
"""
Closed-form size estimates, evaluated in log-space so large n never overflows.

These are the classical displays taken as written (not sharper approximations),
so their relative errors against exact binomials are what the reports measure.
"""
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import List, Optional, Tuple

import numpy as np
import pandas as pd

from family_core.errors import ApproxDomainError

LOG_2PI = np.log(2.0 * np.pi)


@dataclass(frozen=True)
class ApproxReport:
    n: int
    exact: int
    approx: float
    rel_error: float
    j: Optional[int] = None

    @classmethod
    def compare(cls, n: int, exact: int, approx: float, j: Optional[int] = None) -> "ApproxReport":
        return cls(n, exact, approx, abs(approx - exact) / exact, j)


def stirling_binom(k: int, j: int) -> float:
    """C(k, j) ~ k^(k+1/2) / (sqrt(2 pi) j^(j+1/2) (k-j)^(k-j+1/2))."""
    if not 0 < j < k:
        raise ApproxDomainError(f"stirling estimate needs 0 < j < k, got k={k}, j={j}")
    log_value = (
        -0.5 * LOG_2PI
        + (k + 0.5) * np.log(k)
        - (j + 0.5) * np.log(j)
        - (k - j + 0.5) * np.log(k - j)
    )
    return float(np.exp(log_value))


def central_binom_approx(n: int) -> float:
    """sqrt(2/pi) * 2^n / sqrt(n)."""
    if n < 1:
        raise ApproxDomainError(f"n must be at least 1, got {n}")
    log_value = 0.5 * np.log(2.0 / np.pi) + n * np.log(2.0) - 0.5 * np.log(n)
    return float(np.exp(log_value))


def dominance_ratio(n: int) -> Tuple[float, float]:
    """(first chain term / second chain term of q(n), the estimate 2^((n-1)/2))."""
    if n < 4:
        raise ApproxDomainError(f"dominance ratio needs n >= 4, got {n}")
    m = (n + 1) // 2
    second = comb(m - 1, m // 2)
    exact = Fraction(comb(n, m), second)
    return float(exact), float(np.exp2((n - 1) / 2))


def cushion_split_estimate(n: int, t: int) -> float:
    """(1 / 2 pi) * 2^(n+2) / sqrt(t (n - t)) for a thickness-t cushion."""
    if not 1 <= t <= n - 1:
        raise ApproxDomainError(f"thickness t must lie in [1, {n - 1}], got {t}")
    log_value = -LOG_2PI + (n + 2) * np.log(2.0) - 0.5 * np.log(t * (n - t))
    return float(np.exp(log_value))


def stirling_report(k: int, j: int) -> ApproxReport:
    return ApproxReport.compare(k, comb(k, j), stirling_binom(k, j), j)


def central_report(n: int) -> ApproxReport:
    return ApproxReport.compare(n, comb(n, (n + 1) // 2), central_binom_approx(n))


def reports_frame(reports: List[ApproxReport]) -> pd.DataFrame:
    return pd.DataFrame(
        [{"n": r.n, "j": r.j, "exact": r.exact, "approx": r.approx, "rel_error": r.rel_error} for r in reports],
        columns=["n", "j", "exact", "approx", "rel_error"],
    )
