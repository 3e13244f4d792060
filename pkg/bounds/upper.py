# bounds/upper.py
import logging
from typing import Optional, Tuple

from bounds.lower import DEFAULT_STATE, BoundState
from family_core.masks import check_ground

logger = logging.getLogger(__name__)

# M(1..4), settled by exhaustion
EXHAUSTION = {1: 1, 2: 2, 3: 4, 4: 7}


def upper_bound_split(n1: int, n2: int, ub1: int, ub2: int) -> int:
    """M(n1 + n2) <= M(n1) + 2^n1 * M(n2)."""
    if n1 < 1 or n2 < 1:
        raise ValueError("both parts of a split must be at least 1")
    return ub1 + (1 << n1) * ub2


def _fill_upper(state: BoundState, n: int) -> None:
    if n in EXHAUSTION:
        state.record_upper(n, EXHAUSTION[n], None)
        return
    best = None
    for n1 in range(1, n):
        n2 = n - n1
        value = upper_bound_split(n1, n2, state.upper[n1][0], state.upper[n2][0])
        # equal values: prefer n2 divisible by 4, then the smallest n1
        key = (value, n2 % 4 != 0, n1)
        if best is None or key < best[0]:
            best = (key, value, (n1, n2))
    _, value, split = best
    state.record_upper(n, value, split)
    logger.debug("ub(%d) = %d via %s", n, value, split)


def upper_bound(n: int, state: Optional[BoundState] = None) -> Tuple[int, Optional[Tuple[int, int]]]:
    """Best split-recursion bound and its (n1, n2); split is None for the exhaustion rows."""
    check_ground(n)
    state = DEFAULT_STATE if state is None else state
    with state.lock:
        for s in range(1, n + 1):
            if s not in state.upper:
                _fill_upper(state, s)
        return state.upper[n]


def upper_bound_ck(c: int, k: int, mk: int) -> int:
    """M(ck) <= (2^ck - 1) * M(k) / (2^k - 1)."""
    if c < 1 or k < 1:
        raise ValueError("c and k must be at least 1")
    numerator = ((1 << (c * k)) - 1) * mk
    denominator = (1 << k) - 1
    quotient, remainder = divmod(numerator, denominator)
    assert remainder == 0, "2^k - 1 always divides 2^ck - 1"
    return quotient
