# bounds/table.py
"""
Bounds tables for n = 1..n_max.

paper-replica: the historical columns (canonical q(n) sizes, 13 at n = 5 from the
               thin cushion, upper bounds through the fixed n1 = (n-1) % 4 + 1 split).
best-known:    the lower/upper dynamic programs of bounds.lower and bounds.upper.
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from decimal import ROUND_HALF_UP, Decimal
from enum import Enum
from functools import lru_cache
from typing import List, Optional, Tuple

import pandas as pd
from pydantic import BaseModel, Field

from bounds.lower import DEFAULT_STATE, BoundState, lower_bound
from bounds.upper import EXHAUSTION, upper_bound, upper_bound_split
from config import UnionFreeConfig
from constructors.chain import canonical_chain, q_size
from family_core.masks import check_ground

logger = logging.getLogger(__name__)

EXHAUSTION_LABEL = "exhaustion"
CSV_COLUMNS = ["n", "lb", "lb_witness", "ub", "ub_split", "ratio"]


class TableMode(str, Enum):
    REPLICA = "paper-replica"
    BEST_KNOWN = "best-known"


class BoundsRow(BaseModel):
    n: int = Field(ge=1)
    lower: int = Field(ge=1)
    lower_witness: str
    upper: int = Field(ge=1)
    upper_split: str
    ratio: Decimal


def format_split(split: Optional[Tuple[int, int]]) -> str:
    if split is None:
        return EXHAUSTION_LABEL
    return f"n1={split[0]} n2={split[1]}"


def bound_ratio(upper: int, lower: int) -> Decimal:
    return (Decimal(upper) / Decimal(lower)).quantize(Decimal("0.01"), rounding=ROUND_HALF_UP)


def replica_lower(n: int) -> Tuple[int, str]:
    check_ground(n)
    if n == 5:
        return 13, "cushion q(5; 2,1; 1,0)"
    return q_size(n), f"chain {canonical_chain(n).label()}"


def _replica_split(n: int) -> Tuple[int, int]:
    n1 = (n - 1) % 4 + 1
    return n1, n - n1


@lru_cache(maxsize=None)
def _replica_upper_value(n: int) -> int:
    if n in EXHAUSTION:
        return EXHAUSTION[n]
    n1, n2 = _replica_split(n)
    return upper_bound_split(n1, n2, _replica_upper_value(n1), _replica_upper_value(n2))


def replica_upper(n: int) -> Tuple[int, Optional[Tuple[int, int]]]:
    check_ground(n)
    split = None if n in EXHAUSTION else _replica_split(n)
    return _replica_upper_value(n), split


def _replica_row(n: int) -> BoundsRow:
    lower, witness = replica_lower(n)
    upper, split = replica_upper(n)
    return BoundsRow(
        n=n,
        lower=lower,
        lower_witness=witness,
        upper=upper,
        upper_split=format_split(split),
        ratio=bound_ratio(upper, lower),
    )


def _best_known_row(n: int, state: BoundState) -> BoundsRow:
    lower, witness = lower_bound(n, state)
    upper, split = upper_bound(n, state)
    return BoundsRow(
        n=n,
        lower=lower,
        lower_witness=witness.describe(),
        upper=upper,
        upper_split=format_split(split),
        ratio=bound_ratio(upper, lower),
    )


def bounds_table(
    n_max: int,
    mode: TableMode = TableMode.REPLICA,
    state: Optional[BoundState] = None,
    workers: Optional[int] = None,
) -> List[BoundsRow]:
    check_ground(n_max)
    mode = TableMode(mode)
    state = DEFAULT_STATE if state is None else state
    workers = workers or UnionFreeConfig.MAX_WORKERS

    if mode is TableMode.BEST_KNOWN:
        # shared DP prefix first, then rows only read memoised entries
        lower_bound(n_max, state)
        upper_bound(n_max, state)

        def build(n):
            return _best_known_row(n, state)
    else:
        build = _replica_row

    with ThreadPoolExecutor(max_workers=workers) as executor:
        rows = list(executor.map(build, range(1, n_max + 1)))
    logger.info("built %s table for n <= %d", mode.value, n_max)
    return rows


def to_frame(rows: List[BoundsRow]) -> pd.DataFrame:
    return pd.DataFrame(
        [
            {
                "n": r.n,
                "lb": r.lower,
                "lb_witness": r.lower_witness,
                "ub": r.upper,
                "ub_split": r.upper_split,
                "ratio": f"{r.ratio:.2f}",
            }
            for r in rows
        ],
        columns=CSV_COLUMNS,
    )


def to_csv(rows: List[BoundsRow]) -> str:
    return to_frame(rows).to_csv(index=False, lineterminator="\n")


def to_markdown(rows: List[BoundsRow]) -> str:
    lines = [
        "| n | L.B. | Example | U.B. | Proof | U.B./L.B. |",
        "|---:|---:|:---|---:|:---|---:|",
    ]
    for r in rows:
        proof = "By exhaustion" if r.upper_split == EXHAUSTION_LABEL else r.upper_split
        lines.append(f"| {r.n} | {r.lower} | {r.lower_witness} | {r.upper} | {proof} | {r.ratio:.2f} |")
    return "\n".join(lines) + "\n"
