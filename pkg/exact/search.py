# exact/search.py
"""
Exact M(n) by branch-and-bound over the non-empty subsets of [n].

Candidates are ordered by descending cardinality, then ascending mask. A node holds
the chosen members and the later candidates that can still be added; every member
is at least as large as any remaining candidate, so a candidate S only ever fails
through a chosen A ⊋ S with S ∪ cover(A) = A. Adding C changes cover(A) only for
A ⊋ C, so only those constraints are rechecked.

Top-level branch i fixes candidate i as the first member. The reported family is
the first optimum in depth-first order: largest size, ties to the lowest branch.
Branch i only needs to beat lower branches strictly and higher branches weakly,
which keeps the answer independent of scheduling.
"""
import logging
import threading
import time
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional, Tuple

from bounds.lower import materialize_lower_bound
from bounds.upper import upper_bound
from config import UnionFreeConfig
from exact.models import EXACT, TIMEOUT, SearchConfig, SearchResult
from family_core.errors import SearchRefused
from family_core.family import Family
from family_core.masks import SubsetMask, full_mask

logger = logging.getLogger(__name__)


class _DeadlineReached(Exception):
    pass


def search_order(n: int) -> List[SubsetMask]:
    return sorted(range(1, full_mask(n) + 1), key=lambda m: (-m.bit_count(), m))


def _is_prefix(mask: SubsetMask) -> bool:
    return mask & (mask + 1) == 0


class _BranchSearch:
    def __init__(self, n: int, floor: int, cap: int, deadline: Optional[float], symmetry: bool):
        self.n = n
        self.candidates = search_order(n)
        self.floor = floor
        self.cap = cap
        self.deadline = deadline
        self.branches = [
            i for i, c in enumerate(self.candidates) if not symmetry or _is_prefix(c)
        ]
        self.best_sizes = [0] * len(self.candidates)
        self.best_members: List[Optional[Tuple[SubsetMask, ...]]] = [None] * len(self.candidates)
        self.explored = [0] * len(self.candidates)
        self.timed_out = False
        self.lock = threading.Lock()

    def _external_threshold(self, i: int) -> int:
        with self.lock:
            lower = max(self.best_sizes[:i], default=0)
            higher = max(self.best_sizes[i + 1:], default=0) - 1
        return max(lower, higher, self.floor)

    def _check_clock(self) -> None:
        if self.timed_out or (self.deadline is not None and time.monotonic() > self.deadline):
            self.timed_out = True
            raise _DeadlineReached()

    def _offer(self, i: int, members: List[SubsetMask]) -> None:
        size = len(members)
        if size > self.best_sizes[i] and size > self.floor:
            with self.lock:
                self.best_sizes[i] = size
                self.best_members[i] = tuple(members)

    def run_branch(self, i: int) -> None:
        try:
            self._explore(i)
        except _DeadlineReached:
            logger.info("branch %d stopped at the deadline", i)

    def _explore(self, i: int) -> None:
        first = self.candidates[i]
        members = [first]
        covers = {first: 0}
        self._offer(i, members)

        check_every = UnionFreeConfig.TIMEOUT_CHECK_EVERY
        external = self._external_threshold(i)
        nodes = 0

        # frame: [candidates, next index, (added mask, saved covers) or None]
        stack = [[self.candidates[i + 1:], 0, None]]
        while stack:
            nodes += 1
            if nodes % check_every == 0:
                self.explored[i] = nodes
                self._check_clock()
                external = self._external_threshold(i)

            frame = stack[-1]
            cands, idx = frame[0], frame[1]
            threshold = max(self.best_sizes[i], external)
            reach = min(len(members) + len(cands) - idx, self.cap)
            if idx >= len(cands) or reach <= threshold:
                stack.pop()
                if frame[2] is not None:
                    added, saved = frame[2]
                    members.pop()
                    del covers[added]
                    for a, old in saved:
                        covers[a] = old
                continue

            c = cands[idx]
            frame[1] = idx + 1

            saved = [(a, covers[a]) for a in members if a != c and c & ~a == 0]
            for a, _ in saved:
                covers[a] |= c
            members.append(c)
            covers[c] = 0

            rest = []
            for d in cands[idx + 1:]:
                for a, _ in saved:
                    if d != a and d & ~a == 0 and d | covers[a] == a:
                        break
                else:
                    rest.append(d)

            self._offer(i, members)
            stack.append([rest, 0, (c, saved)])

        self.explored[i] = nodes

    def winner(self) -> Tuple[int, Optional[Tuple[SubsetMask, ...]]]:
        best_size, best = 0, None
        for i in self.branches:
            if self.best_sizes[i] > best_size:
                best_size, best = self.best_sizes[i], self.best_members[i]
        return best_size, best


def max_union_free(config: SearchConfig) -> SearchResult:
    n = config.n
    if n > UnionFreeConfig.EXACT_MAX_N:
        raise SearchRefused(f"exact search is limited to n <= {UnionFreeConfig.EXACT_MAX_N}, got n={n}")

    started = time.monotonic()
    deadline = None if config.time_limit is None else started + config.time_limit
    workers = config.thread_hint or UnionFreeConfig.MAX_WORKERS

    seed = materialize_lower_bound(n)
    cap, _ = upper_bound(n)
    search = _BranchSearch(n, len(seed) - 1, cap, deadline, config.symmetry)
    logger.info(
        "searching n=%d over %d branches, seed %d, cap %d, %d workers",
        n, len(search.branches), len(seed), cap, workers,
    )

    with ThreadPoolExecutor(max_workers=workers) as executor:
        list(executor.map(search.run_branch, search.branches))

    best_size, best = search.winner()
    witness = seed
    if best is not None and best_size >= len(seed):
        witness = Family.of(n, best)

    status = TIMEOUT if search.timed_out else EXACT
    elapsed = time.monotonic() - started
    explored = sum(search.explored)
    logger.info("n=%d: %s, size %d, %d nodes in %.3fs", n, status, len(witness), explored, elapsed)
    return SearchResult(
        status=status,
        best_size=len(witness),
        witness=witness,
        explored=explored,
        elapsed=elapsed,
        workers=workers,
        symmetry=config.symmetry,
    )
