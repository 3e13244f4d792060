# exact/models.py
from dataclasses import dataclass
from typing import Any, Dict, Optional

from pydantic import BaseModel, Field

from config import UnionFreeConfig
from family_core.family import Family

EXACT = "exact"
TIMEOUT = "timeout"


class SearchConfig(BaseModel):
    n: int = Field(ge=1, le=UnionFreeConfig.MAX_GROUND)
    time_limit: Optional[float] = Field(default=None, gt=0)
    thread_hint: Optional[int] = Field(default=None, ge=1)
    symmetry: bool = False


@dataclass(frozen=True)
class SearchResult:
    status: str
    best_size: int
    witness: Family
    explored: int
    elapsed: float = 0.0
    workers: int = 1
    symmetry: bool = False

    @property
    def is_exact(self) -> bool:
        return self.status == EXACT

    def to_report(self) -> Dict[str, Any]:
        return {
            "n": self.witness.n,
            "status": self.status,
            "best_size": self.best_size,
            "explored": self.explored,
            "elapsed_seconds": round(self.elapsed, 6),
            "workers": self.workers,
            "symmetry": self.symmetry,
            "witness": self.witness.to_sets(),
        }
