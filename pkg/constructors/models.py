from pathlib import Path
from typing import List, Optional, Union

from pydantic import BaseModel, Field, model_validator

from config import UnionFreeConfig
from family_core.family import Family


class ChainSpec(BaseModel):
    """Parameters (n; m1 > m2 > ... > ml) of a chain family q(n; m1; ...; ml)."""
    n: int = Field(ge=1, le=UnionFreeConfig.MAX_GROUND)
    ms: List[int] = Field(min_length=1)

    @model_validator(mode="after")
    def _check_chain(self):
        if self.ms[0] > self.n:
            raise ValueError(f"m1={self.ms[0]} exceeds n={self.n}")
        if self.ms[-1] < 1:
            raise ValueError("every m must be at least 1")
        for prev, cur in zip(self.ms, self.ms[1:]):
            if cur >= prev:
                raise ValueError(f"ms must strictly decrease, got {self.ms}")
        return self

    @property
    def in_q(self) -> bool:
        """Membership in Q(n) additionally needs the chain to end at 1."""
        return self.ms[-1] == 1

    def label(self) -> str:
        return f"q({self.n}; {','.join(str(m) for m in self.ms)})"


class CushionLevel(BaseModel):
    m: int = Field(ge=1)
    h: int = Field(ge=0)
    cushion: List[List[int]] = Field(default_factory=lambda: [[]])

    @classmethod
    def from_family(cls, m: int, h: int, family: Family) -> "CushionLevel":
        return cls(m=m, h=h, cushion=family.to_sets())


class CushionSpec(BaseModel):
    n: int = Field(ge=1, le=UnionFreeConfig.MAX_GROUND)
    levels: List[CushionLevel] = Field(min_length=1)

    def label(self) -> str:
        parts = [f"{lv.m},{lv.h}" for lv in self.levels]
        return f"q({self.n}; {'; '.join(parts)})"


class LayeredSpec(BaseModel):
    """Layers F_1..F_p and G_1..G_p of a composition ⋃ (F_j ⊕ G_j)."""
    fs: List[List[List[int]]] = Field(min_length=1)
    gs: List[List[List[int]]] = Field(min_length=1)
    n: Optional[int] = Field(default=None, ge=1, le=UnionFreeConfig.MAX_GROUND)

    @model_validator(mode="after")
    def _check_shape(self):
        if len(self.fs) != len(self.gs):
            raise ValueError(f"fs has {len(self.fs)} layers but gs has {len(self.gs)}")
        largest = max(
            (e for layer in self.fs + self.gs for subset in layer for e in subset),
            default=1,
        )
        if self.n is None:
            self.n = max(largest, 1)
        elif largest > self.n:
            raise ValueError(f"element {largest} exceeds n={self.n}")
        return self

    @classmethod
    def from_families(cls, fs: List[Family], gs: List[Family]) -> "LayeredSpec":
        n = max(f.n for f in fs + gs)
        return cls(fs=[f.to_sets() for f in fs], gs=[g.to_sets() for g in gs], n=n)


def load_cushion_spec(path: Union[str, Path]) -> CushionSpec:
    return CushionSpec.model_validate_json(Path(path).read_text(encoding="utf-8"))


def load_layered_spec(path: Union[str, Path]) -> LayeredSpec:
    return LayeredSpec.model_validate_json(Path(path).read_text(encoding="utf-8"))
