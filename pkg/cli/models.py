import argparse
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, Literal, Optional

from pydantic import BaseModel, Field

Subcommand = Literal["construct", "verify", "bounds", "approx", "exact", "relabel"]

# namespace attributes that are routing or paths, not per-command flags
_RESERVED = {"subcommand", "action", "input_path", "output_path"}


class Invocation(BaseModel):
    subcommand: Subcommand
    action: Optional[str] = None
    flags: Dict[str, Any] = Field(default_factory=dict)
    input_path: Optional[Path] = None
    output_path: Optional[Path] = None

    @classmethod
    def from_namespace(cls, ns: argparse.Namespace) -> "Invocation":
        values = vars(ns)
        return cls(
            subcommand=values["subcommand"],
            action=values.get("action"),
            flags={k: v for k, v in values.items() if k not in _RESERVED},
            input_path=values.get("input_path"),
            output_path=values.get("output_path"),
        )

    def flag(self, name: str, default: Any = None) -> Any:
        value = self.flags.get(name)
        return default if value is None else value


@dataclass
class Outcome:
    """Exit code plus text for standard output (empty when written to a file)."""
    code: int
    text: str = ""
