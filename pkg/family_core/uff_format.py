# family_core/uff_format.py
"""
`.uff` text format:

    # optional comment lines
    n=4
    {1}
    {1,2}
    {}          <- the empty set

Elements are ascending integers in [1, n]; serialisation always emits the
canonical member order.
"""
import re
from pathlib import Path
from typing import List, Union

from family_core.errors import FamilyParseError
from family_core.family import Family
from family_core.masks import SubsetMask, check_ground, format_mask

_HEADER = re.compile(r"^n\s*=\s*(\d+)$", re.ASCII)
_SUBSET = re.compile(r"^\{\s*(.*?)\s*\}$")


def _parse_subset(body: str, n: int, line_no: int) -> SubsetMask:
    if not body:
        return 0
    mask = 0
    previous = 0
    for token in body.split(","):
        token = token.strip()
        if not (token.isascii() and token.isdigit()):
            raise FamilyParseError(line_no, f"malformed element {token!r}")
        e = int(token)
        if e < 1:
            raise FamilyParseError(line_no, f"element {e} is below 1")
        if e > n:
            raise FamilyParseError(line_no, f"element {e} exceeds n={n}")
        if e <= previous:
            raise FamilyParseError(line_no, "elements must be strictly ascending")
        previous = e
        mask |= 1 << (e - 1)
    return mask


def parse_family(text: str) -> Family:
    n = None
    seen = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue

        if n is None:
            header = _HEADER.match(line)
            if not header:
                raise FamilyParseError(line_no, f"expected 'n=<int>' header, got {line!r}")
            n = int(header.group(1))
            try:
                check_ground(n)
            except ValueError as exc:
                raise FamilyParseError(line_no, str(exc)) from exc
            continue

        subset = _SUBSET.match(line)
        if not subset:
            raise FamilyParseError(line_no, f"malformed subset {line!r}")
        mask = _parse_subset(subset.group(1), n, line_no)
        if mask in seen:
            raise FamilyParseError(
                line_no, f"duplicate subset {format_mask(mask)} (first on line {seen[mask]})"
            )
        seen[mask] = line_no

    if n is None:
        raise FamilyParseError(0, "missing 'n=<int>' header")
    return Family.of(n, seen)


def serialize_family(family: Family) -> str:
    lines: List[str] = [f"n={family.n}"]
    lines.extend(format_mask(m) for m in family)
    return "\n".join(lines) + "\n"


def load_family(path: Union[str, Path]) -> Family:
    return parse_family(Path(path).read_text(encoding="utf-8"))


def save_family(family: Family, path: Union[str, Path]) -> None:
    Path(path).write_text(serialize_family(family), encoding="utf-8")
