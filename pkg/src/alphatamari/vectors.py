from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Tuple

from .combinatorics import Composition
from .errors import CompositionMismatch, IndexOutOfRange


@dataclass(frozen=True)
class IntVector:
    """Integer tuple tied to a composition, indexed from 1."""

    alpha: Composition
    values: Tuple[int, ...]

    def __len__(self):
        return len(self.values)

    def __getitem__(self, i: int) -> int:
        if not 1 <= i <= len(self.values):
            raise IndexOutOfRange(f"index {i} is outside 1..{len(self.values)}")
        return self.values[i - 1]

    def __str__(self) -> str:
        return format_vector(self.values)


def componentwise_leq(a: IntVector, b: IntVector) -> bool:
    if a.alpha != b.alpha:
        raise CompositionMismatch(f"compositions differ: ({a.alpha}) vs ({b.alpha})")
    if len(a.values) != len(b.values):
        raise CompositionMismatch("vectors have different lengths")
    return all(x <= y for x, y in zip(a.values, b.values))


def format_vector(values: Sequence[int]) -> str:
    return ",".join(str(v) for v in values)


def parse_vector(text: str) -> Tuple[int, ...]:
    text = text.strip().strip("()")
    if not text:
        return ()
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise ValueError(f"cannot parse {text!r}; expected comma-separated integers") from None
