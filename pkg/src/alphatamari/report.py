from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional


@dataclass(frozen=True)
class Report:
    """Outcome of a validity check.

    Truthy iff valid. ``indices`` maps index names (``i``, ``j``, ``a``, ...)
    to 1-based positions of the first violation found.
    """

    valid: bool
    condition: Optional[str] = None
    indices: dict = field(default_factory=dict)
    detail: str = ""

    def __bool__(self) -> bool:
        return self.valid

    @classmethod
    def ok(cls) -> "Report":
        return cls(True)

    @classmethod
    def fail(cls, condition: str, detail: str = "", **indices) -> "Report":
        return cls(False, condition, dict(indices), detail)

    @property
    def message(self) -> str:
        if self.valid:
            return "valid"
        where = ", ".join(f"{k}={v}" for k, v in self.indices.items())
        msg = f"{self.condition} violated"
        if where:
            msg += f" at {where}"
        if self.detail:
            msg += f" ({self.detail})"
        return msg

    def to_dict(self) -> dict:
        return {"valid": self.valid, "condition": self.condition, "indices": dict(self.indices)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)
