from __future__ import annotations

from dataclasses import dataclass
from typing import Any


@dataclass(frozen=True)
class Verdict:
    """Yes/no answer carrying a witness for the negative case."""

    holds: bool
    witness: Any = None

    def __bool__(self):
        return self.holds

    @classmethod
    def yes(cls) -> Verdict:
        return cls(True)

    @classmethod
    def no(cls, witness) -> Verdict:
        return cls(False, witness)
