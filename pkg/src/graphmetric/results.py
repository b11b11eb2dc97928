"""Small result records shared by the predicate-style checks."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any


@dataclass(frozen=True)
class CheckResult:
    """Outcome of a decision procedure; truthy iff the property holds.

    ``witness`` is ``None`` when the property holds, otherwise whatever the
    check produced as evidence against it.
    """

    holds: bool
    witness: Any = None

    def __bool__(self):
        return self.holds
