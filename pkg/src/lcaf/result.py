from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Tuple

Witness = Tuple[int, int, int]  # (start_a, start_b, length), 1-based starts


@dataclass
class Occurrences:
    """One Abelian equivalence class at the answer length: every A start in
    `starts_a` matches every B start in `starts_b`."""

    length: int
    starts_a: List[int]
    starts_b: List[int]


@dataclass
class LcafResult:
    length: int
    witnesses: List[Witness] = field(default_factory=list)
    counters: Dict[str, int] = field(default_factory=dict)
    occurrences: List[Occurrences] = field(default_factory=list)

    def bump(self, name: str, by: int = 1) -> None:
        self.counters[name] = self.counters.get(name, 0) + by
