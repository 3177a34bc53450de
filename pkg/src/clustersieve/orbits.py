"""Orbit bookkeeping for cyclic group actions on finite sets."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Callable, Hashable, Iterable, Mapping


def orbit_sizes(items: Iterable[Hashable], act: Callable[[Hashable, int], Hashable], order: int) -> Counter:
    """Counter mapping orbit size to number of orbits under the generator act(., 1)."""
    seen: set = set()
    sizes: Counter = Counter()
    for x in items:
        if x in seen:
            continue
        cur, size = x, 0
        while True:
            seen.add(cur)
            size += 1
            cur = act(cur, 1)
            if cur == x:
                break
            if size > order:
                raise RuntimeError(f"orbit longer than the group order {order}")
        sizes[size] += 1
    return sizes


@dataclass(frozen=True)
class OrbitStructure:
    """Multiset of orbit sizes, written like ``16(4211), 8(3), 4(2)``."""

    counts: tuple[tuple[int, int], ...]  # (size, number of orbits), sizes descending

    @classmethod
    def from_counts(cls, counts: Mapping[int, int]) -> OrbitStructure:
        return cls(tuple(sorted(((int(k), int(v)) for k, v in counts.items() if v), reverse=True)))

    @classmethod
    def parse(cls, text: str) -> OrbitStructure:
        out: Counter = Counter()
        for part in text.replace(" ", "").split(","):
            if part:
                size, count = part.rstrip(")").split("(")
                out[int(size)] += int(count)
        return cls.from_counts(out)

    def as_dict(self) -> dict[int, int]:
        return dict(self.counts)

    @property
    def total(self) -> int:
        return sum(size * count for size, count in self.counts)

    @property
    def orbit_count(self) -> int:
        return sum(count for _, count in self.counts)

    def orbits_with_stabilizer_dividing(self, group_order: int, k: int) -> int:
        """Orbits whose stabilizer order divides k (k = 0 counts every orbit)."""
        return sum(c for size, c in self.counts if k % (group_order // size) == 0)

    def __str__(self) -> str:
        return ", ".join(f"{size}({count})" for size, count in self.counts) or "-"
