"""Integer partitions: exact counts and canonical enumeration.

All arithmetic is exact (Python ints).  Partitions are stored with parts in
non-increasing order; the empty partition is the unique partition of 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache


@dataclass(frozen=True)
class Partition:
    """A partition of a non-negative integer, parts non-increasing."""

    parts: tuple[int, ...]

    def __post_init__(self):
        for p in self.parts:
            if not isinstance(p, int) or p < 1:
                raise ValueError("parts must be positive integers")
        if any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise ValueError("parts must be non-increasing")

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def multiplicities(self) -> dict[int, int]:
        """Map part value -> number of times it occurs."""
        out: dict[int, int] = {}
        for p in self.parts:
            out[p] = out.get(p, 0) + 1
        return out

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)


@lru_cache(maxsize=None)
def partition_counts_upto(n: int) -> tuple[int, ...]:
    """Exact values p(0), p(1), ..., p(n)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    ways = [1] + [0] * n
    for part in range(1, n + 1):
        for total in range(part, n + 1):
            ways[total] += ways[total - part]
    return tuple(ways)


def partition_count(n: int) -> int:
    """p(n), the number of partitions of n."""
    return partition_counts_upto(n)[n]


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of n, largest first part first (reverse lexicographic)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    out: list[Partition] = []

    def descend(remaining: int, cap: int, prefix: list[int]):
        if remaining == 0:
            out.append(Partition(tuple(prefix)))
            return
        for part in range(min(cap, remaining), 0, -1):
            prefix.append(part)
            descend(remaining - part, part, prefix)
            prefix.pop()

    descend(n, n, [])
    return out
