"""Exhaustive generation of partitions and of class member listings.

partitions_of(n) yields every partition of n in lexicographically decreasing
order, starting from (n) and ending at (1,...,1).  Listings filter that
stream by class membership, preserving the order.  Generation is intended
for small n (roughly n <= 45); counting at larger n belongs to the DP and
series back-ends.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .core import Partition, PartitionClass, is_member


def partitions_of(n: int) -> Iterator[Partition]:
    """All partitions of n, lexicographically decreasing from (n)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        yield Partition._unsafe(())
        return
    parts = [n]
    while True:
        yield Partition._unsafe(tuple(parts))
        # Find the rightmost part greater than 1; everything after it is 1s.
        i = len(parts) - 1
        while i >= 0 and parts[i] == 1:
            i -= 1
        if i < 0:
            return
        parts[i] -= 1
        spare = len(parts) - i  # the dropped 1s plus the decremented unit
        del parts[i + 1:]
        while spare:
            chunk = min(parts[-1], spare)
            parts.append(chunk)
            spare -= chunk


@lru_cache(maxsize=None)
def all_partitions(n: int) -> tuple[Partition, ...]:
    """Materialized, cached form of partitions_of; empty for negative n."""
    if n < 0:
        return ()
    return tuple(partitions_of(n))


@dataclass(frozen=True)
class ClassListing:
    """The members of one class at one weight, in enumeration order."""

    n: int
    partition_class: PartitionClass
    members: tuple[Partition, ...]

    def to_lines(self) -> list[str]:
        return [p.to_text() for p in self.members]

    def to_obj(self) -> dict:
        return {
            "n": self.n,
            "class": self.partition_class.value,
            "members": [list(p) for p in self.members],
        }


def class_members(n: int, partition_class: PartitionClass) -> ClassListing:
    """List the partitions of n lying in a class, in decreasing lex order."""
    if n < 0:
        raise ValueError("n must be non-negative")
    source = all_partitions(n) if n <= 40 else partitions_of(n)
    members = tuple(p for p in source if is_member(p, partition_class))
    return ClassListing(n, partition_class, members)
