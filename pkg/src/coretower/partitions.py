"""Integer partitions, Young diagrams, hook lengths, and exact counting.

Partitions are stored as explicit tuples of weakly decreasing positive
parts; the empty tuple is the empty partition.  Every object here is an
immutable value, so results can be shared freely between threads, and
enumeration streams are independent per call.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing tuple of positive integer parts."""

    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = self.parts
        for i, part in enumerate(parts):
            if part < 1:
                raise ValueError(f"part {part} at index {i} is not a positive integer")
            if i > 0 and parts[i - 1] < part:
                raise ValueError(
                    f"parts must be weakly decreasing; "
                    f"parts[{i - 1}]={parts[i - 1]} < parts[{i}]={part}"
                )

    @cached_property
    def size(self) -> int:
        """Number of cells of the Young diagram, i.e. the sum of the parts."""
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __bool__(self) -> bool:
        return bool(self.parts)

    def __repr__(self) -> str:
        return f"Partition({list(self.parts)!r})"


EMPTY = Partition()


def make_partition(parts: Iterable[int]) -> Partition:
    """Validate an iterable of parts and return the corresponding Partition."""
    return Partition(tuple(parts))


def conjugate(lam: Partition) -> Partition:
    """Transpose of the Young diagram."""
    parts = lam.parts
    if not parts:
        return EMPTY
    cols = [0] * parts[0]
    for p in parts:
        for j in range(p):
            cols[j] += 1
    return Partition(tuple(cols))


def hook_lengths(lam: Partition) -> list[list[int]]:
    """Hook length of every cell, row by row.

    The hook of a cell counts the cells to its right, the cells below it,
    and the cell itself.
    """
    parts = lam.parts
    if not parts:
        return []
    col_heights = conjugate(lam).parts
    grid = []
    for i, row_len in enumerate(parts):
        grid.append(
            [(row_len - j - 1) + (col_heights[j] - i - 1) + 1 for j in range(row_len)]
        )
    return grid


def enumerate_partitions(n: int) -> Iterator[Partition]:
    """Yield every partition of n exactly once, in reverse-lexicographic order.

    (n) comes first and (1, ..., 1) last; the stream has partition_count(n)
    entries.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    return (Partition(p) for p in _descending_parts(n, n))


def _descending_parts(remaining: int, largest: int) -> Iterator[tuple[int, ...]]:
    if remaining == 0:
        yield ()
        return
    for first in range(min(remaining, largest), 0, -1):
        for rest in _descending_parts(remaining - first, first):
            yield (first, *rest)


# Memo table for Euler's pentagonal number recurrence.  Grown on demand,
# never trimmed; p(n) is needed far beyond enumeration range (n ~ 400).
_pcounts: list[int] = [1]


def partition_count(n: int) -> int:
    """p(n), the number of partitions of n, via the pentagonal recurrence.

    Kept independent of the power-series module so the two can be checked
    against each other.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    while len(_pcounts) <= n:
        m = len(_pcounts)
        total = 0
        k = 1
        while True:
            g = k * (3 * k - 1) // 2
            if g > m:
                break
            sign = 1 if k % 2 else -1
            total += sign * _pcounts[m - g]
            g += k
            if g <= m:
                total += sign * _pcounts[m - g]
            k += 1
        _pcounts.append(total)
    return _pcounts[n]
