"""
Set partition enumeration.

Partitions are generated recursively: partition the tail, then either insert
the head into one of the existing blocks or give it a block of its own.
"""

from typing import Iterator, List, Sequence, Tuple, TypeVar

T = TypeVar("T")


def set_partitions(items: Sequence[T]) -> Iterator[Tuple[Tuple[T, ...], ...]]:
    """Yield every partition of ``items`` into nonempty blocks.

    Blocks keep the relative order of ``items``; the empty sequence has the
    single empty partition.
    """
    items = list(items)
    if not items:
        yield ()
        return
    for blocks in _partitions(items):
        yield tuple(tuple(block) for block in blocks)


def _partitions(items: List[T]) -> Iterator[List[List[T]]]:
    if len(items) == 1:
        yield [[items[0]]]
        return

    first = items[0]
    for smaller in _partitions(items[1:]):
        for n, subset in enumerate(smaller):
            yield smaller[:n] + [[first] + subset] + smaller[n + 1:]
        yield [[first]] + smaller


def bell_number(n: int) -> int:
    """Number of partitions of an n-element set (Bell triangle)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    row = [1]
    for _ in range(n):
        next_row = [row[-1]]
        for value in row:
            next_row.append(next_row[-1] + value)
        row = next_row
    return row[0]
