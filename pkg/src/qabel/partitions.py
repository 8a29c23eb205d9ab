"""Integer partitions: representation, enumeration, and basic statistics.

A partition is stored as a weakly decreasing tuple of positive parts.  The
empty partition has size, length, smallest and largest part all equal to 0.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator


@dataclass(frozen=True, slots=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        prev = None
        for p in self.parts:
            if not isinstance(p, int) or p < 1:
                raise ValueError(f"parts must be positive integers, got {self.parts!r}")
            if prev is not None and p > prev:
                raise ValueError(f"parts must be weakly decreasing, got {self.parts!r}")
            prev = p

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> Partition:
        """Build a partition from parts in any order."""
        return cls(tuple(sorted(parts, reverse=True)))

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def smallest(self) -> int:
        return self.parts[-1] if self.parts else 0

    @property
    def largest(self) -> int:
        return self.parts[0] if self.parts else 0

    def multiplicities(self) -> Counter:
        return Counter(self.parts)

    def has_repeated_part(self) -> bool:
        return len(set(self.parts)) < len(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __repr__(self) -> str:
        return f"Partition{self.parts!r}"


EMPTY = Partition(())


def partitions_of(n: int) -> Iterator[Partition]:
    """Yield every partition of ``n`` once, in decreasing lexicographic order.

    ``(n)`` comes first and ``(1, 1, ..., 1)`` last; ``n = 0`` yields only the
    empty partition.  The stream is lazy and holds a single working list.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        yield EMPTY
        return
    a = [n]
    while True:
        yield Partition(tuple(a))
        ones = 0
        while a and a[-1] == 1:
            a.pop()
            ones += 1
        if not a:
            return
        x = a.pop() - 1
        rem = ones + 1
        a.append(x)
        while rem > x:
            a.append(x)
            rem -= x
        if rem:
            a.append(rem)


def partitions_up_to(n: int) -> Iterator[Partition]:
    """Partitions of 0, 1, ..., n in order of size."""
    for m in range(n + 1):
        yield from partitions_of(m)


def mu_p(lam: Partition) -> int:
    """Partition-theoretic Moebius function: 0 on repeated parts, else (-1)^length."""
    if lam.has_repeated_part():
        return 0
    return -1 if lam.length % 2 else 1


def conjugate(lam: Partition) -> Partition:
    """Transpose of the Young diagram."""
    if not lam.parts:
        return EMPTY
    cols = [0] * lam.largest
    for p in lam.parts:
        for i in range(p):
            cols[i] += 1
    return Partition(tuple(cols))


def adjoin(lam: Partition, n: int) -> Partition:
    """The partition ``lam . (n)`` obtained by adding one part equal to ``n``."""
    if n < 1:
        raise ValueError("adjoined part must be a positive integer")
    parts = lam.parts
    i = 0
    while i < len(parts) and parts[i] >= n:
        i += 1
    return Partition(parts[:i] + (n,) + parts[i:])


def multiplicity_of_largest(lam: Partition) -> int:
    if not lam.parts:
        return 0
    top = lam.parts[0]
    k = 0
    for p in lam.parts:
        if p != top:
            break
        k += 1
    return k


def is_gap_free(lam: Partition) -> bool:
    """True when every integer below the largest part occurs as a part."""
    return set(lam.parts) >= set(range(1, lam.largest))


def partitions_with_parts_at_least(max_size: int, m: int) -> Iterator[Partition]:
    """Nonempty partitions of size <= max_size whose parts are all >= m."""
    if m < 1:
        raise ValueError("m must be a positive integer")

    def walk(prefix: list[int], remaining: int, cap: int):
        for p in range(min(cap, remaining), m - 1, -1):
            prefix.append(p)
            yield Partition(tuple(prefix))
            yield from walk(prefix, remaining - p, p)
            prefix.pop()

    yield from walk([], max_size, max_size)
