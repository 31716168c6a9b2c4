"""Enumeration and validation of integer partitions."""

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Sequence, Tuple

from utils.exceptions import InvalidInputError


def _require_positive(value, name: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise InvalidInputError(f"{name} must be an integer, got {value!r}")
    if value <= 0:
        raise InvalidInputError(f"{name} must be positive, got {value}")
    return value


@dataclass(frozen=True)
class Partition:
    """
    A partition of n: a non-increasing tuple of positive integers.

    The constructor accepts canonical form only; use `Partition.canonical`
    to sort arbitrary positive parts.
    """

    parts: Tuple[int, ...]

    def __post_init__(self):
        parts = tuple(self.parts)
        if not parts:
            raise InvalidInputError("a partition needs at least one part")
        for part in parts:
            _require_positive(part, "partition part")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise InvalidInputError(f"parts must be non-increasing, got {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def canonical(cls, parts: Iterable[int]) -> "Partition":
        """Build a partition from positive parts given in any order."""
        parts = list(parts)
        for part in parts:
            _require_positive(part, "partition part")
        return cls(tuple(sorted(parts, reverse=True)))

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def multiplicities(self) -> Counter:
        return Counter(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"


def _descending(n: int, max_part: int) -> Iterator[Tuple[int, ...]]:
    # largest first part first gives reverse-lexicographic order
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in _descending(n - first, first):
            yield (first,) + rest


def enumerate_partitions(n: int) -> List[Partition]:
    """
    List every partition of n in reverse-lexicographic order.

    Args:
        n: Positive integer

    Returns:
        Partitions, starting with (n) and ending with (1, ..., 1)
    """
    _require_positive(n, "n")
    return [Partition(parts) for parts in _descending(n, n)]


def good_partitions(n: int) -> List[Partition]:
    """Good partitions of the constant polynomial n; these are exactly the partitions of n."""
    return enumerate_partitions(n)


def partition_count(n: int) -> int:
    """
    Number of partitions p(n), via Euler's pentagonal number recurrence.

    Args:
        n: Positive integer

    Returns:
        p(n)
    """
    _require_positive(n, "n")
    table = [1] + [0] * n
    for m in range(1, n + 1):
        total = 0
        k = 1
        while True:
            first = k * (3 * k - 1) // 2
            if first > m:
                break
            sign = 1 if k % 2 else -1
            total += sign * table[m - first]
            second = k * (3 * k + 1) // 2
            if second <= m:
                total += sign * table[m - second]
            k += 1
        table[m] = total
    return table[n]


def is_good_partition(family: Sequence[int], n: int) -> bool:
    """
    Decide whether a family of constant polynomials is a good partition of n.

    Hilb^k of a curve is non-empty exactly when k is positive, so the family
    must consist of positive integers summing to n. Order is irrelevant.
    """
    family = list(family)
    if not family:
        raise InvalidInputError("family must be non-empty")
    _require_positive(n, "n")
    for entry in family:
        if isinstance(entry, bool) or not isinstance(entry, int):
            raise InvalidInputError(f"family entries must be integers, got {entry!r}")
    return all(entry > 0 for entry in family) and sum(family) == n


def strip_common_parts(a: Partition, b: Partition) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """
    Remove equal parts pairwise from two partitions.

    Returns:
        The multiset differences a minus b and b minus a, each non-increasing
    """
    left = a.multiplicities()
    right = b.multiplicities()
    only_a = left - right
    only_b = right - left
    return (
        tuple(sorted(only_a.elements(), reverse=True)),
        tuple(sorted(only_b.elements(), reverse=True)),
    )
