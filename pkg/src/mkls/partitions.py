"""Integer partitions, three-block shapes and standard Young tableau counts."""
from __future__ import annotations

from functools import lru_cache
from math import factorial, prod
from typing import Iterator, Optional

Partition = tuple  # tuple[int, ...], weakly decreasing, positive parts


def make_partition(parts) -> Partition:
    """Validate and return ``parts`` as a partition tuple; zero parts are dropped."""
    p = tuple(int(x) for x in parts if x != 0)
    if any(x < 0 for x in p):
        raise ValueError(f"negative part in {tuple(parts)}")
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValueError(f"{tuple(parts)} is not weakly decreasing")
    return p


def is_partition(parts) -> bool:
    return all(x > 0 for x in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


def normalize_shape(head: int, twos: int, ones: int) -> Optional[Partition]:
    """The shape ``(head, 2^twos, 1^ones)``, or None when it is not a partition.

    None stands for the zero representation. Negative multiplicities, a head
    shorter than a following row of 2s, and a zero head followed by parts all
    give None.
    """
    if twos < 0 or ones < 0 or head < 0:
        return None
    if twos > 0 and head < 2:
        return None
    if head == 0:
        return () if twos == 0 and ones == 0 else None
    return (head,) + (2,) * twos + (1,) * ones


def partitions_of(n: int, max_part: Optional[int] = None) -> Iterator[Partition]:
    """All partitions of ``n`` in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for part in lam if part > j) for j in range(lam[0]))


def hook_lengths(lam: Partition) -> list[int]:
    conj = conjugate(lam)
    return [
        (row - j - 1) + (conj[j] - i - 1) + 1
        for i, row in enumerate(lam)
        for j in range(row)
    ]


@lru_cache(maxsize=None)
def dim_syt(lam: Partition) -> int:
    """Number of standard Young tableaux of shape ``lam`` (hook-length formula)."""
    return factorial(sum(lam)) // prod(hook_lengths(lam))


def n_stat(lam: Partition) -> int:
    """sum_i (i-1) * lam_i over rows, 1-indexed."""
    return sum(i * part for i, part in enumerate(lam))


def removable_cells(lam: Partition) -> list[Partition]:
    """Partitions obtained from ``lam`` by deleting one corner cell."""
    out = []
    for i, part in enumerate(lam):
        nxt = lam[i + 1] if i + 1 < len(lam) else 0
        if part > nxt:
            smaller = list(lam)
            smaller[i] -= 1
            out.append(make_partition(smaller))
    return out


def multinomial(n: int, *parts: int) -> int:
    if any(p < 0 for p in parts) or sum(parts) != n:
        return 0
    return factorial(n) // prod(factorial(p) for p in parts)
