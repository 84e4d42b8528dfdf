"""Integer partitions stored as weakly decreasing tuples of positive parts.

A partition doubles as the cycle type of a conjugacy class of S_n.  The empty
tuple is the unique partition of 0.
"""

from __future__ import annotations

from functools import lru_cache
from math import factorial
from typing import Iterable, Optional

Partition = tuple[int, ...]


def make_partition(parts: Iterable[int]) -> Partition:
    """Validate ``parts`` and return them as a canonical partition tuple.

    Zero parts are dropped; anything negative or increasing raises ValueError.
    """
    out = tuple(int(p) for p in parts)
    if any(p < 0 for p in out):
        raise ValueError(f"negative part in {out}")
    out = tuple(p for p in out if p)
    if any(a < b for a, b in zip(out, out[1:])):
        raise ValueError(f"parts must be weakly decreasing: {out}")
    return out


def parse_partition(text: str) -> Partition:
    """Parse the comma-separated serialization, e.g. ``"3,1"``; ``""`` is ()."""
    text = text.strip()
    if not text:
        return ()
    return make_partition(int(tok) for tok in text.split(","))


def format_partition(lam: Partition) -> str:
    return ",".join(str(p) for p in lam)


def weight(lam: Partition) -> int:
    return sum(lam)


@lru_cache(maxsize=None)
def _partitions(n: int, max_part: int, max_rows: int) -> tuple[Partition, ...]:
    # lexicographically decreasing: largest first part first
    if n == 0:
        return ((),)
    if max_rows == 0:
        return ()
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in _partitions(n - first, first, max_rows - 1):
            out.append((first,) + rest)
    return tuple(out)


def enumerate_partitions(n: int, max_rows: Optional[int] = None) -> list[Partition]:
    """All partitions of ``n`` with at most ``max_rows`` parts.

    The order is lexicographically decreasing, so ``(n,)`` comes first and
    ``(1,)*n`` last.  ``max_rows=None`` means unbounded.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if max_rows is None or max_rows > n:
        max_rows = n
    return list(_partitions(n, n, max_rows))


@lru_cache(maxsize=None)
def partition_index(n: int) -> dict[Partition, int]:
    """Position of each partition of ``n`` in ``enumerate_partitions(n)``."""
    return {lam: k for k, lam in enumerate(_partitions(n, n, n))}


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > c) for c in range(lam[0]))


def contains(outer: Partition, inner: Partition) -> bool:
    """True iff the diagram of ``inner`` fits inside the diagram of ``outer``."""
    if len(inner) > len(outer):
        return False
    return all(a >= b for a, b in zip(outer, inner))


def partitions_inside(outer: Partition, n: int) -> list[Partition]:
    """Partitions of ``n`` whose diagrams fit inside ``outer``."""
    out = []

    def rec(row: int, left: int, cap: int, acc: list[int]) -> None:
        if left == 0:
            out.append(tuple(acc))
            return
        if row == len(outer):
            return
        for p in range(min(cap, outer[row], left), 0, -1):
            acc.append(p)
            rec(row + 1, left - p, p, acc)
            acc.pop()

    rec(0, n, n, [])
    return out


def hook_dimension(lam: Partition) -> int:
    """Dimension of the Specht module of ``lam`` by the hook-length formula."""
    conj = conjugate(lam)
    hooks = 1
    for i, row in enumerate(lam):
        for j in range(row):
            hooks *= (row - j) + (conj[j] - i) - 1
    return factorial(sum(lam)) // hooks


def multiplicities(lam: Partition) -> dict[int, int]:
    mult: dict[int, int] = {}
    for p in lam:
        mult[p] = mult.get(p, 0) + 1
    return mult


def z_factor(rho: Partition) -> int:
    """Centralizer order z = prod m^{a_m} a_m! of a permutation of cycle type ``rho``."""
    z = 1
    for m, a in multiplicities(rho).items():
        z *= m**a * factorial(a)
    return z
