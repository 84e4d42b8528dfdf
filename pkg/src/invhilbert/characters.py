"""Irreducible characters of the symmetric groups.

Values come from the Murnaghan-Nakayama rule: remove a rim hook of length
rho[0] (the largest cycle first) and recurse on the rest of the cycle type,
with sign (-1)^(rows spanned - 1).  Rim hooks are found on the beta-set
(abacus) of the shape, where removing a k-hook moves one bead k places down.

Two access paths share the same rule:

* :func:`character` answers single queries through a memoized recursion
  keyed by (remaining shape, remaining cycle type);
* :func:`character_table` builds whole tables column by column, each column
  obtained from the column of the shortened cycle type by a sparse signed
  rim-hook operator.  This is what the Kronecker sums use.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Mapping

import numpy as np

from .errors import ConsistencyError
from .partitions import (
    Partition,
    enumerate_partitions,
    make_partition,
    partition_index,
    z_factor,
)

# |chi| <= dim <= sqrt(n!) and every partial sum of the rim-hook recursion is
# bounded by dim as well, so int64 columns are exact up to this degree.
INT64_SAFE_DEGREE = 33


def class_size(rho: Partition) -> int:
    """Number of permutations of cycle type ``rho``: n!/z_rho."""
    return factorial(sum(rho)) // z_factor(rho)


@lru_cache(maxsize=None)
def remove_rim_hooks(shape: Partition, k: int) -> tuple[tuple[Partition, int], ...]:
    """All ways to remove a rim hook of length ``k`` from ``shape``.

    Returns pairs (smaller shape, sign) with sign = (-1)^height.
    """
    length = len(shape)
    beta = [p + length - 1 - i for i, p in enumerate(shape)]
    beads = set(beta)
    out = []
    for b in beta:
        target = b - k
        if target < 0 or target in beads:
            continue
        height = sum(1 for c in beta if target < c < b)
        new_beta = sorted((beads - {b}) | {target}, reverse=True)
        smaller = tuple(c - (length - 1 - i) for i, c in enumerate(new_beta))
        out.append((tuple(p for p in smaller if p), -1 if height % 2 else 1))
    return tuple(out)


@lru_cache(maxsize=None)
def _mn(shape: Partition, rho: Partition) -> int:
    if not rho:
        return 1
    k, rest = rho[0], rho[1:]
    return sum(sign * _mn(smaller, rest) for smaller, sign in remove_rim_hooks(shape, k))


def character(lam: Partition, rho: Partition) -> int:
    """chi^lam evaluated on the class of cycle type ``rho``."""
    lam, rho = make_partition(lam), make_partition(rho)
    if sum(lam) != sum(rho):
        raise ValueError(f"weights differ: |{lam}|={sum(lam)}, |{rho}|={sum(rho)}")
    return _mn(lam, tuple(sorted(rho, reverse=True)))


@lru_cache(maxsize=None)
def _hook_operator(m: int, k: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Sparse map from columns over partitions of m-k to partitions of m."""
    idx_small = partition_index(m - k)
    tgt, src, sgn = [], [], []
    for t, lam in enumerate(enumerate_partitions(m)):
        for smaller, sign in remove_rim_hooks(lam, k):
            tgt.append(t)
            src.append(idx_small[smaller])
            sgn.append(sign)
    return (np.array(tgt, dtype=np.intp), np.array(src, dtype=np.intp),
            np.array(sgn, dtype=np.int64))


@lru_cache(maxsize=None)
def _column(rho: Partition) -> np.ndarray:
    m = sum(rho)
    dtype = np.int64 if m <= INT64_SAFE_DEGREE else object
    if not rho:
        return np.ones(1, dtype=dtype)
    prev = _column(rho[1:])
    tgt, src, sgn = _hook_operator(m, rho[0])
    col = np.zeros(len(partition_index(m)), dtype=dtype)
    np.add.at(col, tgt, (sgn.astype(dtype) * prev[src]))
    return col


class CharacterTable:
    """The full character table of S_n.

    Rows are irreducibles and columns are classes, both in the canonical
    partition order.  Entries are exact; ``row`` hands out Python ints.
    """

    def __init__(self, n: int):
        self.n = n
        self.partitions = enumerate_partitions(n)
        self.index = partition_index(n)
        cols = [_column(rho) for rho in self.partitions]
        self.values = np.stack(cols, axis=1)
        self.class_sizes = [class_size(rho) for rho in self.partitions]
        self._rows: list[list[int]] | None = None

    def __call__(self, lam: Partition, rho: Partition) -> int:
        return int(self.values[self.index[lam], self.index[rho]])

    def rows(self) -> list[list[int]]:
        if self._rows is None:
            self._rows = [[int(v) for v in r] for r in self.values]
        return self._rows

    def row(self, lam: Partition) -> list[int]:
        return self.rows()[self.index[lam]]


@lru_cache(maxsize=None)
def character_table(n: int) -> CharacterTable:
    return CharacterTable(n)


def inner_product(phi: Mapping[Partition, int], psi: Mapping[Partition, int], n: int) -> int:
    """<phi, psi> = (1/n!) sum_rho |C_rho| phi(rho) psi(rho) for integer class functions.

    Both maps must cover every cycle type of ``n``.  Raises ConsistencyError if
    the result is not an integer, since every caller pairs genuine characters.
    """
    total = 0
    for rho in enumerate_partitions(n):
        total += class_size(rho) * phi[rho] * psi[rho]
    value = Fraction(total, factorial(n))
    if value.denominator != 1:
        raise ConsistencyError(f"inner product {value} is not an integer")
    return int(value)
