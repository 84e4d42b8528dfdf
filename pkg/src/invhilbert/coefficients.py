"""Kronecker, Littlewood-Richardson and iterated Littlewood-Richardson coefficients.

Everything here is read off the character engine:

    g(lam, mu, nu)  = (1/n!) sum_rho |C_rho| chi^lam chi^mu chi^nu (rho)
    c_{mu,nu}^lam   = < Ind_{S_a x S_b}^{S_n} (chi^mu x chi^nu), chi^lam >

LR tableau counting is kept as an independent witness for the second one.
"""

from __future__ import annotations

from functools import lru_cache
from math import factorial
from operator import mul
from typing import Optional, Sequence

import numpy as np

from .characters import character, character_table
from .errors import ConsistencyError
from .partitions import (
    Partition,
    contains,
    enumerate_partitions,
    make_partition,
    partition_index,
    partitions_inside,
)


def _exact_div(total: int, d: int, what: str) -> int:
    q, r = divmod(total, d)
    if r:
        raise ConsistencyError(f"{what}: {total}/{d} is not an integer")
    if q < 0:
        raise ConsistencyError(f"{what}: negative multiplicity {q}")
    return q


# -- Kronecker ---------------------------------------------------------------

def kronecker(lam: Partition, mu: Partition, nu: Partition) -> int:
    """The Kronecker coefficient g(lam, mu, nu): multiplicity of S_nu in S_lam (x) S_mu."""
    lam, mu, nu = make_partition(lam), make_partition(mu), make_partition(nu)
    n = sum(lam)
    if sum(mu) != n or sum(nu) != n:
        raise ValueError(f"Kronecker coefficient needs equal weights, got {lam}, {mu}, {nu}")
    table = character_table(n)
    total = sum(
        c * a * b * d
        for c, a, b, d in zip(table.class_sizes, table.row(lam), table.row(mu), table.row(nu))
    )
    return _exact_div(total, factorial(n), f"g{lam, mu, nu}")


def kronecker_vector(lam: Partition, mu: Partition) -> tuple[int, ...]:
    """g(lam, mu, nu) for every nu of n, in canonical partition order.

    One weighted vector u = |C| chi^lam chi^mu is shared by all nu, so a
    whole decomposition of S_lam (x) S_mu costs one pass over the table.
    """
    lam, mu = make_partition(lam), make_partition(mu)
    return _kronecker_vector(*sorted((lam, mu)))


@lru_cache(maxsize=4096)
def _kronecker_vector(lam: Partition, mu: Partition) -> tuple[int, ...]:
    n = sum(lam)
    if sum(mu) != n:
        raise ValueError(f"weights differ: {lam}, {mu}")
    table = character_table(n)
    u = list(map(mul, table.class_sizes, map(mul, table.row(lam), table.row(mu))))
    nfact = factorial(n)
    return tuple(
        _exact_div(sum(map(mul, row, u)), nfact, f"g{lam, mu, nu}")
        for nu, row in zip(table.partitions, table.rows())
    )


# -- Littlewood-Richardson -----------------------------------------------------

def _merge(alpha: Partition, beta: Partition) -> Partition:
    return tuple(sorted(alpha + beta, reverse=True))


def lr_coefficient(mu: Partition, nu: Partition, lam: Partition) -> int:
    """c_{mu,nu}^lam, the multiplicity of S_lam in Ind(S_mu (x) S_nu).

    The induced character is paired with chi^lam through the sum over
    classes (alpha, beta) of the Young subgroup S_a x S_b.
    """
    mu, nu, lam = make_partition(mu), make_partition(nu), make_partition(lam)
    a, b = sum(mu), sum(nu)
    if a + b != sum(lam):
        raise ValueError(f"|{mu}| + |{nu}| != |{lam}|")
    ta, tb = character_table(a), character_table(b)
    row_mu = [s * v for s, v in zip(ta.class_sizes, ta.row(mu))]
    row_nu = [s * v for s, v in zip(tb.class_sizes, tb.row(nu))]
    total = 0
    for alpha, wa in zip(ta.partitions, row_mu):
        if not wa:
            continue
        for beta, wb in zip(tb.partitions, row_nu):
            if wb:
                total += wa * wb * character(lam, _merge(alpha, beta))
    return _exact_div(total, factorial(a) * factorial(b), f"c^{lam}_{mu, nu}")


def lr_tableaux(mu: Partition, nu: Partition, lam: Partition) -> int:
    """c_{mu,nu}^lam by counting LR tableaux of shape lam/mu and content nu.

    Rows weakly increase, columns strictly increase, and the reverse reading
    word (right to left, top to bottom) is a lattice word.
    """
    mu, nu, lam = make_partition(mu), make_partition(nu), make_partition(lam)
    if sum(mu) + sum(nu) != sum(lam):
        raise ValueError(f"|{mu}| + |{nu}| != |{lam}|")
    if not contains(lam, mu):
        return 0
    cells = []
    for r, row in enumerate(lam):
        start = mu[r] if r < len(mu) else 0
        cells.extend((r, c) for c in range(row - 1, start - 1, -1))
    filling: dict[tuple[int, int], int] = {}
    counts = [0] * (len(nu) + 1)
    content = list(nu)

    def rec(pos: int) -> int:
        if pos == len(cells):
            return 1
        r, c = cells[pos]
        hi = len(nu)
        right = filling.get((r, c + 1))
        if right is not None:
            hi = min(hi, right)
        lo = 1
        above = filling.get((r - 1, c))
        if above is not None:
            lo = above + 1
        total = 0
        for v in range(lo, hi + 1):
            if counts[v] >= content[v - 1]:
                continue
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            counts[v] += 1
            filling[(r, c)] = v
            total += rec(pos + 1)
            del filling[(r, c)]
            counts[v] -= 1
        return total

    return rec(0)


# above this weight a full character table of S_n stops being cheap
LR_TABLE_CHARACTER_LIMIT = 20


@lru_cache(maxsize=None)
def lr_table(
    a: int, b: int, max_rows: Optional[int] = None, method: str = "auto"
) -> dict[tuple[Partition, Partition, Partition], int]:
    """All nonzero c_{mu,nu}^lam with mu |- a, nu |- b, lam |- a+b, at most ``max_rows`` rows each.

    ``method="characters"`` uses the induced-character pairing of
    :func:`lr_coefficient`, batched as c = A M_lam B^T with A, B the
    class-weighted character rows of S_a, S_b and M_lam[alpha, beta] =
    chi^lam(alpha u beta).  That needs the whole table of S_{a+b} however
    few rows are allowed, so ``"auto"`` switches to LR tableaux once a row
    bound is given and a + b exceeds LR_TABLE_CHARACTER_LIMIT.  Bounding the
    rows is exact: c_{mu,nu}^lam vanishes unless mu and nu fit inside lam.
    """
    if method not in ("auto", "characters", "tableaux"):
        raise ValueError(f"unknown LR method {method!r}")
    if method == "auto":
        big = max_rows is not None and a + b > LR_TABLE_CHARACTER_LIMIT
        method = "tableaux" if big else "characters"
    if method == "tableaux":
        return _lr_table_tableaux(a, b, max_rows)
    n = a + b
    ta, tb, tn = character_table(a), character_table(b), character_table(n)
    idx_n = partition_index(n)
    join = np.array([[idx_n[_merge(al, be)] for be in tb.partitions] for al in ta.partitions],
                    dtype=np.intp)
    P_a = enumerate_partitions(a, max_rows)
    P_b = enumerate_partitions(b, max_rows)
    A = np.array([[s * v for s, v in zip(ta.class_sizes, ta.row(m))] for m in P_a], dtype=object)
    B = np.array([[s * v for s, v in zip(tb.class_sizes, tb.row(m))] for m in P_b], dtype=object)
    denom = factorial(a) * factorial(b)
    out = {}
    for lam in enumerate_partitions(n, max_rows):
        M = tn.values[tn.index[lam]][join].astype(object)
        C = A.dot(M).dot(B.T)
        for i, m1 in enumerate(P_a):
            for j, m2 in enumerate(P_b):
                c = _exact_div(int(C[i, j]), denom, f"c^{lam}_{m1, m2}")
                if c:
                    out[(m1, m2, lam)] = c
    return out


@lru_cache(maxsize=None)
def lr_skew_decomposition(mu: Partition, lam: Partition) -> dict[Partition, int]:
    """{nu: c_{mu,nu}^lam} for all nu, from one pass over the LR fillings of lam/mu.

    Same filling rules as :func:`lr_tableaux` without a fixed content; each
    filling is binned by its content, which the lattice condition forces to
    be a partition.
    """
    mu, lam = make_partition(mu), make_partition(lam)
    if not contains(lam, mu):
        return {}
    cells = []
    for r, row in enumerate(lam):
        start = mu[r] if r < len(mu) else 0
        cells.extend((r, c) for c in range(row - 1, start - 1, -1))
    filling: dict[tuple[int, int], int] = {}
    counts = [0] * (len(lam) + 1)
    out: dict[Partition, int] = {}

    def rec(pos: int) -> None:
        if pos == len(cells):
            nu = tuple(v for v in counts[1:] if v)
            out[nu] = out.get(nu, 0) + 1
            return
        r, c = cells[pos]
        hi = min(filling.get((r, c + 1), len(lam)), r + 1)
        lo = filling.get((r - 1, c), 0) + 1
        for v in range(lo, hi + 1):
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            counts[v] += 1
            filling[(r, c)] = v
            rec(pos + 1)
            del filling[(r, c)]
            counts[v] -= 1

    rec(0)
    return out


def _lr_table_tableaux(a: int, b: int, max_rows: Optional[int]) -> dict:
    out = {}
    for lam in enumerate_partitions(a + b, max_rows):
        for mu in enumerate_partitions(a, max_rows):
            for nu, c in lr_skew_decomposition(mu, lam).items():
                out[(mu, nu, lam)] = c
    return out


def iterated_lr(shapes: Sequence[Partition], lam: Partition) -> int:
    """Coefficient of [S_lam] in the product [S_lam1]...[S_lamk], by a left fold.

    Intermediate shapes are restricted to those inside ``lam``; the others
    cannot contribute because every later LR coefficient would vanish.
    """
    lam = make_partition(lam)
    shapes = [make_partition(s) for s in shapes]
    if sum(map(sum, shapes)) != sum(lam):
        raise ValueError("shape weights must add up to the target weight")
    if not shapes:
        return 1 if lam == () else 0
    if not contains(lam, shapes[0]):
        return 0
    current = {shapes[0]: 1}
    size = sum(shapes[0])
    for s in shapes[1:]:
        size += sum(s)
        nxt = {}
        for rho in partitions_inside(lam, size):
            v = sum(c * lr_coefficient(m, s, rho) for m, c in current.items())
            if v:
                nxt[rho] = v
        current = nxt
    return current.get(lam, 0)
