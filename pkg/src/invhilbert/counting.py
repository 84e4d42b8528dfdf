"""Counting non-negative integer matrices with constrained margin differences.

f(i, j, n): 4x4 matrices with total sum n, (row 1 - row 2) = i and
            (column 1 - column 2) = j.
g(i, n, k): 4xk matrices with total sum n and (row 1 - row 2) = i.

Each count has an exhaustive enumerator (the oracle) next to the fast path.
For f there is also the nested-sum recursion with the four diagonal
directions, selectable as ``method="recursion"``.

The fast f splits the 16 cells into the seven blocks

    f1..f4  cells (1,1), (1,2), (2,1), (2,2): shift (i, j, n) by (+-r, +-r, r)
    f5      rows 1-2 x columns 3-4: only i moves
    f6      rows 3-4 x columns 1-2: only j moves
    f7      rows 3-4 x columns 3-4: neither moves, C(n+3, 3) ways

and convolves (f1*f2*f3*f4) with (f5*f6*f7).
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import combinations
from math import comb

import numpy as np

from .errors import ConsistencyError

DEFAULT_BRUTE_CAP = 12
# number of 4x3 matrices of total sum 10
DEFAULT_G_BUDGET = comb(10 + 12 - 1, 12 - 1)


class BudgetExceeded(ValueError):
    """An exhaustive enumeration was asked for more than its configured budget."""


# -- the seven block counts ----------------------------------------------------

def _diff_block(d: int, n: int) -> int:
    """2x2 block that only moves one margin difference: f5 (in i) or f6 (in j)."""
    if n < abs(d) or (n - d) % 2:
        return 0
    return ((n - d) // 2 + 1) * ((n + d) // 2 + 1)


def block_count(block: int, i: int, j: int, n: int) -> int:
    """f^block(i, j, n) for block = 1..7."""
    if n < 0:
        return 0
    if 1 <= block <= 4:
        si, sj = _DIRECTIONS[block - 1]
        return int(i == si * n and j == sj * n)
    if block == 5:
        return _diff_block(i, n) if j == 0 else 0
    if block == 6:
        return _diff_block(j, n) if i == 0 else 0
    if block == 7:
        return comb(n + 3, 3) if i == 0 and j == 0 else 0
    raise ValueError(f"no block {block}")


_DIRECTIONS = ((1, 1), (1, -1), (-1, 1), (-1, -1))


def _parity_count(lo: int, hi: int, parity: int) -> int:
    """How many integers in [lo, hi] are congruent to ``parity`` mod 2."""
    if lo > hi:
        return 0
    first = lo if (lo - parity) % 2 == 0 else lo + 1
    return 0 if first > hi else (hi - first) // 2 + 1


@lru_cache(maxsize=None)
def _diagonal_part(p: int, q: int, s: int) -> int:
    """(f1*f2*f3*f4)(p, q, s).

    f1*f2 sits on p = s1 with |q1| <= s1, q1 = s1 mod 2; f3*f4 on p = -s2 with
    the same shape in q.  Convolving them fixes s1 = (s + p)/2 and leaves an
    interval of q1.
    """
    if abs(p) > s or abs(q) > s or (s - p) % 2 or (s - q) % 2:
        return 0
    s1 = (s + p) // 2
    s2 = s - s1
    return _parity_count(max(-s1, q - s2), min(s1, q + s2), s1 % 2)


@lru_cache(maxsize=None)
def _f5_f7(i: int, m: int) -> int:
    """(f5*f7)(i, 0, m), with |i| folded in by symmetry."""
    return sum(_diff_block(i, a) * comb(m - a + 3, 3) for a in range(abs(i), m + 1, 2))


@lru_cache(maxsize=None)
def _outer_part(i: int, j: int, m: int) -> int:
    """(f5*f6*f7)(i, j, m); only called with i, j >= 0."""
    if i + j > m:
        return 0
    return sum(_diff_block(j, b) * _f5_f7(i, m - b) for b in range(j, m - i + 1, 2))


def f_fast(i: int, j: int, n: int) -> int:
    """|C(i, j, n)| by convolving the diagonal blocks with the off-diagonal ones."""
    if n < 0 or abs(i) > n or abs(j) > n:
        return 0
    total = 0
    for s in range(n + 1):
        rest = n - s
        for p in range(max(-s, i - rest), min(s, i + rest) + 1):
            if (s - p) % 2:
                continue
            budget = rest - abs(i - p)
            for q in range(max(-s, j - budget), min(s, j + budget) + 1):
                d = _diagonal_part(p, q, s)
                if d:
                    total += d * _outer_part(abs(i - p), abs(j - q), rest)
    return total


def f_generating_table(order: int) -> np.ndarray:
    """Coefficients of prod over the 16 cells of 1/(1 - a^e b^e' x), as table[n, i, j].

    Cell (r, c) carries a^(+1) in row 1, a^(-1) in row 2 and likewise b for
    columns 1 and 2.  The (i, j) window is the full |i|, |j| <= order, so
    every entry is exact; ``table[n, order + i, order + j]`` is f(i, j, n).
    """
    w = order
    size = 2 * w + 1
    table = np.zeros((order + 1, size, size), dtype=object)
    table[0, w, w] = 1
    weight = (1, -1, 0, 0)
    for er in weight:
        for ec in weight:
            # multiplying by 1/(1 - a^er b^ec x) is the running sum c_n += shift(c_{n-1})
            for n in range(1, order + 1):
                src = table[n - 1]
                dst = table[n]
                dst[max(er, 0):size + min(er, 0), max(ec, 0):size + min(ec, 0)] += \
                    src[max(-er, 0):size + min(-er, 0), max(-ec, 0):size + min(-ec, 0)]
    return table


# -- nested-sum recursion --------------------------------------------------------

@lru_cache(maxsize=None)
def _base_sum(i: int, j: int, n: int) -> int:
    """Closed double sum for f5*f6*f7, written over m (the f7 share) and k."""
    ai, aj = abs(i), abs(j)
    total = 0
    for m in range(0, n - ai - aj + 1):
        if (n - i - j - m) % 2:
            continue
        half = (n - ai - aj - m) // 2
        for k in range(half + 1):
            total += comb(m + 3, 3) * (k + 1) * (k + ai + 1) * (half - k + 1) * (half - k + aj + 1)
    return total


_DIR3 = ((1, 1, 1), (1, -1, 1), (-1, 1, 1), (-1, -1, 1))


@lru_cache(maxsize=None)
def _nested(level: int, i: int, j: int, n: int) -> int:
    if level == 0:
        return _base_sum(i, j, n)
    di, dj, dn = _DIR3[level - 1]
    return sum(_nested(level - 1, i - r * di, j - r * dj, n - r * dn) for r in range(n + 2))


def f_recursion(i: int, j: int, n: int) -> int:
    """f(i, j, n) by sweeping the four diagonal directions over the base sum."""
    if n < 0:
        return 0
    return _nested(4, i, j, n)


# -- exhaustive oracles -----------------------------------------------------------

def _compositions(total: int, parts: int):
    """All tuples of ``parts`` non-negative integers adding up to ``total``."""
    for bars in combinations(range(total + parts - 1), parts - 1):
        prev = -1
        out = []
        for b in bars:
            out.append(b - prev - 1)
            prev = b
        out.append(total + parts - 2 - prev)
        yield tuple(out)


@lru_cache(maxsize=None)
def _row_column_diffs(total: int) -> tuple[int, ...]:
    """c1 - c2 for every 4-cell row with the given sum, one entry per row."""
    return tuple(r[0] - r[1] for r in _compositions(total, 4))


@lru_cache(maxsize=None)
def f_brute_table(n: int, cap: int = DEFAULT_BRUTE_CAP) -> Counter:
    """Counter {(i, j): f(i, j, n)} from walking every 4x4 matrix of total sum n.

    Matrices are generated row by row; every matrix is still visited once.
    """
    if n > cap:
        raise BudgetExceeded(
            f"brute-force f enumerates C(n+15, 15) = {comb(n + 15, 15)} matrices; "
            f"n={n} is above the cap {cap}"
        )
    out: Counter = Counter()
    for a in range(n + 1):
        for j1 in _row_column_diffs(a):
            for b in range(n - a + 1):
                i = a - b
                for j2 in _row_column_diffs(b):
                    for c in range(n - a - b + 1):
                        last = _row_column_diffs(n - a - b - c)
                        for j3 in _row_column_diffs(c):
                            base = j1 + j2 + j3
                            for j4 in last:
                                out[(i, base + j4)] += 1
    return out


def f_brute(i: int, j: int, n: int, cap: int = DEFAULT_BRUTE_CAP) -> int:
    if n < 0:
        return 0
    return f_brute_table(n, cap)[(i, j)]


def f_count(i: int, j: int, n: int, method: str = "fast", cap: int = DEFAULT_BRUTE_CAP) -> int:
    if method == "fast":
        return f_fast(i, j, n)
    if method == "brute":
        return f_brute(i, j, n, cap)
    if method == "recursion":
        return f_recursion(i, j, n)
    raise ValueError(f"unknown method {method!r}")


def tensor_dim_via_f(n: int, method: str = "fast") -> int:
    """f(0,0,n) - 2 f(1,0,n) + f(1,1,n), using f(0,1,n) = f(1,0,n)."""
    value = f_count(0, 0, n, method) - 2 * f_count(1, 0, n, method) + f_count(1, 1, n, method)
    if value < 0:
        raise ConsistencyError(f"negative dimension {value} at n={n}")
    return value


def g_fast(i: int, n: int, k: int) -> int:
    """4xk matrices of total sum n whose first two row sums differ by i.

    Rows 1 and 2 hold s and t with s - t = i (C(s+k-1, k-1) C(t+k-1, k-1)
    ways); rows 3-4 hold the remaining n - s - t in 2k cells.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if n < 0 or abs(i) > n:
        return 0
    total = 0
    t = max(0, -i)
    while t + i + t <= n:
        s = t + i
        total += comb(s + k - 1, k - 1) * comb(t + k - 1, k - 1) * comb(n - s - t + 2 * k - 1, 2 * k - 1)
        t += 1
    return total


@lru_cache(maxsize=None)
def g_brute_table(n: int, k: int, budget: int = DEFAULT_G_BUDGET) -> Counter:
    """Counter {i: g(i, n)} from walking every 4xk matrix of total sum n."""
    size = comb(n + 4 * k - 1, 4 * k - 1)
    if size > budget:
        raise BudgetExceeded(f"{size} matrices of shape 4x{k} with sum {n} exceed the budget {budget}")
    out: Counter = Counter()
    for cells in _compositions(n, 4 * k):
        out[sum(cells[0:k]) - sum(cells[k:2 * k])] += 1
    return out


def g_brute(i: int, n: int, k: int, budget: int = DEFAULT_G_BUDGET) -> int:
    if n < 0:
        return 0
    return g_brute_table(n, k, budget)[i]


def g_count(i: int, n: int, k: int, method: str = "fast", budget: int = DEFAULT_G_BUDGET) -> int:
    if method == "fast":
        return g_fast(i, n, k)
    if method == "brute":
        return g_brute(i, n, k, budget)
    raise ValueError(f"unknown method {method!r}")


def tuple_dim_via_g(n: int, k: int, method: str = "fast") -> int:
    value = g_count(0, n, k, method) - g_count(1, n, k, method)
    if value < 0:
        raise ConsistencyError(f"negative dimension {value} at n={n}, k={k}")
    return value
