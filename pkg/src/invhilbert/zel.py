"""The monomial basis of Zelevinsky's algebra Zel = Z[x_1, x_2, ...].

x_n is the class of the trivial representation of S_n, and the monomial
x_{a1}...x_{ar} is the permutation module induced from S_{a1} x ... x S_{ar}.
Ordinary multiplication is induction product; the star product is the
degreewise tensor product, which on monomials is a sum over contingency
tables:

    (x_a1...x_ar) * (x_b1...x_bs) = sum over r x s matrices c with row sums a
                                    and column sums b of prod_ij x_{c_ij}

x_0 is the unit and gets absorbed as soon as it appears.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from typing import Iterable, Iterator, Mapping, Optional

from .partitions import Partition, enumerate_partitions, make_partition

Monomial = tuple[int, ...]


def monomial(parts: Iterable[int]) -> Monomial:
    """Canonical monomial: indices sorted descending, x_0 factors dropped."""
    return tuple(sorted((p for p in parts if p), reverse=True))


def _format_monomial(m: Monomial) -> str:
    if not m:
        return "1"
    pieces = []
    i = 0
    while i < len(m):
        j = i
        while j < len(m) and m[j] == m[i]:
            j += 1
        e = j - i
        pieces.append(f"x{m[i]}" + (f"^{e}" if e > 1 else ""))
        i = j
    return "*".join(pieces)


class ZelElement:
    """A homogeneous integer combination of monomials of one degree.

    The degree is stored explicitly so that zero still knows where it lives.
    """

    __slots__ = ("degree", "terms")

    def __init__(self, terms: Optional[Mapping[Monomial, int]] = None, degree: Optional[int] = None):
        clean: dict[Monomial, int] = {}
        for m, c in (terms or {}).items():
            m = monomial(m)
            if c:
                clean[m] = clean.get(m, 0) + c
        clean = {m: c for m, c in clean.items() if c}
        degrees = {sum(m) for m in clean}
        if len(degrees) > 1:
            raise ValueError(f"inhomogeneous element with degrees {sorted(degrees)}")
        if degree is None:
            if not degrees:
                raise ValueError("the degree of a zero element must be given")
            degree = degrees.pop()
        elif degrees and degrees != {degree}:
            raise ValueError(f"terms have degree {degrees.pop()}, not {degree}")
        self.degree = degree
        self.terms = clean

    @classmethod
    def from_monomial(cls, parts: Iterable[int], coeff: int = 1) -> "ZelElement":
        m = monomial(parts)
        return cls({m: coeff}, sum(m))

    @classmethod
    def x(cls, n: int) -> "ZelElement":
        return cls.from_monomial((n,))

    @classmethod
    def one(cls) -> "ZelElement":
        return cls({(): 1}, 0)

    @classmethod
    def zero(cls, degree: int) -> "ZelElement":
        return cls({}, degree)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ZelElement):
            return NotImplemented
        return self.degree == other.degree and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.degree, frozenset(self.terms.items())))

    def _check_degree(self, other: "ZelElement") -> None:
        if self.degree != other.degree:
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")

    def __add__(self, other: "ZelElement") -> "ZelElement":
        self._check_degree(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return ZelElement(out, self.degree)

    def __neg__(self) -> "ZelElement":
        return ZelElement({m: -c for m, c in self.terms.items()}, self.degree)

    def __sub__(self, other: "ZelElement") -> "ZelElement":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return ZelElement({m: c * other for m, c in self.terms.items()}, self.degree)
        if isinstance(other, ZelElement):
            return multiply(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def star(self, other: "ZelElement") -> "ZelElement":
        return star_product(self, other)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for m in sorted(self.terms, reverse=True):
            c = self.terms[m]
            body = _format_monomial(m)
            if abs(c) != 1:
                body = f"{abs(c)}" if body == "1" else f"{abs(c)}*{body}"
            out.append(("-" if c < 0 else "+", body))
        text = ("-" if out[0][0] == "-" else "") + out[0][1]
        return text + "".join(f" {s} {b}" for s, b in out[1:])

    def __repr__(self) -> str:
        return f"ZelElement({self}, degree={self.degree})"


def multiply(u: ZelElement, v: ZelElement) -> ZelElement:
    """Induction product: on monomials, the union of the index multisets."""
    out: dict[Monomial, int] = {}
    for m1, c1 in u.terms.items():
        for m2, c2 in v.terms.items():
            m = monomial(m1 + m2)
            out[m] = out.get(m, 0) + c1 * c2
    return ZelElement(out, u.degree + v.degree)


def contingency_tables(rows: tuple[int, ...], cols: tuple[int, ...]) -> Iterator[list[list[int]]]:
    """Non-negative integer matrices with the given row and column sums.

    Row-major backtracking; a row is only extended while the remaining
    column capacity can still absorb what the row has left.
    """
    if sum(rows) != sum(cols):
        return
    r, s = len(rows), len(cols)
    if r == 0:
        yield []
        return
    matrix = [[0] * s for _ in range(r)]
    cap = list(cols)

    def fill_row(i: int, j: int, left: int) -> Iterator[None]:
        if j == s - 1:
            if left <= cap[j]:
                matrix[i][j] = left
                cap[j] -= left
                yield from next_row(i + 1)
                cap[j] += left
            return
        room_after = sum(cap[j + 1:])
        for v in range(max(0, left - room_after), min(left, cap[j]) + 1):
            matrix[i][j] = v
            cap[j] -= v
            yield from fill_row(i, j + 1, left - v)
            cap[j] += v

    def next_row(i: int) -> Iterator[None]:
        if i == r:
            yield None
            return
        if s == 0:
            if rows[i] == 0:
                yield from next_row(i + 1)
            return
        yield from fill_row(i, 0, rows[i])

    for _ in next_row(0):
        yield [row[:] for row in matrix]


@lru_cache(maxsize=None)
def _star_monomials(a: Monomial, b: Monomial) -> dict[Monomial, int]:
    out: dict[Monomial, int] = {}
    for c in contingency_tables(a, b):
        m = monomial(v for row in c for v in row)
        out[m] = out.get(m, 0) + 1
    return out


def star_product(u: ZelElement, v: ZelElement) -> ZelElement:
    """The tensor-product (star) multiplication inside one degree."""
    if u.degree != v.degree:
        raise ValueError(f"star product pairs equal degrees, got {u.degree} and {v.degree}")
    out: dict[Monomial, int] = {}
    for m1, c1 in u.terms.items():
        for m2, c2 in v.terms.items():
            key = (m1, m2) if m1 <= m2 else (m2, m1)
            for m, k in _star_monomials(*key).items():
                out[m] = out.get(m, 0) + c1 * c2 * k
    return ZelElement(out, u.degree)


def specht_in_monomials(lam: Partition) -> ZelElement:
    """[S_lam] = det(x_{l_i + j - i}) expanded as a signed sum over permutations.

    Only permutations avoiding negative-index (zero) entries are visited.
    """
    lam = make_partition(lam)
    r = len(lam)
    n = sum(lam)
    out: dict[Monomial, int] = {}

    def rec(i: int, used: list[bool], chosen: list[int], perm: list[int]) -> None:
        if i == r:
            inv = sum(1 for x in range(r) for y in range(x + 1, r) if perm[x] > perm[y])
            m = monomial(chosen)
            out[m] = out.get(m, 0) + (-1 if inv % 2 else 1)
            return
        for j in range(r):
            idx = lam[i] + j - i
            if used[j] or idx < 0:
                continue
            used[j] = True
            chosen.append(idx)
            perm.append(j)
            rec(i + 1, used, chosen, perm)
            perm.pop()
            chosen.pop()
            used[j] = False

    rec(0, [False] * r, [], [])
    return ZelElement(out, n)


def pair_with_trivial(u: ZelElement) -> int:
    """<u, x_n>, the dimension of the S_n-invariants: each monomial pairs to 1."""
    return sum(u.terms.values())


def p2_star_square_rhs(n: int) -> ZelElement:
    """sum_{2i+j+k=n} x_i^2 x_j x_k - sum_{2i+1+j+k=n} x_i x_{i+1} x_j x_k.

    Both sums run over ordered triples of non-negative integers.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    out: dict[Monomial, int] = {}
    for i, j in product(range(n // 2 + 1), range(n + 1)):
        k = n - 2 * i - j
        if k >= 0:
            m = monomial((i, i, j, k))
            out[m] = out.get(m, 0) + 1
        k = n - 2 * i - 1 - j
        if k >= 0:
            m = monomial((i, i + 1, j, k))
            out[m] = out.get(m, 0) - 1
    return ZelElement(out, n)


def p2_star_square_lhs(n: int) -> ZelElement:
    """sum over lam with at most two rows of [S_lam] * [S_lam], via Jacobi-Trudi."""
    total = ZelElement.zero(n)
    for lam in enumerate_partitions(n, 2):
        s = specht_in_monomials(lam)
        total = total + star_product(s, s)
    return total


def parse_monomial(text: str) -> ZelElement:
    """A monomial given by its comma-separated indices, e.g. ``"2,1"`` for x2*x1."""
    text = text.strip()
    parts = [int(t) for t in text.split(",")] if text else []
    if any(p < 0 for p in parts):
        raise ValueError(f"negative index in {text!r}")
    return ZelElement.from_monomial(parts)
