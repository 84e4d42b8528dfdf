"""Exact truncated power series and rational functions N(x) / prod (1 - x^m)^e.

No floating point anywhere.  Mixed-order arithmetic truncates to the shorter
order; nothing is ever zero-extended.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from typing import Iterable, Sequence


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def poly_mul(p: Sequence[int], q: Sequence[int]) -> tuple[int, ...]:
    if not p or not q:
        return ()
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return _trim(out)


def poly_pow(p: Sequence[int], e: int) -> tuple[int, ...]:
    out: tuple[int, ...] = (1,)
    for _ in range(e):
        out = poly_mul(out, p)
    return out


def one_minus_x_pow(m: int) -> tuple[int, ...]:
    """The polynomial 1 - x^m as a dense coefficient tuple."""
    return (1,) + (0,) * (m - 1) + (-1,)


def poly_divmod(p: Sequence[int], q: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Division with remainder over Z; ``q`` must have leading coefficient +-1."""
    q = _trim(q)
    if not q or abs(q[-1]) != 1:
        raise ValueError("divisor must be monic up to sign")
    rem = list(_trim(p))
    if len(rem) < len(q):
        return (), tuple(rem)
    quot = [0] * (len(rem) - len(q) + 1)
    for k in range(len(quot) - 1, -1, -1):
        c = rem[k + len(q) - 1] * q[-1]
        quot[k] = c
        if c:
            for j, b in enumerate(q):
                rem[k + j] -= c * b
    return _trim(quot), _trim(rem)


def format_poly(p: Sequence[int], var: str = "x") -> str:
    terms = []
    for k, c in enumerate(p):
        if not c:
            continue
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        if mono and abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}*{mono}" if mono else str(abs(c))
        terms.append(("-" if c < 0 else "+", body))
    if not terms:
        return "0"
    head = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    return head + "".join(f" {s} {b}" for s, b in terms[1:])


@dataclass(frozen=True)
class TruncatedSeries:
    """Coefficients c_0..c_order of a power series, exact integers."""

    order: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("order must be non-negative")
        if len(self.coeffs) != self.order + 1:
            raise ValueError(f"expected {self.order + 1} coefficients, got {len(self.coeffs)}")

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[int]) -> "TruncatedSeries":
        return cls(len(coeffs) - 1, tuple(int(c) for c in coeffs))

    @classmethod
    def from_polynomial(cls, p: Sequence[int], order: int) -> "TruncatedSeries":
        c = list(p[: order + 1]) + [0] * max(0, order + 1 - len(p))
        return cls(order, tuple(c))

    def __getitem__(self, n: int) -> int:
        if n < 0:
            return 0
        if n > self.order:
            raise IndexError(f"degree {n} beyond truncation order {self.order}")
        return self.coeffs[n]

    def __len__(self) -> int:
        return self.order + 1

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return TruncatedSeries(order, self.coeffs[: order + 1])

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = min(self.order, other.order)
        return TruncatedSeries(n, tuple(a + b for a, b in zip(self.coeffs[: n + 1], other.coeffs)))

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = min(self.order, other.order)
        return TruncatedSeries(n, tuple(a - b for a, b in zip(self.coeffs[: n + 1], other.coeffs)))

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = min(self.order, other.order)
        out = [0] * (n + 1)
        for i, a in enumerate(self.coeffs[: n + 1]):
            if a:
                for j in range(n + 1 - i):
                    out[i + j] += a * other.coeffs[j]
        return TruncatedSeries(n, tuple(out))

    def to_json(self) -> dict:
        return {"order": self.order, "coefficients": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> "TruncatedSeries":
        return cls(int(data["order"]), tuple(int(c) for c in data["coefficients"]))

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["degree", "coefficient"])
        w.writerows(enumerate(self.coeffs))
        return buf.getvalue()


def mul_polynomial(s: TruncatedSeries, p: Sequence[int]) -> TruncatedSeries:
    """Truncated product of ``s`` with the integer polynomial ``p``.

    For p = 1 - x^m this is the difference operator c_n -> c_n - c_{n-m}.
    """
    out = [0] * (s.order + 1)
    for k, a in enumerate(p[: s.order + 1]):
        if a:
            for n in range(k, s.order + 1):
                out[n] += a * s.coeffs[n - k]
    return TruncatedSeries(s.order, tuple(out))


def is_polynomial_up_to(s: TruncatedSeries, degree_bound: int) -> bool:
    """True iff every coefficient above ``degree_bound`` vanishes.

    Refuses when the series carries no coefficient beyond the bound, since
    the answer would then be vacuous.
    """
    if s.order <= degree_bound:
        raise ValueError(
            f"series of order {s.order} says nothing about degrees above {degree_bound}"
        )
    return not any(s.coeffs[degree_bound + 1:])


@dataclass(frozen=True)
class FactoredRational:
    """numerator(x) / prod (1 - x^m)^e with an integer numerator.

    ``denominator`` is a tuple of (m, e) pairs, merged and sorted by m.
    """

    numerator: tuple[int, ...]
    denominator: tuple[tuple[int, int], ...] = field(default=())

    def __post_init__(self):
        merged: dict[int, int] = {}
        for m, e in self.denominator:
            if m < 1 or e < 1:
                raise ValueError(f"bad denominator factor (1-x^{m})^{e}")
            merged[m] = merged.get(m, 0) + e
        object.__setattr__(self, "numerator", _trim(int(c) for c in self.numerator))
        object.__setattr__(self, "denominator", tuple(sorted(merged.items())))

    def denominator_poly(self) -> tuple[int, ...]:
        out: tuple[int, ...] = (1,)
        for m, e in self.denominator:
            out = poly_mul(out, poly_pow(one_minus_x_pow(m), e))
        return out

    def expand(self, order: int) -> TruncatedSeries:
        return expand(self, order)

    def __str__(self) -> str:
        num = format_poly(self.numerator)
        den = " * ".join(
            f"(1 - x^{m})" + (f"^{e}" if e > 1 else "") if m > 1 else "(1 - x)" + (f"^{e}" if e > 1 else "")
            for m, e in self.denominator
        )
        return f"({num}) / ({den})" if den else num

    def to_json(self) -> dict:
        return {
            "numerator": [str(c) for c in self.numerator],
            "denominator": [[m, e] for m, e in self.denominator],
        }

    @classmethod
    def from_json(cls, data: dict) -> "FactoredRational":
        return cls(tuple(int(c) for c in data["numerator"]),
                   tuple((int(m), int(e)) for m, e in data["denominator"]))


def expand(r: FactoredRational, order: int) -> TruncatedSeries:
    """Maclaurin coefficients of ``r`` up to x^order.

    Each factor 1/(1 - x^m) is applied in place by c_t += c_{t-m}, then the
    numerator is multiplied in.
    """
    if order < 0:
        raise ValueError("order must be non-negative")
    c = [0] * (order + 1)
    c[0] = 1
    for m, e in r.denominator:
        for _ in range(e):
            for t in range(m, order + 1):
                c[t] += c[t - m]
    return mul_polynomial(TruncatedSeries(order, tuple(c)), r.numerator)
