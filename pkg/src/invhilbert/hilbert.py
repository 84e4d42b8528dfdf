"""Hilbert functions and series of the two invariant rings.

* K[End(V (x) W)]^(GL(V) x GL(W)): degree n has dimension
  sum over lam, mu of n with r(lam) <= dim V, r(mu) <= dim W, and any nu,
  of g(lam, mu, nu)^2.
* K[End(W)^k]^GL(W): degree n has dimension
  sum over compositions (n_1..n_k) of n (zero parts allowed), lam of n with
  r(lam) <= dim W and lam_i of n_i, of the squared iterated LR coefficient.

For dim V = dim W = 2 and for dim W = 2 every term is available through at
least two further routes (matrix counting, rational generating function,
star products), and :func:`verify_suite` compares them.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import product
from math import comb, factorial
from typing import Callable, Optional, Sequence

import numpy as np

from . import counting
from .characters import character_table
from .coefficients import iterated_lr, kronecker_vector, lr_coefficient, lr_table, lr_tableaux
from .golden import golden_data
from .partitions import enumerate_partitions
from .series import (
    FactoredRational,
    TruncatedSeries,
    expand,
    is_polynomial_up_to,
    mul_polynomial,
    one_minus_x_pow,
    poly_divmod,
    poly_mul,
    poly_pow,
)
from .zel import (
    ZelElement,
    p2_star_square_lhs,
    p2_star_square_rhs,
    pair_with_trivial,
    star_product,
)

KRONECKER_DEFAULT_MAX = 24
TUPLE_LR_DEFAULT_MAX = 40
TENSOR22_NUMERATOR = (1, 0, -1, -1, 2, 2, 2, -1, -1, 0, 1)
TENSOR22_DENOMINATOR = ((1, 1), (2, 4), (3, 3), (4, 2))


def _check_dims(*dims: int) -> None:
    if any(d < 1 for d in dims):
        raise ValueError("dimensions must be at least 1")


# -- tensor products ---------------------------------------------------------

def tensor_term(n: int, d1: int, d2: int) -> int:
    """dim of the degree-n part of K[End(V (x) W)]^(GL(V) x GL(W)), dim V = d1, dim W = d2."""
    if n < 0:
        raise ValueError("n must be non-negative")
    _check_dims(d1, d2)
    total = 0
    for lam in enumerate_partitions(n, d1):
        for mu in enumerate_partitions(n, d2):
            total += sum(g * g for g in kronecker_vector(lam, mu))
    return total


def tensor_series_22() -> FactoredRational:
    """Hilbert series for dim V = dim W = 2 as a factored rational function."""
    return FactoredRational(TENSOR22_NUMERATOR, TENSOR22_DENOMINATOR)


def tensor_term_star(n: int) -> int:
    """< (sum over two-row lam of [S_lam] * [S_lam])^(*2), x_n >, via the two-row identity."""
    rhs = p2_star_square_rhs(n)
    return pair_with_trivial(star_product(rhs, rhs))


def tensor_terms(order: int, d1: int = 2, d2: int = 2, method: str = "kronecker",
                 threads: Optional[int] = None) -> TruncatedSeries:
    """Terms 0..order of the tensor-product Hilbert function by the chosen route."""
    _check_dims(d1, d2)
    if method == "rational":
        _require_22(d1, d2, method)
        return expand(tensor_series_22(), order)
    if method == "counting":
        _require_22(d1, d2, method)
        return TruncatedSeries.from_coeffs([counting.tensor_dim_via_f(n) for n in range(order + 1)])
    if method == "kronecker":
        return TruncatedSeries.from_coeffs(_map(lambda n: tensor_term(n, d1, d2), range(order + 1), threads))
    raise ValueError(f"unknown tensor method {method!r}")


def _require_22(d1: int, d2: int, method: str) -> None:
    if (d1, d2) != (2, 2):
        raise ValueError(f"method {method!r} is only available for dim V = dim W = 2")


# -- tuples of endomorphisms ---------------------------------------------------

def _lr_matrices(a: int, b: int, d: int) -> dict:
    """For each nu of b: the matrix C[mu, lam] = c_{mu,nu}^lam, mu of a, lam of a+b, all with <= d rows."""
    rows_a = {p: i for i, p in enumerate(enumerate_partitions(a, d))}
    rows_n = {p: i for i, p in enumerate(enumerate_partitions(a + b, d))}
    out = {nu: np.zeros((len(rows_a), len(rows_n)), dtype=object) for nu in enumerate_partitions(b, d)}
    for (mu, nu, lam), c in lr_table(a, b, d).items():
        out[nu][rows_a[mu], rows_n[lam]] = c
    return out


def tuple_term(n: int, d: int, k: int) -> int:
    """dim of the degree-n part of K[End(W)^k]^GL(W) with dim W = d.

    The square sum is reorganised as a trace: with v(lam_1..lam_j) the vector
    of iterated coefficients over shapes lam, G_j[N] = sum of v v^T over all
    j-tuples of total size N obeys

        G_j[N + m] = sum over nu of m of C_nu^T G_{j-1}[N] C_nu,

    and the answer is trace G_k[n].  Only shapes with at most d rows appear,
    which is exact because every intermediate shape sits inside lam.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    return _tuple_traces(n, d, k)[n]


def _tuple_traces(order: int, d: int, k: int) -> list[int]:
    """trace G_k[N] for N = 0..order; one pass serves every degree."""
    _check_dims(d, k)
    gram = {0: np.ones((1, 1), dtype=object)}
    for _ in range(k):
        nxt: dict[int, np.ndarray] = {}
        for size, g in gram.items():
            for m in range(order - size + 1):
                for c in _lr_matrices(size, m, d).values():
                    term = c.T.dot(g).dot(c)
                    nxt[size + m] = nxt[size + m] + term if size + m in nxt else term
        gram = nxt
    return [int(np.trace(gram[N])) if N in gram else 0 for N in range(order + 1)]


def compositions(n: int, k: int):
    """Ordered k-tuples of non-negative integers adding up to n."""
    if k == 1:
        yield (n,)
        return
    for first in range(n + 1):
        for rest in compositions(n - first, k - 1):
            yield (first,) + rest


def tuple_term_literal(n: int, d: int, k: int) -> int:
    """The square sum written out term by term with iterated LR coefficients; small n only."""
    _check_dims(d, k)
    total = 0
    targets = enumerate_partitions(n, d)
    for comp in compositions(n, k):
        for shapes in product(*(enumerate_partitions(m, d) for m in comp)):
            for lam in targets:
                c = iterated_lr(shapes, lam)
                total += c * c
    return total


def tuple_term_star(n: int, k: int) -> int:
    """sum over compositions of < (x_n1 ... x_nk) * RHS_n, x_n >, the two-row tuple route."""
    rhs = p2_star_square_rhs(n)
    return sum(
        pair_with_trivial(star_product(ZelElement.from_monomial(comp), rhs))
        for comp in compositions(n, k)
    )


def tuple_series_closed_form(k: int) -> FactoredRational:
    """Hilbert series of K[End(W)^k]^GL(W) for dim W = 2.

    The bracketed sum over i = 0..k-1 of

        C(k-1,i) C(2k-2-i,k-1) x^(2k-2-2i) - C(k,i) C(2k-2-i,k-1) x^(2k-1-2i)

    each over (1-x^2)^(k-1-i), all times 1/((1-x^2)^k (1-x)^(2k)), is put over
    (1-x^2)^(2k-1) (1-x)^(2k).  Factors 1-x, then 1+x, are cancelled from
    the numerator while division is exact.
    """
    if k < 1:
        raise ValueError("k must be positive")
    numerator: tuple[int, ...] = ()
    for i in range(k):
        b = comb(2 * k - 2 - i, k - 1)
        bracket = [0] * (2 * k)
        bracket[2 * k - 2 - 2 * i] += comb(k - 1, i) * b
        bracket[2 * k - 1 - 2 * i] -= comb(k, i) * b
        lifted = poly_mul(bracket, poly_pow(one_minus_x_pow(2), i))
        numerator = _poly_add(numerator, lifted)
    e2, e1 = 2 * k - 1, 2 * k
    while e1 > 0:
        q, r = poly_divmod(numerator, (1, -1))
        if r:
            break
        numerator, e1 = q, e1 - 1
    while e2 > 0:
        # (1 + x) cancels against one 1 - x^2, leaving a 1 - x behind
        q, r = poly_divmod(numerator, (1, 1))
        if r:
            break
        numerator, e2, e1 = q, e2 - 1, e1 + 1
    den = tuple((m, e) for m, e in ((1, e1), (2, e2)) if e)
    return FactoredRational(numerator, den)


def _poly_add(p: Sequence[int], q: Sequence[int]) -> tuple[int, ...]:
    out = [0] * max(len(p), len(q))
    for i, a in enumerate(p):
        out[i] += a
    for i, a in enumerate(q):
        out[i] += a
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def tuple_terms(order: int, d: int = 2, k: int = 1, method: str = "lr",
                threads: Optional[int] = None) -> TruncatedSeries:
    _check_dims(d, k)
    if method == "closed-form":
        _require_d2(d, method)
        return expand(tuple_series_closed_form(k), order)
    if method == "counting":
        _require_d2(d, method)
        return TruncatedSeries.from_coeffs([counting.tuple_dim_via_g(n, k) for n in range(order + 1)])
    if method == "lr":
        # one DP pass yields every degree, so there is nothing to spread over threads
        return TruncatedSeries.from_coeffs(_tuple_traces(order, d, k))
    raise ValueError(f"unknown tuple method {method!r}")


def _require_d2(d: int, method: str) -> None:
    if d != 2:
        raise ValueError(f"method {method!r} is only available for dim W = 2")


# -- verification ------------------------------------------------------------------

SUITES = ("tensor22", "tuples", "star", "counting", "characters")


@dataclass
class Mismatch:
    method: str
    n: object
    expected: object
    got: object


@dataclass
class Check:
    name: str
    passed: bool = True
    detail: str = ""
    mismatch: Optional[Mismatch] = None
    skipped: bool = False


@dataclass
class Report:
    suite: str
    order: int
    checks: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def first_mismatch(self) -> Optional[Mismatch]:
        for c in self.checks:
            if c.mismatch is not None:
                return c.mismatch
        return None

    def to_json(self) -> dict:
        """JSON-ready dict; integers inside mismatches become decimal strings."""
        checks = []
        for c in self.checks:
            d = asdict(c)
            if c.mismatch is not None:
                d["mismatch"] = {k: v if isinstance(v, str) else str(v) for k, v in d["mismatch"].items()}
            checks.append(d)
        first = next((d["mismatch"] for d in checks if d["mismatch"] is not None), None)
        return {
            "suite": self.suite,
            "order": self.order,
            "passed": self.passed,
            "first_mismatch": first,
            "checks": checks,
        }


def _map(fn: Callable, items, threads: Optional[int]) -> list:
    items = list(items)
    workers = threads if threads is not None else (os.cpu_count() or 1)
    if workers <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def _compare(name: str, method: str, keys, expected: Callable, got: Callable, detail: str = "") -> Check:
    """Compare two evaluations key by key, stopping at the first disagreement."""
    check = Check(name, detail=detail)
    for key in keys:
        e, g = expected(key), got(key)
        if e != g:
            check.passed = False
            check.mismatch = Mismatch(method, key, e, g)
            break
    return check


def _compare_lists(name: str, method: str, expected: Sequence, got: Sequence, detail: str = "") -> Check:
    return _compare(name, method, range(min(len(expected), len(got))),
                    lambda n: expected[n], lambda n: got[n], detail)


def _skip(name: str, why: str) -> Check:
    return Check(name, passed=True, detail=why, skipped=True)


def _suite_tensor22(order: int, threads: Optional[int]) -> list[Check]:
    gold = golden_data()
    top = min(order, len(gold) - 1)
    checks = []
    rational = expand(tensor_series_22(), top)
    checks.append(_compare_lists("rational vs reference", "rational", gold[: top + 1], rational.coeffs,
                                 f"n = 0..{top}"))
    via_f = [counting.tensor_dim_via_f(n) for n in range(top + 1)]
    checks.append(_compare_lists("counting vs reference", "counting", gold[: top + 1], via_f, f"n = 0..{top}"))
    kmax = min(top, KRONECKER_DEFAULT_MAX)
    via_g = _map(lambda n: tensor_term(n, 2, 2), range(kmax + 1), threads)
    checks.append(_compare_lists("kronecker vs reference", "kronecker", gold[: kmax + 1], via_g,
                                 f"n = 0..{kmax}"))
    if top > 21:
        s = TruncatedSeries.from_coeffs(gold[: top + 1])
        multiplier = poly_mul(poly_mul(poly_pow(one_minus_x_pow(1), 4), poly_pow(one_minus_x_pow(2), 8)),
                              poly_mul(poly_pow(one_minus_x_pow(3), 3), poly_pow(one_minus_x_pow(4), 2)))
        product_ = mul_polynomial(s, multiplier)
        target = poly_mul(TENSOR22_NUMERATOR, poly_mul(poly_pow((1, -1), 7), poly_pow((1, 1), 4)))
        check = Check("degree bound", detail="reference * multiplier is a polynomial of degree <= 21")
        if not is_polynomial_up_to(product_, 21):
            n = next(t for t in range(22, top + 1) if product_[t])
            check.passed, check.mismatch = False, Mismatch("degree-bound", n, 0, product_[n])
        else:
            got = product_.coeffs[:22]
            want = TruncatedSeries.from_polynomial(target, 21).coeffs
            bad = [t for t in range(22) if got[t] != want[t]]
            if bad:
                check.passed, check.mismatch = False, Mismatch("degree-bound", bad[0], want[bad[0]], got[bad[0]])
        checks.append(check)
    else:
        checks.append(_skip("degree bound", "needs order > 21"))
    return checks


TUPLE_TARGETS = {
    1: FactoredRational((1,), ((1, 1), (2, 1))),
    2: FactoredRational((1,), ((1, 2), (2, 3))),
    3: FactoredRational((1, -1, 1), ((1, 4), (2, 5))),
}


def _suite_tuples(order: int, threads: Optional[int]) -> list[Check]:
    checks = []
    for k, target in TUPLE_TARGETS.items():
        cf = tuple_series_closed_form(k)
        n = max(order, 40)
        checks.append(_compare_lists(f"closed form k={k}", "closed-form", expand(target, n).coeffs,
                                     expand(cf, n).coeffs, f"{cf} against {target}"))
    ks = range(1, 5)
    ltop = min(order, TUPLE_LR_DEFAULT_MAX)
    lr_series = _map(lambda k: _tuple_traces(ltop, 2, k), ks, threads)
    for k, via_lr in zip(ks, lr_series):
        cf = expand(tuple_series_closed_form(k), order).coeffs
        via_g = [counting.tuple_dim_via_g(n, k) for n in range(order + 1)]
        checks.append(_compare_lists(f"counting vs closed form k={k}", "counting", cf, via_g, f"n = 0..{order}"))
        checks.append(_compare_lists(f"lr vs closed form k={k}", "lr", cf[: ltop + 1], via_lr, f"n = 0..{ltop}"))
    return checks


def _suite_star(order: int, threads: Optional[int]) -> list[Check]:
    checks = []
    top = min(order, 12)
    checks.append(_compare(
        "two-row identity", "jacobi-trudi", range(top + 1),
        p2_star_square_rhs, p2_star_square_lhs, f"n = 0..{top}",
    ))
    top = min(order, 10)
    checks.append(_compare("star vs kronecker", "star", range(top + 1),
                           lambda n: tensor_term(n, 2, 2), tensor_term_star, f"n = 0..{top}"))
    top = min(order, 8)
    for k in range(1, 4):
        checks.append(_compare(f"tuple star vs lr k={k}", "star", range(top + 1),
                               lambda n: tuple_term(n, 2, k), lambda n: tuple_term_star(n, k),
                               f"n = 0..{top}"))
    return checks


def _suite_counting(order: int, threads: Optional[int]) -> list[Check]:
    checks = []
    top = min(order, 10)
    checks.append(_compare(
        "f fast vs brute", "f_fast",
        [(i, j, n) for n in range(top + 1) for i in range(-n - 1, n + 2) for j in range(-n - 1, n + 2)],
        lambda key: counting.f_brute(*key), lambda key: counting.f_fast(*key), f"n = 0..{top}",
    ))
    rtop = min(order, 8)
    checks.append(_compare(
        "f recursion vs fast", "f_recursion",
        [(i, j, n) for n in range(rtop + 1) for i in range(-n, n + 1) for j in range(-n, n + 1)],
        lambda key: counting.f_fast(*key), lambda key: counting.f_recursion(*key), f"n = 0..{rtop}",
    ))
    checks.append(_compare(
        "g fast vs brute", "g_fast",
        [(i, n, k) for k in range(1, 4) for n in range(top + 1) for i in range(-n - 1, n + 2)],
        lambda key: counting.g_brute(*key), lambda key: counting.g_fast(*key), f"n = 0..{top}, k <= 3",
    ))
    gtop = min(order, 30)
    table = counting.f_generating_table(gtop)
    checks.append(_compare(
        "f vs generating function", "f_fast",
        [(i, j, n) for n in range(gtop + 1) for i in range(-2, 3) for j in range(-2, 3)],
        lambda key: int(table[key[2], gtop + key[0], gtop + key[1]]),
        lambda key: counting.f_fast(*key), f"n = 0..{gtop}, |i|, |j| <= 2",
    ))
    return checks


def _suite_characters(order: int, threads: Optional[int]) -> list[Check]:
    checks = []
    top = min(order, 10)

    def orthogonality(n: int) -> int:
        """Number of row pairs violating sum |C| chi chi' = n! delta."""
        t = character_table(n)
        rows = t.rows()
        nfact = factorial(n)
        return sum(
            sum(map(lambda c, x, y: c * x * y, t.class_sizes, ra, rb)) != (nfact if a == b else 0)
            for a, ra in enumerate(rows)
            for b, rb in enumerate(rows)
        )

    checks.append(_compare("row orthogonality", "characters", range(top + 1),
                           lambda n: 0, orthogonality, f"n = 0..{top}"))
    top = min(order, 8)
    triples = []
    for n in range(top + 1):
        for a in range(n + 1):
            for mu in enumerate_partitions(a):
                for nu in enumerate_partitions(n - a):
                    for lam in enumerate_partitions(n):
                        triples.append((mu, nu, lam))
    checks.append(_compare("lr tableaux vs induced characters", "lr_tableaux", triples,
                           lambda t: lr_coefficient(*t), lambda t: lr_tableaux(*t), f"n = 0..{top}"))
    return checks


_SUITE_FUNCS = {
    "tensor22": _suite_tensor22,
    "tuples": _suite_tuples,
    "star": _suite_star,
    "counting": _suite_counting,
    "characters": _suite_characters,
}


def verify_suite(suite: str, order: int, threads: Optional[int] = None) -> Report:
    """Run one suite (or ``"all"``) of cross-method checks up to ``order``."""
    if order < 0:
        raise ValueError("order must be non-negative")
    names = SUITES if suite == "all" else (suite,)
    report = Report(suite, order)
    for name in names:
        if name not in _SUITE_FUNCS:
            raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES + ('all',))}")
        for check in _SUITE_FUNCS[name](order, threads):
            check.name = f"{name}: {check.name}" if suite == "all" else check.name
            report.checks.append(check)
    return report
