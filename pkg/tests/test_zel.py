from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from invhilbert.coefficients import kronecker_vector
from invhilbert.partitions import enumerate_partitions
from invhilbert.zel import (
    ZelElement,
    contingency_tables,
    multiply,
    p2_star_square_lhs,
    p2_star_square_rhs,
    pair_with_trivial,
    parse_monomial,
    specht_in_monomials,
    star_product,
)
from strategies import partitions


def X(*parts, c=1):
    return ZelElement.from_monomial(parts, c)


def monomial_basis(n):
    # monomials of degree n are indexed by partitions of n
    return [X(*p) for p in enumerate_partitions(n)]


def test_multiply_examples():
    assert multiply(X(2), X(1)) == X(2, 1)
    v = X(3, 1) + X(2, 2, c=-2)
    assert multiply(ZelElement.one(), v) == v
    assert multiply(X(1) - ZelElement.zero(1), X(1)) == X(1, 1)


def test_star_examples():
    assert star_product(X(1, 1), X(1, 1)) == X(1, 1, c=2)
    assert star_product(X(2, 1), X(2, 1)) == X(2, 1) + X(1, 1, 1)
    assert str(star_product(X(2, 1), X(2, 1))) == "x2*x1 + x1^3"
    with pytest.raises(ValueError):
        star_product(X(2), X(1))


def test_contingency_tables_brute_force():
    rows, cols = (3, 1, 2), (2, 2, 2)
    brute = [
        [list(cells[0:3]), list(cells[3:6]), list(cells[6:9])]
        for cells in product(range(4), repeat=9)
        if all(sum(cells[3 * i:3 * i + 3]) == rows[i] for i in range(3))
        and all(sum(cells[j::3]) == cols[j] for j in range(3))
    ]
    assert sorted(contingency_tables(rows, cols)) == sorted(brute)


@pytest.mark.parametrize("n", range(11))
def test_star_unit(n):
    for u in monomial_basis(n):
        assert star_product(X(n), u) == u


@pytest.mark.parametrize("n", range(7))
def test_star_commutative_and_associative(n):
    basis = monomial_basis(n)
    for u in basis:
        for v in basis:
            uv = star_product(u, v)
            assert uv == star_product(v, u)
            for w in basis:
                assert star_product(uv, w) == star_product(u, star_product(v, w))


def test_specht_examples():
    for n in range(1, 8):
        assert specht_in_monomials((n,)) == X(n)
        for a in range((n + 1) // 2, n):
            assert specht_in_monomials((a, n - a)) == X(a, n - a) - X(a + 1, n - a - 1)
    assert specht_in_monomials((1, 1)) == X(1, 1) - X(2)


def test_pairing_examples():
    assert pair_with_trivial(X(4)) == 1
    assert pair_with_trivial(X(1, 1) - X(2)) == 0
    assert pair_with_trivial(X(2, c=2)) == 2


@pytest.mark.parametrize("n", range(11))
def test_specht_pairs_to_delta(n):
    for lam in enumerate_partitions(n):
        assert pair_with_trivial(specht_in_monomials(lam)) == (1 if len(lam) <= 1 else 0)


@pytest.mark.parametrize("n", range(9))
def test_star_of_spechts_is_orthogonal(n):
    parts = enumerate_partitions(n)
    spechts = {lam: specht_in_monomials(lam) for lam in parts}
    for lam in parts:
        for mu in parts:
            assert pair_with_trivial(star_product(spechts[lam], spechts[mu])) == (1 if lam == mu else 0)


@pytest.mark.parametrize("n", range(7))
def test_star_of_spechts_decomposes_by_kronecker(n):
    # [S_lam] * [S_mu] = sum_nu g(lam, mu, nu) [S_nu]
    parts = enumerate_partitions(n)
    spechts = {lam: specht_in_monomials(lam) for lam in parts}
    for lam in parts:
        for mu in parts:
            want = ZelElement.zero(n)
            for nu, g in zip(parts, kronecker_vector(lam, mu)):
                want = want + spechts[nu] * g
            assert star_product(spechts[lam], spechts[mu]) == want


def test_rhs_examples():
    assert p2_star_square_rhs(0) == ZelElement.one()
    assert p2_star_square_rhs(1) == X(1)
    assert p2_star_square_rhs(2) == X(2, c=2)


@pytest.mark.parametrize("n", range(13))
def test_two_row_identity(n):
    assert p2_star_square_lhs(n) == p2_star_square_rhs(n)


@settings(max_examples=50)
@given(partitions(8), partitions(8))
def test_multiply_is_commutative_and_graded(a, b):
    u, v = X(*a), X(*b)
    assert multiply(u, v) == multiply(v, u)
    assert multiply(u, v).degree == sum(a) + sum(b)


def test_element_plumbing():
    u = X(3, 1, c=-2) + X(2, 2)
    assert str(u) == "-2*x3*x1 + x2^2"
    assert 3 * u == u * 3
    assert not (u - u)
    assert hash(u) == hash(X(2, 2) + X(3, 1, c=-2))
    assert parse_monomial("2,1") == X(2, 1)
    assert parse_monomial("") == ZelElement.one()
    with pytest.raises(ValueError):
        X(2) + X(1)
    with pytest.raises(ValueError):
        ZelElement({(2,): 1, (1,): 1})


@given(st.lists(st.integers(0, 5), max_size=5))
def test_x0_is_absorbed(parts):
    assert X(*parts) == X(*parts, 0, 0)
