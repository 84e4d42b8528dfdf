import json
from math import comb

import pytest
from hypothesis import given, strategies as st

import invhilbert.hilbert as h
from invhilbert.counting import tuple_dim_via_g
from invhilbert.golden import GOLDEN_SHA256, golden_data
from invhilbert.hilbert import (
    compositions,
    tensor_series_22,
    tensor_term,
    tensor_term_star,
    tensor_terms,
    tuple_series_closed_form,
    tuple_term,
    tuple_term_literal,
    tuple_term_star,
    tuple_terms,
    verify_suite,
)
from invhilbert.series import FactoredRational, expand


def test_golden_data():
    g = golden_data()
    assert len(g) == 101
    assert g[0] == 1 and g[100] == 3194967240
    assert g[:10] == (1, 1, 4, 6, 16, 23, 52, 77, 150, 224)
    assert g[50] == 11951528 and g[51] == 13922650
    assert len(GOLDEN_SHA256) == 64


def test_tensor_term_examples():
    for n in range(12):
        assert tensor_term(n, 1, 1) == 1
        assert tensor_term(n, 1, 2) == n // 2 + 1
    assert tensor_term(2, 2, 2) == 4
    with pytest.raises(ValueError):
        tensor_term(-1, 2, 2)
    with pytest.raises(ValueError):
        tensor_term(2, 0, 2)


@given(st.integers(0, 7), st.integers(1, 3), st.integers(1, 3))
def test_tensor_term_symmetric_in_dimensions(n, d1, d2):
    assert tensor_term(n, d1, d2) == tensor_term(n, d2, d1)


def test_tensor_term_monotone_in_dimension():
    for n in range(8):
        values = [tensor_term(n, d, d) for d in range(1, 5)]
        assert values == sorted(values)
        # once d >= n every shape is allowed
        assert tensor_term(n, n + 1, n + 1) == tensor_term(n, max(n, 1), max(n, 1))


def test_tensor_series_examples():
    r = tensor_series_22()
    assert expand(r, 7).coeffs == (1, 1, 4, 6, 16, 23, 52, 77)
    assert expand(r, 100)[100] == 3194967240
    assert expand(r, 0).coeffs == (1,)


def test_three_tensor_routes_small():
    gold = golden_data()
    for n in range(13):
        assert tensor_term(n, 2, 2) == gold[n]
    assert tensor_terms(12, method="counting").coeffs == gold[:13]
    assert tensor_terms(12, method="rational").coeffs == gold[:13]
    assert tensor_terms(5, method="kronecker", threads=2).coeffs == gold[:6]
    with pytest.raises(ValueError):
        tensor_terms(3, 2, 3, method="rational")


def test_star_route_small():
    assert [tensor_term_star(n) for n in range(9)] == list(golden_data()[:9])


def test_tuple_term_examples():
    for n in range(15):
        assert tuple_term(n, 2, 1) == n // 2 + 1
    for d in range(1, 4):
        for k in range(1, 4):
            assert tuple_term(0, d, k) == 1
    assert tuple_term(2, 2, 2) == 6


@pytest.mark.parametrize("d,k", [(1, 1), (1, 3), (2, 2), (2, 3), (3, 2), (3, 3)])
def test_tuple_term_matches_literal_sum(d, k):
    for n in range(6):
        assert tuple_term(n, d, k) == tuple_term_literal(n, d, k)


def test_tuple_term_dimension_one():
    # K[End(W)^k] for dim W = 1 is a polynomial ring in k variables
    for k in range(1, 5):
        for n in range(8):
            assert tuple_term(n, 1, k) == comb(n + k - 1, k - 1)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_tuple_star_route(k):
    for n in range(9):
        assert tuple_term_star(n, k) == tuple_term(n, 2, k)


def test_compositions_allow_zero_parts():
    assert list(compositions(2, 2)) == [(0, 2), (1, 1), (2, 0)]
    assert len(list(compositions(5, 3))) == 21


def test_closed_form_examples():
    assert tuple_series_closed_form(1) == FactoredRational((1,), ((1, 1), (2, 1)))
    assert tuple_series_closed_form(2) == FactoredRational((1,), ((1, 2), (2, 3)))
    assert tuple_series_closed_form(3) == FactoredRational((1, -1, 1), ((1, 4), (2, 5)))
    with pytest.raises(ValueError):
        tuple_series_closed_form(0)


def test_tuple_routes_agree_small():
    for k in range(1, 5):
        cf = tuple_terms(12, 2, k, "closed-form").coeffs
        assert tuple_terms(12, 2, k, "counting").coeffs == cf
        assert tuple_terms(12, 2, k, "lr").coeffs == cf
    with pytest.raises(ValueError):
        tuple_terms(3, 3, 2, "closed-form")


def test_closed_form_k5_against_counting():
    cf = expand(tuple_series_closed_form(5), 20).coeffs
    assert cf == tuple(tuple_dim_via_g(n, 5) for n in range(21))


def test_verify_all_small():
    report = verify_suite("all", 6, threads=1)
    assert report.passed
    data = report.to_json()
    assert json.loads(json.dumps(data)) == data
    assert data["first_mismatch"] is None
    assert any(c["skipped"] for c in data["checks"])


def test_verify_reports_first_mismatch(monkeypatch):
    real = h.counting.tensor_dim_via_f
    monkeypatch.setattr(h.counting, "tensor_dim_via_f", lambda n, method="fast": real(n) + (n == 3))
    report = verify_suite("tensor22", 5, threads=1)
    assert not report.passed
    m = report.to_json()["first_mismatch"]
    assert m == {"method": "counting", "n": "3", "expected": "6", "got": "7"}


def test_verify_rejects_unknown_suite():
    with pytest.raises(ValueError):
        verify_suite("nope", 3)


def test_lr_tuple_route_past_the_character_limit():
    # degrees above 20 go through the tableau branch of lr_table
    for k in (2, 4):
        assert tuple_terms(40, 2, k, "lr").coeffs == expand(tuple_series_closed_form(k), 40).coeffs
    assert tuple_term(30, 2, 3) == tuple_terms(30, 2, 3, "lr")[30]
