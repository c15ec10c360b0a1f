from __future__ import annotations

import math

import pytest

from trinomial.diagonal_sums import (
    central_p_factor_series,
    z_sum_form1,
    z_sum_form2,
    z_sum_form3,
    z_term_ratio,
)
from trinomial.triangle import build_triangle

P_KNOWN = [1, 1, 3, 7, 19, 51, 141, 393, 1107, 3139, 8953, 25653, 73789]

_TRI = build_triangle(40)


def _z(n: int, lam: int) -> int:
    return _TRI.coeff(n, n + lam)


@pytest.mark.parametrize("form", [z_sum_form1, z_sum_form2, z_sum_form3])
def test_sum_forms_match_oracle_exhaustive(form) -> None:
    for n in range(25):
        for lam in range(n + 1):
            assert form(n, lam) == _z(n, lam), (form.__name__, n, lam)


@pytest.mark.parametrize("form", [z_sum_form1, z_sum_form2, z_sum_form3])
def test_sum_forms_central_golden(form) -> None:
    assert [form(n, 0) for n in range(13)] == P_KNOWN


@pytest.mark.parametrize("form", [z_sum_form1, z_sum_form2, z_sum_form3])
def test_sum_forms_above_diagonal_are_zero(form) -> None:
    for n in range(8):
        for lam in range(n + 1, n + 4):
            assert form(n, lam) == 0


@pytest.mark.parametrize("form", [z_sum_form1, z_sum_form2, z_sum_form3, z_term_ratio])
def test_negative_indices_rejected(form) -> None:
    with pytest.raises(ValueError):
        form(-1, 0)
    with pytest.raises(ValueError):
        form(3, -1)


def test_term_ratio_table_n6() -> None:
    total, terms = z_term_ratio(6, 0)
    assert terms == [1, 30, 90, 20]
    assert total == 141


def test_term_ratio_table_n12() -> None:
    total, terms = z_term_ratio(12, 0)
    assert terms == [1, 132, 2970, 18480, 34650, 16632, 924]
    assert total == 73789


def test_term_ratio_matches_oracle_exhaustive() -> None:
    for n in range(25):
        for lam in range(n + 1):
            total, terms = z_term_ratio(n, lam)
            assert total == _z(n, lam)
            assert sum(terms) == total
            assert all(t > 0 for t in terms)


def test_term_ratio_first_term_is_binomial() -> None:
    for n in range(20):
        for lam in range(n + 1):
            _, terms = z_term_ratio(n, lam)
            assert terms[0] == math.comb(n, lam)


def test_term_ratio_edge_cases() -> None:
    assert z_term_ratio(0, 0) == (1, [1])
    assert z_term_ratio(1, 0) == (1, [1])
    assert z_term_ratio(7, 7) == (1, [1])
    assert z_term_ratio(3, 5) == (0, [])


def test_term_ratio_terms_match_form1_summands() -> None:
    # the ratio route walks exactly the summands of form 1
    for n in (6, 11, 12):
        for lam in (0, 1, 3):
            _, terms = z_term_ratio(n, lam)
            direct = []
            a = 0
            while True:
                t = math.comb(n, a) * (math.comb(n - a, lam + a) if a <= n else 0)
                if t == 0:
                    break
                direct.append(t)
                a += 1
            assert terms == direct


def test_central_factor_series_golden() -> None:
    assert [central_p_factor_series(n) for n in range(13)] == P_KNOWN


def test_central_factor_series_matches_oracle() -> None:
    for n in range(41):
        assert central_p_factor_series(n) == _z(n, 0)
    with pytest.raises(ValueError):
        central_p_factor_series(-1)
