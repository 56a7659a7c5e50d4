from __future__ import annotations

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zetalab.errors import CapabilityError, DomainError
from zetalab.primes import (
    SIEVE_CAP,
    b_of,
    b_of_prime,
    chi_model,
    delta_gamma_of,
    delta_gamma_relation,
    delta_q_relation,
    gamma_of,
    is_prime,
    log_q_of_b,
    log_q_residual,
    make_row,
    q_of,
    q_of_b,
    sieve_primes,
    twin_pairs,
    twin_relation_residual,
)

# 3 ln 3 / 3 * 2 + 2 + 2 / ln 3, evaluated offline with mpmath.
DELTA_GAMMA_EXAMPLE = 6.01770303058989417


def trial_division(n: int) -> bool:
    return n >= 2 and all(n % d for d in range(2, math.isqrt(n) + 1))


def test_sieve_matches_trial_division():
    assert sieve_primes(10_000) == [n for n in range(10_000) if trial_division(n)]


@pytest.mark.parametrize("limit, expected", [(0, []), (2, []), (3, [2]), (12, [2, 3, 5, 7, 11])])
def test_sieve_small(limit, expected):
    assert sieve_primes(limit) == expected


def test_sieve_below_limit_exclusive():
    assert sieve_primes(97)[-1] == 89
    assert sieve_primes(98)[-1] == 97


def test_segmented_sieve_agrees_with_flat():
    big = sieve_primes(1_200_000)
    assert len(big) == 92_938
    assert big[: len(sieve_primes(1_000_000))] == sieve_primes(1_000_000)
    tail = [p for p in big if p >= 1_199_000]
    assert tail == [n for n in range(1_199_000, 1_200_000) if trial_division(n)]


def test_sieve_cap():
    with pytest.raises(CapabilityError):
        sieve_primes(SIEVE_CAP + 1)


@given(st.integers(-5, 5000))
def test_is_prime_matches_trial_division(n):
    assert is_prime(n) == trial_division(n)


def test_twin_pairs():
    pairs = twin_pairs(100)
    assert pairs[:4] == [(3, 5), (5, 7), (11, 13), (17, 19)]
    assert pairs[-1] == (71, 73)
    assert len(pairs) == 8


def test_b_and_q_examples():
    assert b_of(2, 2) == pytest.approx(4 * math.pi / math.log(2), rel=1e-15)
    assert b_of_prime(3, 3) == pytest.approx(6 * math.pi / math.log(3), rel=1e-15)
    assert q_of(4, 8) == pytest.approx(2.0, rel=1e-15)
    assert q_of_b(2 * math.pi, 1) == pytest.approx(math.e**math.e, rel=1e-14)
    assert log_q_of_b(2 * math.pi, 0) == pytest.approx(1.0, rel=1e-15)


def test_q_of_b_overflow_is_inf():
    assert q_of_b(5.0, 1e6) == math.inf
    assert q_of(500, 1) == math.inf
    assert q_of_b(1e12, 1) == pytest.approx(1.0, abs=1e-11)


@pytest.mark.parametrize(
    "call",
    [lambda: b_of(1, 3), lambda: b_of_prime(2, 1), lambda: q_of(1, 2), lambda: q_of(3, 0),
     lambda: q_of_b(0.0, 1), lambda: gamma_of(1, 3), lambda: gamma_of(3, 1)],
)
def test_formula_domains(call):
    with pytest.raises(DomainError):
        call()


@settings(max_examples=60)
@given(st.floats(1.0, 200.0), st.integers(0, 5))
def test_q_of_b_decreases_in_b(b, gamma):
    assert log_q_of_b(b * 1.5, gamma) < log_q_of_b(b, gamma)


@settings(max_examples=60)
@given(st.integers(2, 100), st.integers(1, 500))
def test_b_forms_agree_on_q_of_n_gamma(n, gamma):
    # With q = n^(n/gamma), 2 pi n / ln q reduces to 2 pi gamma / ln n.
    q = q_of(n, gamma)
    assert 2 * math.pi * n / math.log(q) == pytest.approx(b_of(n, gamma), rel=1e-12)


def test_gamma_of_example():
    assert gamma_of(4, 2) == pytest.approx(8.0, rel=1e-15)


@pytest.mark.parametrize("q", [2, 3, 5, 47, 97])
def test_log_q_residual_diagonal(q):
    assert log_q_residual(q, q, q) <= 1e-15


def test_log_q_residual_nonzero_off_diagonal():
    assert log_q_residual(7, 5, 4) == pytest.approx(abs(math.log(7) - 1.25 * math.log(5)), rel=1e-15)


def test_make_row_checks_primality():
    with pytest.raises(DomainError):
        make_row(9, 9, 9)


@pytest.mark.parametrize("q2", [5, 7, 11, 97])
def test_table2_style_rows_are_consistent(q2):
    d = q2 - 3
    row = make_row(q2, q2, q2, d, d, d)
    assert row.consistent
    assert delta_q_relation(row) <= 1e-15


def test_delta_q_relation_detects_inconsistency():
    row = make_row(7, 5, 4, delta_n=1, delta_gamma=0, delta_q=1)
    assert not row.consistent
    assert delta_q_relation(row) == pytest.approx(abs(1 / 7 - (math.log(5) + 1) / 4), rel=1e-14)


@pytest.mark.parametrize("q, sign", [(3, 1), (5, 1), (71, 1), (5, -1), (73, -1)])
def test_twin_relation_on_diagonal(q, sign):
    assert twin_relation_residual(q, q, q, 2 * sign, 2 * sign, sign) <= 1e-15


def test_twin_relation_generic_nonzero():
    expected = abs(2 / 7 - (math.log(5) / 4 + 1 / 4))
    assert twin_relation_residual(7, 5, 4, 1, 0, 1) == pytest.approx(expected, rel=1e-14)


def test_twin_relation_domain():
    with pytest.raises(DomainError):
        twin_relation_residual(5, 5, 0, 2, 2, 1)
    with pytest.raises(DomainError):
        twin_relation_residual(5, 5, 5, 2, 2, 0)


def test_delta_gamma_example_is_not_integer():
    value = delta_gamma_of(3, 3, 2, 2)
    assert value == pytest.approx(DELTA_GAMMA_EXAMPLE, rel=1e-14)
    assert delta_gamma_relation(3, 3, 2, 2, 2) == pytest.approx(DELTA_GAMMA_EXAMPLE - 2, rel=1e-14)


@pytest.mark.parametrize(
    "gamma, lower, upper, is_twin",
    [(5, 5, 7, True), (11, 11, 13, True), (35, 35, 37, False), (53, 53, 55, False), (71, 71, 73, True)],
)
def test_chi_model_candidates(gamma, lower, upper, is_twin):
    row = chi_model(gamma, 2)
    assert row.candidate
    assert (row.lower, row.upper, row.is_twin) == (lower, upper, is_twin)
    assert row.chi == Fraction(gamma + 1, 6)
    assert row.lam == gamma


@pytest.mark.parametrize("gamma", [1, 4, 10, 12])
def test_chi_model_non_candidates(gamma):
    row = chi_model(gamma, 2)
    assert not row.candidate and not row.is_twin
    assert row.chi.denominator != 1 or row.chi <= 0


def test_chi_model_domain():
    with pytest.raises(DomainError):
        chi_model(5, 0)
