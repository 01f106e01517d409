"""Binomial arithmetic: valuations, residues, L(n, m), S(k, m)."""

from __future__ import annotations

import math

import pytest

from egz.numtheory import (
    CapExceededError,
    binom_mod,
    divides_binomial,
    feasible_lengths,
    interval_witness,
    is_feasible_length,
    is_prime,
    kummer_valuation,
    lconst,
    padic_valuation,
    prime_factorization,
    prime_power,
)


def test_is_prime_small() -> None:
    primes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}
    for n in range(-1, 50):
        assert is_prime(n) == (n in primes)


def test_prime_factorization() -> None:
    assert prime_factorization(1) == []
    assert prime_factorization(12) == [(2, 2), (3, 1)]
    assert prime_factorization(97) == [(97, 1)]
    assert prime_factorization(360) == [(2, 3), (3, 2), (5, 1)]


def test_prime_power() -> None:
    assert prime_power(8) == (2, 3)
    assert prime_power(7) == (7, 1)
    assert prime_power(12) is None
    assert prime_power(1) is None


def test_padic_valuation() -> None:
    assert padic_valuation(2, 48) == 4
    assert padic_valuation(3, 48) == 1
    assert padic_valuation(5, 48) == 0


def test_kummer_equals_legendre_factorials() -> None:
    # the carry-count valuation of C(n, m) versus factorial valuations
    for p in (2, 3, 5, 7):
        fact_val = [0]
        for n in range(1, 200):
            fact_val.append(fact_val[-1] + padic_valuation(p, n))
        for n in range(200):
            for m in range(n + 1):
                expected = fact_val[n] - fact_val[m] - fact_val[n - m]
                assert kummer_valuation(p, n, m) == expected


def test_binom_mod_matches_comb() -> None:
    for ell in range(0, 60):
        for m in range(0, ell + 1):
            for k in (2, 3, 4, 6, 9, 10, 12, 30):
                assert binom_mod(ell, m, k) == math.comb(ell, m) % k


def test_binom_mod_large_inputs() -> None:
    # residues stay correct far beyond the direct-computation comfort zone
    ell = 10**9 + 7
    assert binom_mod(ell, 1, 10) == ell % 10
    assert binom_mod(2 * 10**6, 2, 8) == math.comb(2 * 10**6, 2) % 8


def test_divides_binomial() -> None:
    assert divides_binomial(8, 16, 2)  # C(16,2) = 120
    assert not divides_binomial(8, 10, 2)  # C(10,2) = 45
    assert divides_binomial(6, 4, 2)  # C(4,2) = 6
    assert divides_binomial(1, 5, 3)


def test_lconst_hand_values() -> None:
    assert lconst(2, 1) == 2
    assert lconst(5, 1) == 5
    assert lconst(3, 2) == 3  # C(3,2) = 3
    assert lconst(4, 2) == 8  # C(8,2) = 28
    assert lconst(8, 2) == 16  # C(16,2) = 120
    assert lconst(9, 2) == 9  # C(9,2) = 36
    assert lconst(5, 5) == 25
    assert lconst(6, 2) == 4  # C(4,2) = 6


def test_lconst_is_least() -> None:
    for n in (2, 3, 4, 5, 6, 8, 9, 12):
        for m in (1, 2, 3):
            got = lconst(n, m)
            assert got >= m + 1
            assert math.comb(got, m) % n == 0
            for ell in range(m + 1, got):
                assert math.comb(ell, m) % n != 0


def test_lconst_odd_k_degree_2() -> None:
    # for odd prime powers q >= 3, the first multiple falls at ell = q:
    # C(ell, 2) = ell(ell-1)/2 needs q | ell(ell-1), first at ell = q.
    # Composite odd k can close earlier across prime factors: L(15, 2) = 6.
    for q in (3, 5, 7, 9, 11, 25, 27):
        assert lconst(q, 2) == q
    assert lconst(15, 2) == 6  # C(6,2) = 15
    assert lconst(21, 2) == 7  # C(7,2) = 21


def test_lconst_prime_power_formula() -> None:
    for p in (2, 3, 5):
        for s in range(1, 5):
            for u in range(0, 5 - s):
                assert lconst(p**s, p**u) == p ** (s + u)


def test_lconst_cap() -> None:
    with pytest.raises(CapExceededError):
        lconst(2, 1, cap=1)


def test_feasible_lengths() -> None:
    assert feasible_lengths(2, 2, 12) == [4, 5, 8, 9, 12]
    assert feasible_lengths(3, 2, 10) == [3, 4, 6, 7, 9, 10]
    assert is_feasible_length(9, 2, 9)
    assert not is_feasible_length(9, 2, 5)
    # k odd: t = k always belongs (C(k,2) = k(k-1)/2)
    for k in (3, 5, 7, 9, 11):
        assert is_feasible_length(k, 2, k)
    assert not is_feasible_length(2, 2, 2)


def test_feasible_length_m_boundary() -> None:
    # t = m requires k | C(m, m) = 1, impossible for k >= 2
    assert not is_feasible_length(5, 3, 3)
    assert not is_feasible_length(2, 1, 1)


def test_interval_witness() -> None:
    # for i >= m + 2^nu2(m) the witness j lies in [i - 2^nu2(m), i]
    # with C(j, m) even
    for m in range(1, 13):
        nu = m & -m
        for i in range(m + nu, m + nu + 25):
            j = interval_witness(m, i)
            assert i - nu <= j <= i
            assert math.comb(j, m) % 2 == 0
