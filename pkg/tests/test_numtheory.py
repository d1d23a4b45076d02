import math

import pytest
from hypothesis import given, strategies as st

from specpoly.numtheory import Factorization, divisors, factorize, is_prime, moebius, nu, radical, totient

from oracles import totient_bruteforce


@pytest.mark.parametrize(
    "n, pairs",
    [(12, ((2, 2), (3, 1))), (1, ()), (97, ((97, 1),)), (360, ((2, 3), (3, 2), (5, 1)))],
)
def test_factorize_examples(n, pairs):
    assert factorize(n).pairs == pairs


@pytest.mark.parametrize("bad", [0, -5])
def test_rejects_nonpositive(bad):
    for fn in (factorize, totient, moebius, nu, radical):
        with pytest.raises(ValueError):
            fn(bad)


def test_factorization_invariants_enforced():
    with pytest.raises(ValueError):
        Factorization(((3, 1), (2, 1)))
    with pytest.raises(ValueError):
        Factorization(((4, 1),))


@given(st.integers(min_value=1, max_value=10**6))
def test_factorization_reconstructs(n):
    f = factorize(n)
    assert f.value() == n
    assert all(is_prime(p) for p in f.primes)
    assert (len(f) == 0) == (n == 1)


@pytest.mark.parametrize("n, expected", [(1, 1), (7, 6), (12, 4), (100, 40)])
def test_totient_examples(n, expected):
    assert totient(n) == expected


@pytest.mark.parametrize("n, expected", [(1, 1), (6, 1), (12, 0), (30, -1), (7, -1)])
def test_moebius_examples(n, expected):
    assert moebius(n) == expected


@pytest.mark.parametrize("n, expected", [(8, 2), (9, 3), (6, 1), (2, 2), (97, 97), (1, 1), (1024, 2)])
def test_nu_examples(n, expected):
    assert nu(n) == expected


@pytest.mark.parametrize("n, expected", [(12, 6), (8, 2), (1, 1), (97, 97)])
def test_radical_examples(n, expected):
    assert radical(n) == expected


def test_totient_matches_bruteforce():
    for n in range(1, 400):
        assert totient(n) == totient_bruteforce(n)


def test_totient_divisor_sum_and_multiplicativity():
    for n in range(1, 10_001):
        assert sum(totient(d) for d in divisors(n)) == n
    for a in range(1, 100):
        for b in range(1, 100):
            if math.gcd(a, b) == 1:
                assert totient(a * b) == totient(a) * totient(b)


def test_nu_detects_prime_powers():
    for n in range(2, 10_001):
        assert (nu(n) > 1) == (len(factorize(n)) == 1)


def test_totient_prime_multiplication_rule():
    primes = [p for p in range(2, 51) if is_prime(p)]
    for p in primes:
        for n in range(1, 501):
            expected = p * totient(n) if n % p == 0 else (p - 1) * totient(n)
            assert totient(p * n) == expected


def test_moebius_sums_to_zero_over_divisors():
    for n in range(2, 2000):
        assert sum(moebius(d) for d in divisors(n)) == 0
