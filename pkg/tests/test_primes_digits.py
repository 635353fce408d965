import pickle

import pytest
from hypothesis import given, strategies as st

from binomgcd.primes_digits import (DigitExpansion, ExponentSeq, PrimeBase, alpha, is_prime,
                                    minimal_representation, primes_up_to, to_digits)

from _oracles import brute_digits, brute_is_prime

SMALL_PRIMES = primes_up_to(60)
st_prime = st.sampled_from(SMALL_PRIMES)


def test_primes_up_to_small():
    assert primes_up_to(1) == []
    assert primes_up_to(0) == []
    assert primes_up_to(10) == [2, 3, 5, 7]
    assert primes_up_to(30)[-1] == 29


def test_primes_up_to_matches_trial_division():
    assert primes_up_to(2000) == [n for n in range(2001) if brute_is_prime(n)]
    assert all(type(p) is PrimeBase for p in primes_up_to(50))


def test_is_prime_against_trial_division():
    for n in range(-5, 5000):
        assert is_prime(n) == brute_is_prime(n), n


@pytest.mark.parametrize("n, expected", [
    (2**61 - 1, True),
    (2**64 - 59, True),
    (3215031751, False),        # strong pseudoprime to bases 2, 3, 5, 7
    (3825123056546413051, False),
    ((2**31 - 1) * 4294967311, False),
])
def test_is_prime_large(n, expected):
    assert is_prime(n) is expected


def test_is_prime_refuses_beyond_deterministic_range():
    with pytest.raises(ValueError):
        is_prime((2**89 - 1) * (2**61 - 1))


def test_prime_base_rejects_composites():
    assert PrimeBase(7) == 7
    with pytest.raises(ValueError):
        PrimeBase(9)
    with pytest.raises(ValueError):
        PrimeBase(1)
    with pytest.raises(TypeError):
        PrimeBase(7.0)


def test_prime_base_pickles():
    p = pickle.loads(pickle.dumps(PrimeBase(29)))
    assert p == 29 and type(p) is PrimeBase


@pytest.mark.parametrize("n, p, digits", [
    (0, 5, ()),
    (30, 5, (0, 1, 1)),
    (30, 3, (0, 1, 0, 1)),
    (30, 29, (1, 1)),
])
def test_to_digits(n, p, digits):
    assert to_digits(n, p).digits == digits


def test_digit_expansion_invariants():
    with pytest.raises(ValueError):
        DigitExpansion(PrimeBase(3), (1, 3))
    with pytest.raises(ValueError):
        DigitExpansion(PrimeBase(3), (1, 0))
    assert to_digits(30, 3).digit(10) == 0
    with pytest.raises(ValueError):
        to_digits(-1, 3)


@pytest.mark.parametrize("n, p, a", [(30, 3, 2), (30, 29, 2), (0, 2, 0), (0, 97, 0), (30, 7, 6)])
def test_alpha(n, p, a):
    assert alpha(n, p) == a


@pytest.mark.parametrize("n, p, exps", [
    (30, 5, (1, 2)),
    (6, 3, (1, 1)),
    (7, 2, (0, 1, 2)),
    (10, 3, (0, 2)),
])
def test_minimal_representation(n, p, exps):
    assert minimal_representation(n, p).exponents == exps


def test_exponent_seq_rejects_non_minimal():
    with pytest.raises(ValueError):
        ExponentSeq(PrimeBase(2), (1, 1))
    with pytest.raises(ValueError):
        ExponentSeq(PrimeBase(5), (2, 1))
    ExponentSeq(PrimeBase(3), (1, 1))


@given(st.integers(0, 10**6), st_prime)
def test_round_trip(n, p):
    d = to_digits(n, p)
    assert d.value == n
    assert list(d.digits) == brute_digits(n, p)


@given(st.integers(0, 10**6), st_prime)
def test_alpha_digit_sum_and_representation_length(n, p):
    rep = minimal_representation(n, p)
    assert alpha(n, p) == sum(to_digits(n, p).digits) == len(rep)
    assert rep.value == n


@given(st.integers(1, 8), st.integers(0, 10**5), st.data())
def test_alpha_congruent_to_n(q, n, data):
    candidates = [p for p in primes_up_to(200) if (p - 1) % q == 0]
    p = data.draw(st.sampled_from(candidates))
    assert (alpha(n, p) - n) % q == 0


@given(st.integers(0, 10**5), st.integers(0, 10**5), st_prime)
def test_alpha_subadditive(a, b, p):
    assert alpha(a + b, p) <= alpha(a, p) + alpha(b, p)
