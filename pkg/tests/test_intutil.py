import math

import pytest
from hypothesis import given, strategies as st

from gpaley.errors import PreconditionError
from gpaley.intutil import (base_digits, binom_nonzero_mod_p, divisors,
                            factorize, is_prime, isqrt, prime_power)


def test_base_digits_examples():
    dv = base_digits(5208, 5)
    assert list(dv.digits) == [3, 1, 3, 1, 3, 1]
    assert dv.value() == 5208
    assert base_digits(0, 7).digits == ()
    assert list(base_digits(26, 3).digits) == [2, 2, 2]


@given(st.integers(min_value=0, max_value=10**12),
       st.sampled_from([2, 3, 5, 7, 11, 13]))
def test_base_digits_round_trip(m, p):
    dv = base_digits(m, p)
    assert dv.value() == m
    assert all(0 <= c < p for c in dv.digits)


@given(st.integers(min_value=0, max_value=400),
       st.integers(min_value=0, max_value=400),
       st.sampled_from([2, 3, 5, 7, 13, 31]))
def test_binom_matches_math_comb(a, b, p):
    assert binom_nonzero_mod_p(a, b, p) == (math.comb(a + b, b) % p != 0)


@given(st.integers(min_value=0, max_value=1 << 100))
def test_isqrt_property(m):
    s = isqrt(m)
    assert s * s <= m < (s + 1) * (s + 1)


def test_is_prime_small():
    primes = {n for n in range(200) if is_prime(n)}
    sieve = set()
    for n in range(2, 200):
        if all(n % k for k in range(2, n)):
            sieve.add(n)
    assert primes == sieve


def test_is_prime_large():
    assert is_prime(2**61 - 1)
    assert not is_prime(2**67 - 1)


def test_factorize_and_divisors():
    assert factorize(360) == {2: 3, 3: 2, 5: 1}
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert divisors(1) == [1]


def test_prime_power():
    assert prime_power(27) == (3, 3)
    assert prime_power(15625) == (5, 6)
    with pytest.raises(PreconditionError):
        prime_power(12)
    with pytest.raises(PreconditionError):
        prime_power(1)
