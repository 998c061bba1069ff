"""Exact integer utilities: base-p digits, carry tests, roots, divisors, primality.

Everything here is pure integer arithmetic; no floating point is used
anywhere, so results are reproducible bit for bit.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import PreconditionError

DEFAULT_FACTOR_LIMIT = 1 << 20

# Deterministic Miller-Rabin witness set, valid for all n < 3.3 * 10^24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


@dataclass(frozen=True)
class DigitVector:
    """Little-endian base-p digits of a non-negative integer."""

    digits: tuple[int, ...]
    base: int

    def value(self) -> int:
        total = 0
        for d in reversed(self.digits):
            total = total * self.base + d
        return total


def base_digits(m: int, p: int) -> DigitVector:
    """Little-endian base-p digits of m; zero maps to the empty vector."""
    if m < 0:
        raise PreconditionError("m must be non-negative")
    if p < 2:
        raise PreconditionError("base must be at least 2")
    digits = []
    while m:
        m, d = divmod(m, p)
        digits.append(d)
    return DigitVector(tuple(digits), p)


def binom_nonzero_mod_p(a: int, b: int, p: int) -> bool:
    """True iff C(a+b, b) is nonzero mod p.

    Equivalent to: adding a and b in base p produces no carry.
    """
    if a < 0 or b < 0:
        raise PreconditionError("a and b must be non-negative")
    while a or b:
        if a % p + b % p >= p:
            return False
        a //= p
        b //= p
    return True


def isqrt(m: int) -> int:
    """Largest s with s*s <= m."""
    if m < 0:
        raise PreconditionError("m must be non-negative")
    return math.isqrt(m)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin (exact for n < 3.3e24)."""
    if n < 2:
        return False
    for b in _MR_BASES:
        if n == b:
            return True
        if n % b == 0:
            return False
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for b in _MR_BASES:
        x = pow(b, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def factorize(m: int, limit: int = DEFAULT_FACTOR_LIMIT) -> dict[int, int]:
    """Prime factorization by trial division with divisors up to `limit`.

    A cofactor surviving trial division is accepted as prime only when it
    is provably prime (below limit**2, or certified by Miller-Rabin).
    """
    if m < 1:
        raise PreconditionError("m must be positive")
    factors: dict[int, int] = {}
    for d in (2, 3):
        while m % d == 0:
            factors[d] = factors.get(d, 0) + 1
            m //= d
    d = 5
    while d * d <= m and d <= limit:
        for cand in (d, d + 2):
            while m % cand == 0:
                factors[cand] = factors.get(cand, 0) + 1
                m //= cand
        d += 6
    if m > 1:
        if m <= limit * limit or is_prime(m):
            factors[m] = factors.get(m, 0) + 1
        else:
            raise PreconditionError(f"{m} exceeds the factoring limit {limit}")
    return factors


def divisors(m: int, limit: int = DEFAULT_FACTOR_LIMIT) -> list[int]:
    """All positive divisors of m, ascending."""
    factors = factorize(m, limit)
    divs = [1]
    for prime, mult in factors.items():
        divs = [d * prime**k for d in divs for k in range(mult + 1)]
    return sorted(divs)


def prime_power(q: int, limit: int = DEFAULT_FACTOR_LIMIT) -> tuple[int, int]:
    """Decompose q = p**e with p prime; error if q is not a prime power."""
    if q < 2:
        raise PreconditionError("q must be at least 2")
    factors = factorize(q, limit)
    if len(factors) != 1:
        raise PreconditionError(f"{q} is not a prime power")
    ((p, e),) = factors.items()
    return p, e
