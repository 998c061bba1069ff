"""Generators and verifiers for the infinite families with exceptionally
large subfield cliques, and the two counterexample reports showing that the
certifier's hypotheses cannot be dropped."""
from __future__ import annotations

import math
from dataclasses import dataclass, field as dfield

from .bounds import BoundBundle, Certificate, best_bounds, prop41_certify, thm14_certify
from .errors import PreconditionError
from .intutil import base_digits, is_prime

# certificates are pure arithmetic; exact clique search needs the graph
CERTIFY_SIZE_LIMIT = 10**6
SEARCH_SIZE_LIMIT = 2500


@dataclass(frozen=True)
class FamilyInstance:
    family: str
    params: dict
    q: int
    d: int
    K_order: int
    certificate: Certificate
    notes: tuple[str, ...] = ()

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "params": dict(self.params),
            "q": self.q,
            "d": self.d,
            "K_order": self.K_order,
            "certificate": self.certificate.to_json(),
            "notes": list(self.notes),
        }


@dataclass(frozen=True)
class FamilyRejection:
    family: str
    params: dict
    reason: str

    def to_json(self) -> dict:
        return {"family": self.family, "params": dict(self.params),
                "rejected": True, "reason": self.reason}


def family_ex42(p: int, m: int = 1) -> FamilyInstance:
    """q = p^(3m), K of order p^m, d = (p^(2m) + p^m + 1)/3 for p = 1 mod 3;
    the quotient (q-1)/d collapses to 3(|K|-1), so all certifier conditions
    hold by construction."""
    if not is_prime(p) or p % 3 != 1:
        raise PreconditionError(f"p = {p} must be a prime congruent to 1 mod 3")
    if m < 1:
        raise PreconditionError("m must be at least 1")
    q = p**(3 * m)
    if q > CERTIFY_SIZE_LIMIT:
        raise PreconditionError(f"q = {q} exceeds the certification size limit")
    k = p**m
    d = (k * k + k + 1) // 3
    cert = prop41_certify(q, k, d)
    if not cert.applicable:  # pragma: no cover - holds by construction
        raise AssertionError("family conditions unexpectedly failed")
    return FamilyInstance(
        family="ex42", params={"p": p, "m": m}, q=q, d=d, K_order=k,
        certificate=cert,
        notes=(f"(q-1)/d = {(q - 1) // d} = 3(|K|-1)",))


def family_ex43(p: int, s: int, t: int) -> FamilyInstance:
    """q = p^(st) with coprime s > t >= 1, K of order p^s, and
    d = (q-1)(p-1) / ((p^s-1)(p^t-1)); the smaller subfield of order p^t is
    a clique as well."""
    if not is_prime(p) or p < 3:
        raise PreconditionError(f"p = {p} must be an odd prime")
    if t < 1 or s <= t or math.gcd(s, t) != 1:
        raise PreconditionError("s and t must be coprime with s > t >= 1")
    q = p**(s * t)
    if q > CERTIFY_SIZE_LIMIT:
        raise PreconditionError(f"q = {q} exceeds the certification size limit")
    num = (q - 1) * (p - 1)
    den = (p**s - 1) * (p**t - 1)
    if num % den:  # pragma: no cover - coprimality makes this exact
        raise AssertionError("d is unexpectedly non-integral")
    d = num // den
    if d <= 1:
        raise PreconditionError(f"degenerate parameters: d = {d} must exceed 1")
    cert = prop41_certify(q, p**s, d)
    if not cert.applicable:  # pragma: no cover - holds by construction
        raise AssertionError("family conditions unexpectedly failed")
    notes = []
    small = p**t
    if ((q - 1) // (small - 1)) % d == 0:
        notes.append(f"the subfield of order {small} is a clique too")
    return FamilyInstance(
        family="ex43", params={"p": p, "s": s, "t": t}, q=q, d=d,
        K_order=p**s, certificate=cert, notes=tuple(notes))


def family_ex44(x: int) -> FamilyInstance | FamilyRejection:
    """Candidate p = 2x^2 + x + 1 with d = 4x^2 + 3: the integer identity
    (4x^2+3)(x^2+x+1) = p^2 + p + 1 makes d a divisor of p^2+p+1 with
    d roughly 2p.  Primality of p is tested, never assumed."""
    if x < 1:
        raise PreconditionError("x must be at least 1")
    p = 2 * x * x + x + 1
    d = 4 * x * x + 3
    if d * (x * x + x + 1) != p * p + p + 1:  # pragma: no cover - identity
        raise AssertionError("integer identity failed")
    if not is_prime(p):
        return FamilyRejection("ex44", {"x": x}, f"p = {p} is composite")
    cert = thm14_certify(p, d)
    return FamilyInstance(
        family="ex44", params={"x": x}, q=p**3, d=d, K_order=p,
        certificate=cert, notes=(f"d = {d} is about 2p",))


@dataclass(frozen=True)
class Ex45Report:
    """At q = p^4 the carry condition is necessary: halving d from
    2(p^2+1) to p^2+1 jumps the clique number from p to p^2."""

    p: int
    q: int
    small_d_certificate: Certificate  # exact omega = p at d = 2(p^2+1)
    large_subfield_bundle: BoundBundle  # exact omega = p^2 at d = p^2+1
    failed_certificate: Certificate  # same K = F_p fails condition (iii)

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "q": self.q,
            "small_d": self.small_d_certificate.to_json(),
            "large_subfield": self.large_subfield_bundle.to_json(),
            "failed": self.failed_certificate.to_json(),
        }


def counterexample_ex45(p: int) -> Ex45Report:
    if not is_prime(p) or p < 3:
        raise PreconditionError(f"p = {p} must be an odd prime")
    q = p**4
    if q > CERTIFY_SIZE_LIMIT:
        raise PreconditionError(f"q = {q} exceeds the certification size limit")
    small = prop41_certify(q, p, 2 * (p * p + 1))
    bundle = best_bounds(q, p * p + 1)
    failed = prop41_certify(q, p, p * p + 1)
    return Ex45Report(p=p, q=q, small_d_certificate=small,
                      large_subfield_bundle=bundle, failed_certificate=failed)


@dataclass(frozen=True)
class Ex46Report:
    """Fixed instance q = 5^6, d = 3, K of order 25: the carry condition
    holds but the size condition q < d|K|(|K|+1) fails, and the clique
    number is 125 via the order-125 subfield and the square-root bound."""

    q: int
    d: int
    K_order: int
    certificate: Certificate  # inapplicable, condition (ii)
    true_bundle: BoundBundle  # exact 125
    quotient_digits: tuple[int, ...]  # base-5, most significant first

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "d": self.d,
            "K_order": self.K_order,
            "certificate": self.certificate.to_json(),
            "true_bounds": self.true_bundle.to_json(),
            "quotient_digits_msd": list(self.quotient_digits),
        }


def counterexample_ex46() -> Ex46Report:
    q, d, k = 5**6, 3, 25
    cert = prop41_certify(q, k, d)
    bundle = best_bounds(q, d)
    digits = base_digits((q - 1) // d, 5)
    return Ex46Report(q=q, d=d, K_order=k, certificate=cert,
                      true_bundle=bundle,
                      quotient_digits=tuple(reversed(digits.digits)))
