"""Finite field construction and exact arithmetic in GF(p^e).

Construction is deterministic: the modulus is the first irreducible monic
polynomial in a fixed enumeration order, and the primitive root is the
smallest element (in the integer encoding) of full multiplicative order.
An element is an integer in [0, q); its base-p digits are the coefficients
of its polynomial representative, little-endian.
"""
from __future__ import annotations

import os
from dataclasses import dataclass

from . import intutil
from .errors import PreconditionError

DEFAULT_SIZE_LIMIT = 1 << 22
DEFAULT_TABLE_LIMIT = 1 << 22


# ---------------------------------------------------------------------------
# polynomial arithmetic over GF(p), little-endian coefficient lists


def _trim(f: list[int]) -> list[int]:
    while f and f[-1] == 0:
        f.pop()
    return f


def _pmul(f: list[int], g: list[int], p: int) -> list[int]:
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, fi in enumerate(f):
        if fi:
            for j, gj in enumerate(g):
                out[i + j] = (out[i + j] + fi * gj) % p
    return _trim(out)


def _pmod(f: list[int], m: list[int], p: int) -> list[int]:
    # m must be monic
    f = list(f)
    dm = len(m) - 1
    while len(f) - 1 >= dm and f:
        c = f[-1]
        if c:
            shift = len(f) - 1 - dm
            for j in range(dm):
                f[shift + j] = (f[shift + j] - c * m[j]) % p
        f.pop()
    return _trim(f)


def _pgcd(f: list[int], g: list[int], p: int) -> list[int]:
    f, g = list(f), list(g)
    while g:
        inv = pow(g[-1], p - 2, p)
        gm = [c * inv % p for c in g]
        f, g = g, _pmod(f, gm, p)
    return f


def _ppowmod(base: list[int], k: int, m: list[int], p: int) -> list[int]:
    result = [1]
    acc = _pmod(base, m, p)
    while k:
        if k & 1:
            result = _pmod(_pmul(result, acc, p), m, p)
        acc = _pmod(_pmul(acc, acc, p), m, p)
        k >>= 1
    return result


def _is_irreducible(m: list[int], p: int) -> bool:
    """Rabin's test for a monic polynomial over GF(p)."""
    e = len(m) - 1
    if e < 1:
        return False
    if e == 1:
        return True
    x = [0, 1]
    # x^(p^k) mod m, iterated Frobenius
    frob = [None] * (e + 1)
    cur = x
    for k in range(1, e + 1):
        cur = _ppowmod(cur, p, m, p)
        frob[k] = cur
    if frob[e] != x:
        return False
    for ell in intutil.factorize(e):
        h = list(frob[e // ell])
        # h - x
        while len(h) < 2:
            h.append(0)
        h[1] = (h[1] - 1) % p
        if len(_pgcd(m, _trim(h), p)) > 1:
            return False
    return True


def _find_modulus(p: int, e: int) -> tuple[int, ...]:
    """First irreducible monic polynomial of degree e in the canonical order.

    Candidates are ordered by the little-endian base-p integer value of the
    non-leading coefficient vector.
    """
    for v in range(p**e):
        coeffs = []
        t = v
        for _ in range(e):
            t, d = divmod(t, p)
            coeffs.append(d)
        coeffs.append(1)
        if _is_irreducible(coeffs, p):
            return tuple(coeffs)
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FieldSpec:
    """Defining data of a concrete GF(p^e)."""

    p: int
    e: int
    q: int
    modulus: tuple[int, ...]


class Field:
    """A concrete finite field with exact arithmetic on encoded elements.

    Immutable after construction; safe for concurrent reads.
    """

    def __init__(self, spec: FieldSpec, table_limit: int = DEFAULT_TABLE_LIMIT):
        self.spec = spec
        p, e, q = spec.p, spec.e, spec.q
        self.p, self.e, self.q = p, e, q
        self.modulus = spec.modulus
        self._pp = [p**i for i in range(e + 1)]
        self._mod = list(spec.modulus)
        self._digit_cache: list[tuple[int, ...]] | None = None
        self._exp: list[int] | None = None
        self._log: list[int] | None = None
        self._class_maps: dict[int, dict[int, int]] = {}
        self.primitive_root = self._find_primitive_root()
        if q <= table_limit:
            self._build_tables()

    # -- encoding -----------------------------------------------------------

    def digits(self, a: int) -> tuple[int, ...]:
        """Base-p digit vector (length e) of the element encoding."""
        self._check(a)
        if self._digit_cache is not None:
            return self._digit_cache[a]
        out = []
        for _ in range(self.e):
            a, d = divmod(a, self.p)
            out.append(d)
        return tuple(out)

    def encode(self, digits) -> int:
        total = 0
        for d, w in zip(digits, self._pp):
            total += d * w
        return total

    def _check(self, a: int) -> None:
        if not isinstance(a, int) or not 0 <= a < self.q:
            raise PreconditionError(f"{a!r} is not an element encoding of GF({self.q})")

    # -- raw (table-free) arithmetic -----------------------------------------

    def _mul_digits(self, da, db) -> list[int]:
        p, e = self.p, self.e
        conv = [0] * (2 * e - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    conv[i + j] = (conv[i + j] + x * y) % p
        mod = self._mod
        for i in range(2 * e - 2, e - 1, -1):
            c = conv[i]
            if c:
                conv[i] = 0
                for j in range(e):
                    if mod[j]:
                        conv[i - e + j] = (conv[i - e + j] - c * mod[j]) % p
        return conv[:e]

    def _mul_raw(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.e == 1:
            return a * b % self.p
        return self.encode(self._mul_digits(self.digits(a), self.digits(b)))

    def _pow_raw(self, a: int, k: int) -> int:
        result = 1
        acc = a
        while k:
            if k & 1:
                result = self._mul_raw(result, acc)
            acc = self._mul_raw(acc, acc)
            k >>= 1
        return result

    # -- construction --------------------------------------------------------

    def _find_primitive_root(self) -> int:
        order_factors = intutil.factorize(self.q - 1)
        cofactors = [(self.q - 1) // r for r in order_factors]
        for a in range(2, self.q):
            if all(self._pow_raw(a, c) != 1 for c in cofactors):
                return a
        raise AssertionError("no primitive root found")  # pragma: no cover

    def _build_tables(self) -> None:
        p, e, q = self.p, self.e, self.q
        if e > 1:
            # enumerate digit vectors by counting, cheaper than q divmod chains
            cache = []
            cur = [0] * e
            for _ in range(q):
                cache.append(tuple(cur))
                for i in range(e):
                    cur[i] += 1
                    if cur[i] < p:
                        break
                    cur[i] = 0
            self._digit_cache = cache
        exp = [0] * (q - 1)
        log = [-1] * q
        g = self.primitive_root
        if e == 1:
            cur_v = 1
            for i in range(q - 1):
                exp[i] = cur_v
                log[cur_v] = i
                cur_v = cur_v * g % p
            closed = cur_v == 1
        else:
            gd = self._digit_cache[g]
            cur_d = [0] * e
            cur_d[0] = 1
            for i in range(q - 1):
                v = self.encode(cur_d)
                exp[i] = v
                log[v] = i
                cur_d = self._mul_digits(cur_d, gd)
            closed = self.encode(cur_d) == 1
        if not closed:  # pragma: no cover
            raise AssertionError("primitive root does not close the cycle")
        self._exp, self._log = exp, log

    # -- field operations ----------------------------------------------------

    def add(self, a: int, b: int) -> int:
        self._check(a)
        self._check(b)
        if self.e == 1:
            return (a + b) % self.p
        da, db = self.digits(a), self.digits(b)
        p = self.p
        return self.encode([(x + y) % p for x, y in zip(da, db)])

    def neg(self, a: int) -> int:
        self._check(a)
        if self.e == 1:
            return -a % self.p
        p = self.p
        return self.encode([-x % p for x in self.digits(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        self._check(a)
        self._check(b)
        if a == 0 or b == 0:
            return 0
        if self._exp is not None:
            return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]
        return self._mul_raw(a, b)

    def inv(self, a: int) -> int:
        self._check(a)
        if a == 0:
            raise PreconditionError("0 has no multiplicative inverse")
        if self._exp is not None:
            return self._exp[-self._log[a] % (self.q - 1)]
        return self._pow_raw(a, self.q - 2)

    def pow(self, a: int, k: int) -> int:
        self._check(a)
        if a == 0:
            if k < 0:
                raise PreconditionError("0 cannot be raised to a negative power")
            return 1 if k == 0 else 0
        k %= self.q - 1
        if k == 0:
            return 1
        if self._exp is not None:
            return self._exp[self._log[a] * k % (self.q - 1)]
        return self._pow_raw(a, k)

    def log(self, a: int) -> int:
        """Discrete log base the primitive root; a must be nonzero."""
        self._check(a)
        if a == 0:
            raise PreconditionError("0 has no discrete logarithm")
        if self._log is not None:
            return self._log[a]
        raise PreconditionError("field built without log tables")

    # -- power residues and subfields ------------------------------------------

    def is_dth_power(self, a: int, d: int) -> bool:
        """Membership of a in the subgroup of d-th powers of the unit group."""
        self._check(a)
        if a == 0:
            raise PreconditionError("0 is neither a d-th power nor a non-power here")
        if d < 1 or (self.q - 1) % d:
            raise PreconditionError(f"{d} does not divide q-1 = {self.q - 1}")
        if self._log is not None:
            return self._log[a] % d == 0
        return self.pow(a, (self.q - 1) // d) == 1

    def dth_class(self, a: int, d: int) -> int:
        """Index i in Z/dZ with a in g^i * (units)^d."""
        self._check(a)
        if a == 0:
            raise PreconditionError("0 lies in no multiplicative coset")
        if d < 1 or (self.q - 1) % d:
            raise PreconditionError(f"{d} does not divide q-1 = {self.q - 1}")
        if self._log is not None:
            return self._log[a] % d
        cmap = self._class_maps.get(d)
        if cmap is None:
            z = self.pow(self.primitive_root, (self.q - 1) // d)
            cmap = {}
            cur = 1
            for j in range(d):
                cmap[cur] = j
                cur = self.mul(cur, z)
            self._class_maps[d] = cmap
        return cmap[self.pow(a, (self.q - 1) // d)]

    def subfield_elements(self, sub_degree: int) -> frozenset[int]:
        """Elements of the subfield of degree sub_degree (fixed by x -> x^(p^m))."""
        if sub_degree < 1 or self.e % sub_degree:
            raise PreconditionError(f"{sub_degree} does not divide e = {self.e}")
        ps = self.p**sub_degree
        return frozenset(a for a in range(self.q) if self.pow(a, ps) == a)

    def elements(self) -> range:
        return range(self.q)

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "e": self.e,
            "q": self.q,
            "modulus": list(self.spec.modulus),
            "primitive_root": self.primitive_root,
        }


_FIELD_CACHE: dict[tuple[int, int, int], Field] = {}


def _table_limit_default() -> int:
    env = os.environ.get("PALEY_TABLE_LIMIT")
    return int(env) if env else DEFAULT_TABLE_LIMIT


def build_field(
    p: int,
    e: int,
    *,
    size_limit: int = DEFAULT_SIZE_LIMIT,
    table_limit: int | None = None,
) -> Field:
    """Build GF(p^e) deterministically; the same (p, e) always yields the
    same modulus and primitive root."""
    if p < 3 or p % 2 == 0 or not intutil.is_prime(p):
        raise PreconditionError(f"p = {p} must be an odd prime")
    if e < 1:
        raise PreconditionError(f"e = {e} must be at least 1")
    q = p**e
    if q > size_limit:
        raise PreconditionError(f"q = {q} exceeds the size limit {size_limit}")
    tl = _table_limit_default() if table_limit is None else table_limit
    key = (p, e, tl)
    cached = _FIELD_CACHE.get(key)
    if cached is None:
        spec = FieldSpec(p=p, e=e, q=q, modulus=_find_modulus(p, e))
        cached = Field(spec, table_limit=tl)
        _FIELD_CACHE[key] = cached
    return cached
