"""Dense univariate polynomials over a finite field, slice products of
point sets, exact cofactor division against x^q - x, and the p-th power
structure of derivative-free polynomials."""
from __future__ import annotations

from dataclasses import dataclass

from .errors import PreconditionError
from .directions import PointSet, direction_set
from .field import Field


class Poly:
    """Little-endian dense polynomial over a Field; normalized (no leading
    zeros; the zero polynomial has an empty coefficient tuple)."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, field: Field) -> "Poly":
        return cls(field, ())

    @classmethod
    def one(cls, field: Field) -> "Poly":
        return cls(field, (1,))

    @classmethod
    def x(cls, field: Field) -> "Poly":
        return cls(field, (0, 1))

    @classmethod
    def x_pow(cls, field: Field, k: int) -> "Poly":
        return cls(field, (0,) * k + (1,))

    # -- structure -----------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __eq__(self, other) -> bool:
        return (isinstance(other, Poly) and self.field is other.field
                and self.coeffs == other.coeffs)

    def __hash__(self) -> int:
        return hash((id(self.field), self.coeffs))

    def __repr__(self) -> str:
        return f"Poly({list(self.coeffs)})"

    def __call__(self, a: int) -> int:
        fld = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = fld.add(fld.mul(acc, a), c)
        return acc

    # -- arithmetic -----------------------------------------------------------

    def add(self, other: "Poly") -> "Poly":
        fld = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = fld.add(out[i], c)
        return Poly(fld, out)

    def sub(self, other: "Poly") -> "Poly":
        return self.add(other.scale(self.field.neg(1)))

    def scale(self, c: int) -> "Poly":
        fld = self.field
        return Poly(fld, [fld.mul(c, v) for v in self.coeffs])

    def mul(self, other: "Poly") -> "Poly":
        fld = self.field
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly.zero(fld)
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] = fld.add(out[i + j], fld.mul(x, y))
        return Poly(fld, out)

    def mul_linear(self, c: int) -> "Poly":
        """Multiply by the monic linear factor (x + c)."""
        fld = self.field
        a = self.coeffs
        out = [0] * (len(a) + 1)
        for i, v in enumerate(a):
            out[i + 1] = fld.add(out[i + 1], v)
            out[i] = fld.add(out[i], fld.mul(c, v))
        return Poly(fld, out)

    def divmod(self, divisor: "Poly") -> tuple["Poly", "Poly"]:
        fld = self.field
        if divisor.is_zero():
            raise PreconditionError("division by the zero polynomial")
        rem = list(self.coeffs)
        dd = divisor.degree
        lead_inv = fld.inv(divisor.coeffs[-1])
        quot = [0] * max(len(rem) - dd, 0)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i]
            if c:
                factor = fld.mul(c, lead_inv)
                quot[i - dd] = factor
                for j, dc in enumerate(divisor.coeffs):
                    rem[i - dd + j] = fld.sub(rem[i - dd + j], fld.mul(factor, dc))
        return Poly(fld, quot), Poly(fld, rem)

    def mod(self, divisor: "Poly") -> "Poly":
        return self.divmod(divisor)[1]

    def pow(self, k: int) -> "Poly":
        result = Poly.one(self.field)
        acc = self
        while k:
            if k & 1:
                result = result.mul(acc)
            acc = acc.mul(acc)
            k >>= 1
        return result

    def pow_mod(self, k: int, modulus: "Poly") -> "Poly":
        result = Poly.one(self.field).mod(modulus)
        acc = self.mod(modulus)
        while k:
            if k & 1:
                result = result.mul(acc).mod(modulus)
            acc = acc.mul(acc).mod(modulus)
            k >>= 1
        return result

    def derivative(self) -> "Poly":
        fld = self.field
        out = []
        for i in range(1, len(self.coeffs)):
            out.append(fld.mul(i % fld.p, self.coeffs[i]))
        return Poly(fld, out)


def redei_slice(U: PointSet, y0: int) -> Poly:
    """Monic product of the linear factors (x + a*y0 - b) over the points
    (a, b) of U; degree equals |U|."""
    if len(U) == 0:
        raise PreconditionError("point set must be nonempty")
    fld = U.field
    poly = Poly.one(fld)
    for a, b in U.points:
        poly = poly.mul_linear(fld.sub(fld.mul(a, y0), b))
    return poly


def divides_xq_minus_x(field: Field, f: Poly) -> bool:
    """True iff f divides x^q - x (all roots in F_q, each simple)."""
    if f.is_zero():
        raise PreconditionError("f must be nonzero")
    if f.degree > field.q:
        raise PreconditionError("degree of f exceeds q")
    if f.degree == 0:
        return True
    xq = Poly.x(field).pow_mod(field.q, f)
    return xq.sub(Poly.x(field).mod(f)).is_zero()


def szonyi_quotient(field: Field, U: PointSet, y0: int) -> Poly:
    """Exact cofactor (x^q - x) / slice at a non-determined direction y0.

    Raises when the division leaves a remainder, which happens exactly when
    y0 is a determined direction of U (repeated linear factors)."""
    R = redei_slice(U, y0)
    target = Poly(field, (0, field.neg(1)) + (0,) * (field.q - 2) + (1,))
    quotient, remainder = target.divmod(R)
    if not remainder.is_zero():
        raise PreconditionError(
            f"slice at y0 = {y0} does not divide x^q - x (determined direction)")
    return quotient


@dataclass(frozen=True)
class PthPowerDecomposition:
    is_deriv_zero: bool
    root: Poly | None


def pth_power_decompose(field: Field, f: Poly) -> PthPowerDecomposition:
    """Detect a vanishing formal derivative and extract the unique p-th root.

    When f' = 0, f only has coefficients at exponents divisible by p; the
    root g maps the coefficient c at exponent i*p to c^(q/p) at exponent i
    (Frobenius inverse), and satisfies g^p = f, so every root multiplicity
    of f is p times its multiplicity in g."""
    if f.is_zero():
        raise PreconditionError("f must be nonzero")
    p = field.p
    if not f.derivative().is_zero():
        return PthPowerDecomposition(False, None)
    root_exp = field.q // p
    out = [0] * (f.degree // p + 1)
    for i in range(0, f.degree + 1, p):
        out[i // p] = field.pow(f.coeffs[i], root_exp)
    return PthPowerDecomposition(True, Poly(field, out))
