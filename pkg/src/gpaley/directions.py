"""Direction sets of point sets in AG(2, q) and related counting bounds.

The vertical direction is tracked as a dedicated flag, never as an in-field
sentinel: q-1 is a perfectly good slope.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import PreconditionError
from .field import Field
from .intutil import prime_power


@dataclass(frozen=True)
class PointSet:
    """Deduplicated points in AG(2, q), optionally known to be A x B."""

    field: Field
    points: tuple[tuple[int, int], ...]
    A: frozenset[int] | None = None
    B: frozenset[int] | None = None

    @classmethod
    def cartesian(cls, field: Field, A, B) -> "PointSet":
        As, Bs = frozenset(A), frozenset(B)
        pts = tuple(sorted((a, b) for a in As for b in Bs))
        return cls(field, pts, As, Bs)

    @classmethod
    def of_points(cls, field: Field, points) -> "PointSet":
        return cls(field, tuple(sorted(set(points))))

    def __post_init__(self):
        if not self.points:
            raise PreconditionError("point set is empty")
        q = self.field.q
        for x, y in self.points:
            if not (0 <= x < q and 0 <= y < q):
                raise PreconditionError(f"point ({x}, {y}) outside AG(2, {q})")

    def __len__(self) -> int:
        return len(self.points)


@dataclass(frozen=True)
class DirectionSet:
    finite: frozenset[int]
    has_infinity: bool

    @property
    def size(self) -> int:
        return len(self.finite) + (1 if self.has_infinity else 0)

    def contains(self, slope: int | None) -> bool:
        """Membership; None stands for the vertical direction."""
        if slope is None:
            return self.has_infinity
        return slope in self.finite

    def to_json(self) -> dict:
        return {"finite": sorted(self.finite), "infinity": self.has_infinity,
                "size": self.size}


def direction_set(U: PointSet) -> DirectionSet:
    """Exact set of pairwise slopes of U; vertical pairs contribute infinity.

    Cartesian input takes the difference-set shortcut
    D = (B-B \\ 0) * (A-A \\ 0)^{-1} + {0, inf}, which coincides with the
    all-pairs definition whenever |A|, |B| >= 2.
    """
    if len(U) < 2:
        raise PreconditionError("a direction set needs at least two points")
    fld = U.field
    if U.A is not None and U.B is not None and len(U.A) >= 2 and len(U.B) >= 2:
        da = {fld.sub(x, y) for x in U.A for y in U.A if x != y}
        db = {fld.sub(x, y) for x in U.B for y in U.B if x != y}
        inv_da = [fld.inv(x) for x in da]
        finite = {fld.mul(y, xi) for y in db for xi in inv_da}
        finite.add(0)
        return DirectionSet(frozenset(finite), True)
    finite: set[int] = set()
    has_inf = False
    pts = U.points
    for i, (x1, y1) in enumerate(pts):
        for x2, y2 in pts[i + 1:]:
            if x1 == x2:
                has_inf = True
            else:
                finite.add(fld.mul(fld.sub(y2, y1), fld.inv(fld.sub(x2, x1))))
    return DirectionSet(frozenset(finite), has_inf)


def thm16_lower_bound(m: int, n: int, q: int, p: int) -> int:
    """Guaranteed direction count of an m-by-n Cartesian product in AG(2, q):
    mn - min(p^s1 (n-1), p^s2 (m-1)) + 1 with p^s1 n <= q < p^(s1+1) n and
    symmetrically for s2."""
    if m < 2 or n < 2:
        raise PreconditionError("both factors need at least two elements")
    if m * n > q:
        raise PreconditionError(f"mn = {m * n} exceeds q = {q}")
    pp, _ = prime_power(q)
    if pp != p:
        raise PreconditionError(f"q = {q} is not a power of p = {p}")

    def scale(k: int) -> int:
        s = 1
        while s * p * k <= q:
            s *= p
        return s

    return m * n - min(scale(n) * (n - 1), scale(m) * (m - 1)) + 1


@dataclass(frozen=True)
class CorollaryReport:
    """Outcome of a hypothesis-guarded counting inequality.

    `applicable` records whether the hypotheses held; `holds` compares the
    measured quantity against the bound regardless, so an inapplicable
    instance is distinguishable from a violated one.
    """

    name: str
    lhs: int
    rhs: float
    holds: bool
    applicable: bool
    reason: str

    def to_json(self) -> dict:
        return {"name": self.name, "lhs": self.lhs, "rhs": self.rhs,
                "holds": self.holds, "applicable": self.applicable,
                "reason": self.reason}


def cor15_check(field: Field, A) -> CorollaryReport:
    """Quotient-set expansion |(A-A)/(A-A)| > |A|^2 / 2 for q an odd power
    of p and 2 p^r < |A| < sqrt(q)."""
    if field.e % 2 == 0:
        raise PreconditionError("q must be an odd power of p")
    A = frozenset(A)
    m = len(A)
    r = (field.e - 1) // 2
    lower_ok = 2 * field.p**r < m
    upper_ok = m * m < field.q
    applicable = lower_ok and upper_ok
    if applicable:
        reason = "hypotheses satisfied"
    elif not lower_ok:
        reason = f"|A| = {m} is not above 2 p^r = {2 * field.p ** r}"
    else:
        reason = f"|A|^2 = {m * m} is not below q = {field.q}"
    if m < 2:
        raise PreconditionError("A needs at least two elements")
    lhs = direction_set(PointSet.cartesian(field, A, A)).size
    holds = 2 * lhs > m * m
    return CorollaryReport("cor15", lhs, m * m / 2, holds, applicable, reason)


def cor23_check(field: Field, A) -> CorollaryReport:
    """Difference-set growth |A-A| >= min(2|A| - q/p, q) when |A| > q/p."""
    A = frozenset(A)
    m = len(A)
    qp = field.q // field.p
    applicable = m > qp
    reason = ("hypotheses satisfied" if applicable
              else f"|A| = {m} is not above q/p = {qp}")
    diff = {field.sub(a, b) for a in A for b in A}
    rhs = min(2 * m - qp, field.q)
    return CorollaryReport("cor23", len(diff), rhs, len(diff) >= rhs,
                           applicable, reason)


def cor24_check(field: Field, K_degree: int, A) -> CorollaryReport:
    """Subfield-dilate expansion |(A-A)K| > |A| (|K| - |K|/p - 1) for
    |A| = q/|K| + 1, K a proper subfield."""
    if K_degree < 1 or field.e % K_degree or K_degree == field.e:
        raise PreconditionError(f"degree {K_degree} is not a proper subfield degree")
    K = field.subfield_elements(K_degree)
    k = len(K)
    A = frozenset(A)
    m = len(A)
    applicable = m == field.q // k + 1
    reason = ("hypotheses satisfied" if applicable
              else f"|A| = {m} differs from q/|K| + 1 = {field.q // k + 1}")
    diff = {field.sub(a, b) for a in A for b in A}
    prod = {field.mul(dv, kv) for dv in diff for kv in K}
    rhs = m * (k - k // field.p - 1)
    return CorollaryReport("cor24", len(prod), rhs, len(prod) > rhs,
                           applicable, reason)
