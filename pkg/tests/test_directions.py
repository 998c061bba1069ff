import random
from itertools import combinations

import pytest

from gpaley.directions import (PointSet, cor15_check, cor23_check,
                               cor24_check, direction_set, thm16_lower_bound)
from gpaley.errors import PreconditionError
from gpaley.field import build_field


def brute_force_directions(field, points):
    """Direction set straight from the definition, pair by pair."""
    finite = set()
    infinity = False
    pts = list(points)
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            (a1, b1), (a2, b2) = pts[i], pts[j]
            if a1 == a2:
                infinity = True
            else:
                finite.add(field.mul(field.sub(b1, b2),
                                     field.inv(field.sub(a1, a2))))
    return finite, infinity


def test_subfield_square_example():
    fld = build_field(3, 2)
    sub = frozenset({0, 1, 2})
    ds = direction_set(PointSet.cartesian(fld, sub, sub))
    assert ds.size == 4
    assert ds.has_infinity
    assert ds.finite == frozenset({0, 1, 2})
    assert thm16_lower_bound(3, 3, 9, 3) == 4


def test_exhaustive_gf9_shortcut_and_bound():
    fld = build_field(3, 2)
    subsets = [frozenset(c) for r in (2, 3) for c in combinations(range(9), r)]
    for A in subsets:
        for B in subsets:
            U = PointSet.cartesian(fld, A, B)
            ds = direction_set(U)
            finite, inf = brute_force_directions(fld, U.points)
            assert ds.finite == frozenset(finite)
            assert ds.has_infinity == inf
            assert ds.size >= thm16_lower_bound(len(A), len(B), 9, 3)


def test_bound_examples():
    # m=n=sqrt(q): s1 = s2 = (e/2 - ?) ... at q=9, p=3: p^s * 3 <= 9 -> s=1
    assert thm16_lower_bound(3, 3, 9, 3) == 9 - 3 * 2 + 1
    assert thm16_lower_bound(9, 3, 27, 3) == 10
    assert thm16_lower_bound(5, 5, 25, 5) == 6
    assert thm16_lower_bound(2, 2, 9, 3) == 2


def test_prime_field_reduction():
    rng = random.Random(7)
    for p in (13, 17):
        fld = build_field(p, 1)
        for _ in range(100):
            m, n = rng.randint(2, 4), rng.randint(2, 4)
            if m * n >= p:
                continue
            assert thm16_lower_bound(m, n, p, p) == m * n - min(m, n) + 2
            A = frozenset(rng.sample(range(p), m))
            B = frozenset(rng.sample(range(p), n))
            ds = direction_set(PointSet.cartesian(fld, A, B))
            assert ds.size >= m * n - min(m, n) + 2


def test_sharpness_gf25_subfield():
    fld = build_field(5, 2)
    sub = fld.subfield_elements(1)
    ds = direction_set(PointSet.cartesian(fld, sub, sub))
    assert ds.size == thm16_lower_bound(5, 5, 25, 5) == 6


def test_sharpness_subspace_gf27():
    fld = build_field(3, 3)
    subspace = frozenset(range(9))  # prime-subfield span of {1, x}
    ds = direction_set(PointSet.cartesian(fld, subspace, frozenset({0, 1, 2})))
    assert ds.size == thm16_lower_bound(9, 3, 27, 3) == 10


def test_general_point_set_and_infinity():
    fld = build_field(3, 2)
    U = PointSet.of_points(fld, [(0, 0), (0, 1), (1, 0)])
    ds = direction_set(U)
    assert ds.has_infinity
    assert ds.contains(None)  # None encodes the vertical direction
    assert 0 in ds.finite
    assert ds.size == 3


def test_point_set_validation():
    fld = build_field(3, 2)
    with pytest.raises(PreconditionError):
        PointSet.cartesian(fld, frozenset({0, 9}), frozenset({0}))
    with pytest.raises(PreconditionError):
        PointSet.of_points(fld, [])
    with pytest.raises(PreconditionError):
        direction_set(PointSet.of_points(fld, [(1, 1)]))


def test_cor15_example():
    fld = build_field(5, 3)
    rng = random.Random(0)
    for _ in range(20):
        A = frozenset(rng.sample(range(125), 11))
        rep = cor15_check(fld, A)
        assert rep.applicable and rep.holds
        assert 2 * rep.lhs > 121
    # even exponent is out of scope entirely
    with pytest.raises(PreconditionError):
        cor15_check(build_field(3, 2), frozenset({0, 1, 2}))


def test_cor23_exhaustive_gf9():
    fld = build_field(3, 2)
    for A in combinations(range(9), 4):
        rep = cor23_check(fld, A)
        assert rep.applicable and rep.holds
        assert rep.lhs >= 5
    # too small to apply
    assert not cor23_check(fld, (0, 1)).applicable


def test_cor24_example():
    fld = build_field(3, 3)
    rng = random.Random(1)
    for _ in range(20):
        A = frozenset(rng.sample(range(27), 10))
        rep = cor24_check(fld, 1, A)
        assert rep.applicable and rep.holds
        assert rep.lhs > 10
    assert not cor24_check(fld, 1, frozenset(range(5))).applicable
