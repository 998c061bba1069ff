import mpmath
import pytest

from gpaley.bounds import (best_bounds, prop41_certify, remark32_bound,
                           subfield_clique_orders, thm11_bound, thm13_bound,
                           thm14_certify, trivial_bound)
from gpaley.errors import PreconditionError
from gpaley.field import build_field
from gpaley.graph import build_paley_graph, max_clique
from gpaley.verify import gp_instances


def test_trivial_bound():
    assert trivial_bound(81) == 9
    assert trivial_bound(27) == 5
    assert trivial_bound(15625) == 125


def test_thm11_examples():
    assert thm11_bound(13, 2) == 3
    assert thm11_bound(27, 13) == 3
    assert thm11_bound(9, 2) == 3


def test_thm13_examples():
    assert thm13_bound(27, 13) == 3
    assert thm13_bound(243, 11) == 10
    assert thm13_bound(243, 121) == 9
    # strictly below the trivial bound at (243, 11)
    assert thm13_bound(243, 11) < trivial_bound(243) == 15


def _closed_form(q, d, p, r):
    """Reference value via the real quadratic root, evaluated at high
    precision: max(p^r, floor of the positive root of
    n^2 - p^r n - (q-1)/d (shifted)) computed with mpmath."""
    M = (q - 1) // d
    pr = p**r
    # larger root of n^2 - pr n + (pr - 1 - M), then clamp against float
    # rounding by checking the defining inequality exactly
    mpmath.mp.dps = 60
    root = (pr + mpmath.sqrt(mpmath.mpf((pr - 2) ** 2 + 4 * M))) / 2
    n2 = int(mpmath.floor(root))
    while (n2 + 1) ** 2 - pr * (n2 + 1) + pr - 1 - M <= 0:
        n2 += 1
    while n2 * n2 - pr * n2 + pr - 1 - M > 0:
        n2 -= 1
    return max(pr, n2)


@pytest.mark.parametrize("q,d", [(27, 13), (243, 11), (243, 121), (3**7, 1093),
                                 (5**3, 31), (5**5, 11), (7**3, 19)])
def test_thm13_matches_float_closed_form(q, d):
    from gpaley.intutil import prime_power

    p, e = prime_power(q)
    assert e % 2 == 1
    assert thm13_bound(q, d) == _closed_form(q, d, p, (e - 1) // 2)


def test_thm13_rejects_square():
    with pytest.raises(PreconditionError):
        thm13_bound(81, 10)


def test_remark32_examples():
    assert remark32_bound(27, 13, frozenset({0})) == 3
    assert remark32_bound(27, 13, frozenset({0, 1})) == 4
    assert remark32_bound(243, 11, frozenset({0})) == 10


def test_remark32_preconditions():
    with pytest.raises(PreconditionError):
        # I - I covers all of Z/3: bound degenerates, rejected
        remark32_bound(13, 3, frozenset({0, 1, 2}))
    with pytest.raises(PreconditionError):
        # -S != S for this index set
        remark32_bound(13, 4, frozenset({0}))


def test_prop41_examples():
    cert = prop41_certify(81, 3, 20)
    assert cert.applicable and cert.kind == "exact" and cert.value == 3

    cert = prop41_certify(81, 3, 10)
    assert not cert.applicable
    assert not cert.details["iii"]["holds"]
    assert cert.inputs["remainder_r"] == 8
    assert "6" in cert.details["iii"]["statement"]

    cert = prop41_certify(343, 7, 19)
    assert cert.applicable and cert.value == 7
    assert cert.inputs["remainder_r"] == 18

    cert = prop41_certify(15625, 25, 3)
    assert not cert.applicable
    assert not cert.details["ii"]["holds"]


def test_prop41_implies_subfield_clique():
    from gpaley.graph import is_clique

    for q, d in gp_instances(250):
        from gpaley.intutil import divisors, prime_power

        p, e = prime_power(q)
        fld = build_field(p, e)
        for m in divisors(e)[:-1]:
            cert = prop41_certify(q, p**m, d)
            if cert.applicable:
                graph = build_paley_graph(fld, d)
                K = fld.subfield_elements(m)
                assert is_clique(graph, K)
                assert max_clique(graph).size == cert.value == p**m


def test_thm14_examples():
    assert thm14_certify(3, 13).value == 3
    assert thm14_certify(11, 19).value == 11
    with pytest.raises(PreconditionError):
        thm14_certify(3, 2)  # d must exceed p and divide p^2 + p + 1


def test_best_bounds_examples():
    b = best_bounds(27, 13)
    assert b.exact and b.omega == 3

    b = best_bounds(81, 10)
    assert b.exact and b.omega == 9

    b = best_bounds(15625, 3)
    assert b.exact and b.omega == 125


def test_soundness_small_sweep():
    for q, d in gp_instances(125):
        fld = build_field(*__import__("gpaley.intutil", fromlist=["prime_power"]).prime_power(q))
        size = max_clique(build_paley_graph(fld, d)).size
        bundle = best_bounds(q, d)
        for cert in bundle.certificates:
            if not cert.applicable:
                continue
            if cert.kind in ("upper", "exact"):
                assert size <= cert.value, (q, d, cert.bound_name)
            if cert.kind in ("lower", "exact"):
                assert size >= cert.value, (q, d, cert.bound_name)
        assert bundle.best_lower <= size <= bundle.best_upper


def test_subfield_clique_orders():
    assert subfield_clique_orders(81, 10) == [3, 9]
    assert subfield_clique_orders(15625, 3) == [5, 25, 125]
    assert subfield_clique_orders(27, 13) == [3]
