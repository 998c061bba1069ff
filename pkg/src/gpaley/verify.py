"""Batch verification suites: each suite sweeps one module's invariants and
reports violations instead of raising, so a falsified property is a finding
distinguishable from a usage error."""
from __future__ import annotations

import functools
import random
import time
from dataclasses import dataclass, field as dfield

from . import bounds as bnd
from .directions import (PointSet, cor15_check, cor23_check, cor24_check,
                         direction_set, thm16_lower_bound)
from .errors import PreconditionError
from .field import Field, build_field
from .graph import Graph, build_paley_graph, is_clique, max_clique
from .intutil import base_digits, binom_nonzero_mod_p, divisors, is_prime, isqrt
from .redei import Poly, divides_xq_minus_x, pth_power_decompose, redei_slice, szonyi_quotient

_SMALL_ODD_PRIMES = (3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53,
                     59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109,
                     113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173,
                     179, 181, 191, 193, 197, 199, 211, 223, 227, 229, 233,
                     239, 241, 251, 257, 263, 269, 271, 277, 281, 283, 293,
                     307, 311, 313, 317, 331, 337, 347, 349, 353, 359)


@dataclass
class SuiteReport:
    suite: str
    checks: int = 0
    violations: list[str] = dfield(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.violations

    def check(self, ok: bool, message: str) -> None:
        self.checks += 1
        if not ok:
            self.violations.append(message)

    def to_json(self) -> dict:
        return {"suite": self.suite, "checks": self.checks,
                "violations": list(self.violations), "passed": self.passed,
                "seconds": round(self.seconds, 3)}


def _timed(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs) -> SuiteReport:
        t0 = time.monotonic()
        report = fn(*args, **kwargs)
        report.seconds = time.monotonic() - t0
        return report

    return wrapper


def odd_prime_powers(max_q: int) -> list[int]:
    out = []
    for p in _SMALL_ODD_PRIMES:
        q = p
        while q <= max_q:
            out.append(q)
            q *= p
    return sorted(out)


def gp_instances(max_q: int):
    """All (q, d) with q an odd prime power <= max_q and 1 < d | (q-1)/2."""
    for q in odd_prime_powers(max_q):
        for d in divisors((q - 1) // 2):
            if d > 1:
                yield q, d


# ---------------------------------------------------------------------------
# independent clique oracle (pivoting Bron-Kerbosch over plain sets)


def brute_force_max_cliques(graph: Graph) -> list[tuple[int, ...]]:
    """All maximum cliques by set-based Bron-Kerbosch with pivoting;
    independent of the bitset branch-and-bound search path."""
    neighbors = {u: {v for v in range(graph.q) if graph.adjacency(u, v)}
                 for u in range(graph.q)}
    best: list[set[int]] = []

    def extend(R: set[int], P: set[int], X: set[int]) -> None:
        if not P and not X:
            if not best or len(R) > len(best[0]):
                best.clear()
                best.append(set(R))
            elif len(R) == len(best[0]):
                best.append(set(R))
            return
        pivot = max(P | X, key=lambda u: len(P & neighbors[u]))
        for v in sorted(P - neighbors[pivot]):
            extend(R | {v}, P & neighbors[v], X & neighbors[v])
            P.remove(v)
            X.add(v)

    extend(set(), set(range(graph.q)), set())
    return sorted(tuple(sorted(c)) for c in best)


# ---------------------------------------------------------------------------


@_timed
def verify_field(max_q: int = 81, exhaustive_q: int = 27) -> SuiteReport:
    report = SuiteReport("field")
    for q in odd_prime_powers(max_q):
        fld = _field_for(q)
        g = fld.primitive_root
        report.check(all(fld.pow(g, (q - 1) // r) != 1
                         for r in divisors(q - 1) if is_prime(r)),
                     f"primitive root of GF({q}) has wrong order")
        # Frobenius: a^q = a; units have order dividing q-1
        for a in range(q):
            report.check(fld.pow(a, q) == a, f"a^q != a for a={a} in GF({q})")
            if a:
                report.check(fld.pow(a, q - 1) == 1,
                             f"a^(q-1) != 1 for a={a} in GF({q})")
        sample = range(q) if q <= exhaustive_q else range(0, q, max(q // 24, 1))
        for a in sample:
            for b in sample:
                report.check(fld.add(a, b) == fld.add(b, a) and
                             fld.mul(a, b) == fld.mul(b, a),
                             f"commutativity failed in GF({q})")
                for c in sample:
                    ok = (fld.mul(fld.mul(a, b), c) == fld.mul(a, fld.mul(b, c))
                          and fld.add(fld.add(a, b), c) == fld.add(a, fld.add(b, c))
                          and fld.mul(a, fld.add(b, c))
                          == fld.add(fld.mul(a, b), fld.mul(a, c)))
                    report.check(ok, f"ring axioms failed in GF({q})")
        for d in divisors(q - 1):
            powers = {a for a in range(1, q) if fld.is_dth_power(a, d)}
            report.check(len(powers) == (q - 1) // d,
                         f"d-th powers of GF({q}) have wrong order for d={d}")
            report.check(all((fld.log(a) % d == 0) == (a in powers)
                             for a in range(1, q)),
                         f"d-th power test disagrees with log criterion, GF({q}) d={d}")
            if (q - 1) % (2 * d) == 0:
                report.check(fld.is_dth_power(fld.neg(1), d),
                             f"-1 is not a d-th power in GF({q}) with q=1 mod 2d={2 * d}")
    return report


def _field_for(q: int) -> Field:
    from .intutil import prime_power

    p, e = prime_power(q)
    return build_field(p, e)


@_timed
def verify_arith(seed: int = 0, trials: int = 2000) -> SuiteReport:
    import math

    report = SuiteReport("arith")
    rng = random.Random(seed)
    for p in (3, 5, 7, 13):
        for a in range(0, 121):
            for b in range(0, 121):
                expected = math.comb(a + b, b) % p != 0
                report.check(binom_nonzero_mod_p(a, b, p) == expected,
                             f"carry criterion wrong at a={a} b={b} p={p}")
        for _ in range(trials):
            a, b = rng.randrange(3000), rng.randrange(3000)
            expected = math.comb(a + b, b) % p != 0
            report.check(binom_nonzero_mod_p(a, b, p) == expected,
                         f"carry criterion wrong at a={a} b={b} p={p}")
    for _ in range(trials):
        m = rng.randrange(1 << 80)
        s = isqrt(m)
        report.check(s * s <= m < (s + 1) * (s + 1), f"isqrt wrong at {m}")
    digs = base_digits(5208, 5)
    report.check(list(digs.digits) == [3, 1, 3, 1, 3, 1] and digs.value() == 5208,
                 "digit vector of 5208 base 5 is wrong")
    return report


@_timed
def verify_graph(max_q: int = 125) -> SuiteReport:
    report = SuiteReport("graph")
    for q, d in gp_instances(max_q):
        fld = _field_for(q)
        graph = build_paley_graph(fld, d)
        report.check(graph.degree == (q - 1) // d, f"GP({q},{d}) degree wrong")
        # adjacency symmetry and translation invariance on a sample
        for u in range(0, q, max(q // 12, 1)):
            for v in range(0, q, max(q // 12, 1)):
                report.check(graph.adjacency(u, v) == graph.adjacency(v, u),
                             f"asymmetric adjacency in GP({q},{d})")
                w = (u * 7 + v + 1) % q
                report.check(
                    graph.adjacency(u, v)
                    == graph.adjacency(fld.add(u, w), fld.add(v, w)),
                    f"translation invariance failed in GP({q},{d})")
        # scaling invariance: S is closed under multiplication by d-th powers
        s0 = graph.connection[0]
        for s in graph.connection:
            report.check(graph.adjacency(0, fld.mul(s0, fld.mul(s, fld.inv(s0)))),
                         f"scaling invariance failed in GP({q},{d})")
        result = max_clique(graph)
        oracle = brute_force_max_cliques(graph)
        report.check(result.optimal and result.size == len(oracle[0]),
                     f"search disagrees with enumeration on GP({q},{d}): "
                     f"{result.size} vs {len(oracle[0])}")
        report.check(result.witness == oracle[0],
                     f"witness of GP({q},{d}) is not the lexicographic minimum")
        for k in bnd.subfield_clique_orders(q, d):
            report.check(result.size >= k,
                         f"GP({q},{d}) misses the subfield clique of order {k}")
    return report


def _random_subset(rng: random.Random, q: int, size: int) -> frozenset[int]:
    return frozenset(rng.sample(range(q), size))


@_timed
def verify_directions(seed: int = 0, trials: int = 500,
                      exhaustive: bool = True) -> SuiteReport:
    report = SuiteReport("directions")
    rng = random.Random(seed)
    if exhaustive:
        fld = build_field(3, 2)
        from itertools import combinations

        subsets = [frozenset(c) for r in (2, 3) for c in combinations(range(9), r)]
        f3 = frozenset({0, 1, 2})
        for A in subsets:
            for B in subsets:
                U = PointSet.cartesian(fld, A, B)
                ds = direction_set(U)
                all_pairs = direction_set(PointSet.of_points(fld, U.points))
                report.check(ds == all_pairs,
                             f"shortcut mismatch at A={sorted(A)} B={sorted(B)}")
                bound = thm16_lower_bound(len(A), len(B), 9, 3)
                report.check(ds.size >= bound,
                             f"direction bound violated at A={sorted(A)} B={sorted(B)}")
                if A == f3 and B == f3:
                    report.check(ds.size == bound == 4,
                                 "bound is not sharp at the subfield square")
    for (p, e) in ((3, 3), (5, 2)):
        fld = build_field(p, e)
        q = fld.q
        for _ in range(trials):
            m = rng.randint(2, 6)
            n = rng.randint(2, max(2, min(6, q // m)))
            if m * n > q:
                continue
            A = _random_subset(rng, q, m)
            B = _random_subset(rng, q, n)
            U = PointSet.cartesian(fld, A, B)
            ds = direction_set(U)
            report.check(ds == direction_set(PointSet.of_points(fld, U.points)),
                         f"shortcut mismatch in GF({q})")
            report.check(ds.size >= thm16_lower_bound(m, n, q, p),
                         f"direction bound violated in GF({q})")
    # sharpness at subfield squares and at subspace-times-subfield
    for (p, e) in ((3, 2), (5, 2)):
        fld = build_field(p, e)
        sub = fld.subfield_elements(1)
        ds = direction_set(PointSet.cartesian(fld, sub, sub))
        report.check(ds.size == thm16_lower_bound(p, p, fld.q, p) == p + 1,
                     f"subfield sharpness failed in GF({fld.q})")
    fld27 = build_field(3, 3)
    subspace = frozenset(range(9))  # span of {1, x} over the prime subfield
    ds = direction_set(PointSet.cartesian(fld27, subspace, frozenset({0, 1, 2})))
    report.check(ds.size == thm16_lower_bound(9, 3, 27, 3),
                 "subspace-times-subfield sharpness failed in GF(27)")
    # rows variant: U a union of equal-size rows obeys the bound, minus one
    # when the vertical direction is absent
    for (p, e) in ((3, 2), (3, 3)):
        fld = build_field(p, e)
        q = fld.q
        for _ in range(trials // 5):
            m = rng.randint(2, 4)
            n = rng.randint(2, 3)
            if m * n > q:
                continue
            bs = rng.sample(range(q), n)
            rows = [_random_subset(rng, q, m) for _ in range(n)]
            pts = [(a, b) for b, A in zip(bs, rows) for a in A]
            ds = direction_set(PointSet.of_points(fld, pts))
            bound = thm16_lower_bound(m, n, q, p)
            slack = 0 if ds.has_infinity else 1
            report.check(ds.size >= bound - slack,
                         f"row-union bound violated in GF({q})")
    # prime-field consistency: the bound collapses to mn - min(m,n) + 2
    for p in (13, 17):
        fld = build_field(p, 1)
        for _ in range(100):
            m = rng.randint(2, 4)
            n = rng.randint(2, min(4, (p - 1) // m))
            if m * n >= p:
                continue
            bound = thm16_lower_bound(m, n, p, p)
            report.check(bound == m * n - min(m, n) + 2,
                         f"prime-field bound mismatch at p={p} m={m} n={n}")
            A = _random_subset(rng, p, m)
            B = _random_subset(rng, p, n)
            ds = direction_set(PointSet.cartesian(fld, A, B))
            report.check(ds.size >= bound, f"prime-field bound violated at p={p}")
    return report


@_timed
def verify_redei(seed: int = 0, trials: int = 200) -> SuiteReport:
    report = SuiteReport("redei")
    rng = random.Random(seed)
    fld = build_field(3, 3)
    q = fld.q
    for _ in range(trials):
        size = rng.randint(4, 9)
        pts = set()
        while len(pts) < size:
            pts.add((rng.randrange(q), rng.randrange(q)))
        U = PointSet.of_points(fld, pts)
        ds = direction_set(U)
        for y0 in range(q):
            f = redei_slice(U, y0)
            report.check(f.is_monic() and f.degree == size,
                         "slice is not monic of degree |U|")
            divides = divides_xq_minus_x(fld, f)
            report.check(divides == (not ds.contains(y0)),
                         f"divisibility disagrees with membership at y0={y0}")
            if not ds.contains(y0):
                cof = szonyi_quotient(fld, U, y0)
                report.check(cof.degree == q - size, "cofactor degree wrong")
                target = Poly(fld, (0, fld.neg(1)) + (0,) * (q - 2) + (1,))
                report.check(cof.mul(f) == target,
                             "cofactor times slice is not x^q - x")
    for _ in range(max(trials, 1000) if trials else 0):
        g = Poly(fld, [rng.randrange(q) for _ in range(rng.randint(1, 5))] + [1])
        f = g.pow(fld.p)
        dec = pth_power_decompose(fld, f)
        report.check(dec.is_deriv_zero and dec.root == g,
                     "p-th power round trip failed")
    # derivative linearity and product rule
    for _ in range(200):
        f = Poly(fld, [rng.randrange(q) for _ in range(rng.randint(1, 6))])
        g = Poly(fld, [rng.randrange(q) for _ in range(rng.randint(1, 6))])
        report.check(f.add(g).derivative() == f.derivative().add(g.derivative()),
                     "derivative is not additive")
        lhs = f.mul(g).derivative()
        rhs = f.derivative().mul(g).add(f.mul(g.derivative()))
        report.check(lhs == rhs, "product rule failed")
    return report


@_timed
def verify_bounds(max_q: int = 121, time_limit: float = 60.0) -> SuiteReport:
    report = SuiteReport("bounds")
    for q, d in gp_instances(max_q):
        fld = _field_for(q)
        graph = build_paley_graph(fld, d)
        result = max_clique(graph, time_limit)
        report.check(result.optimal, f"search timed out on GP({q},{d})")
        bundle = bnd.best_bounds(q, d)
        for cert in bundle.certificates:
            if not cert.applicable:
                continue
            if cert.kind in ("upper", "exact"):
                report.check(result.size <= cert.value,
                             f"{cert.bound_name} upper bound violated on GP({q},{d}): "
                             f"omega={result.size} > {cert.value}")
            if cert.kind in ("lower", "exact"):
                report.check(result.size >= cert.value,
                             f"{cert.bound_name} lower bound violated on GP({q},{d}): "
                             f"omega={result.size} < {cert.value}")
            if cert.bound_name == "prop41":
                K = fld.subfield_elements(cert.witness["subfield_degree"])
                report.check(is_clique(graph, K),
                             f"certified subfield is not a clique in GP({q},{d})")
        if fld.e % 2 == 1:
            report.check(bnd.thm13_bound(q, d) <= max(bnd.trivial_bound(q), fld.p ** ((fld.e - 1) // 2)),
                         f"quadratic bound exceeds expectations at GP({q},{d})")
    # thm14 agrees with the general certifier on every admissible (p, d)
    for p in (3, 5, 7, 11, 13, 17, 19, 23, 29, 31):
        for d in divisors(p * p + p + 1):
            if d <= p:
                continue
            cert = bnd.thm14_certify(p, d)
            inner = bnd.prop41_certify(p**3, p, d)
            report.check(cert.value == inner.value == p and inner.applicable,
                         f"thm14/prop41 mismatch at p={p} d={d}")
    return report


@_timed
def verify_families(max_x: int = 100_000) -> SuiteReport:
    from .families import (counterexample_ex45, counterexample_ex46,
                           family_ex42, family_ex43, family_ex44,
                           FamilyInstance)

    report = SuiteReport("families")
    for p, m in ((7, 1), (13, 1)):
        inst = family_ex42(p, m)
        revalidated = bnd.prop41_certify(inst.q, inst.K_order, inst.d)
        report.check(revalidated.applicable and revalidated.value == inst.K_order,
                     f"ex42({p},{m}) does not revalidate")
    for p, s, t in ((3, 3, 2), (5, 3, 2)):
        inst = family_ex43(p, s, t)
        revalidated = bnd.prop41_certify(inst.q, inst.K_order, inst.d)
        report.check(revalidated.applicable and revalidated.value == inst.K_order,
                     f"ex43({p},{s},{t}) does not revalidate")
        report.check(inst.q < inst.d * inst.K_order * (inst.K_order + 1),
                     f"ex43({p},{s},{t}) violates the size condition")
    hits = 0
    for x in range(1, max_x + 1):
        p = 2 * x * x + x + 1
        report.check((4 * x * x + 3) * (x * x + x + 1) == p * p + p + 1,
                     f"divisor identity fails at x={x}")
        if x <= 30:
            outcome = family_ex44(x)
            if isinstance(outcome, FamilyInstance):
                hits += 1
                report.check(outcome.certificate.value == outcome.K_order,
                             f"ex44({x}) certificate value mismatch")
    report.check(hits > 0, "ex44 produced no prime instances for small x")
    e45 = counterexample_ex45(3)
    report.check(e45.small_d_certificate.applicable
                 and e45.small_d_certificate.value == 3
                 and e45.large_subfield_bundle.omega == 9
                 and not e45.failed_certificate.applicable,
                 "ex45(3) report is inconsistent")
    e46 = counterexample_ex46()
    report.check(not e46.certificate.applicable
                 and e46.certificate.details["i"]["holds"]
                 and e46.certificate.details["iii"]["holds"]
                 and not e46.certificate.details["ii"]["holds"]
                 and e46.true_bundle.omega == 125,
                 "ex46 report is inconsistent")
    return report


@_timed
def verify_corollaries(seed: int = 0, trials: int = 100) -> SuiteReport:
    from itertools import combinations

    report = SuiteReport("corollaries")
    rng = random.Random(seed)
    fld9 = build_field(3, 2)
    for A in combinations(range(9), 4):
        rep = cor23_check(fld9, A)
        report.check(rep.applicable and rep.holds and rep.lhs >= 5,
                     f"difference-set bound violated at A={A}")
    fld125 = build_field(5, 3)
    for _ in range(trials):
        A = _random_subset(rng, 125, 11)
        rep = cor15_check(fld125, A)
        report.check(rep.applicable and rep.holds,
                     f"quotient-set bound violated at A={sorted(A)}")
    fld27 = build_field(3, 3)
    for _ in range(trials):
        A = _random_subset(rng, 27, 10)
        rep = cor24_check(fld27, 1, A)
        report.check(rep.applicable and rep.holds,
                     f"subfield-dilate bound violated at A={sorted(A)}")
    return report


SUITES = {
    "field": verify_field,
    "arith": verify_arith,
    "graph": verify_graph,
    "directions": verify_directions,
    "redei": verify_redei,
    "bounds": verify_bounds,
    "corollaries": verify_corollaries,
    "families": verify_families,
}


def verify_all(seed: int = 0) -> list[SuiteReport]:
    reports = []
    for name, fn in SUITES.items():
        kwargs = {"seed": seed} if "seed" in fn.__wrapped__.__code__.co_varnames else {}
        reports.append(fn(**kwargs))
    return reports
