"""Generalized Paley and cyclotomic Cayley graphs with exact clique search.

Vertices are element encodings 0..q-1.  Adjacency is defined by a symmetric
connection set S of the additive Cayley graph and stored as a single bitset;
neighbourhood rows are materialized lazily (each row costs O(|S|) additions),
which keeps large-order graphs cheap as long as no global search runs.
"""
from __future__ import annotations

import time
from dataclasses import dataclass

from .errors import PreconditionError
from .field import Field

DEFAULT_TIME_LIMIT = 60.0
_LEX_NODE_BUDGET = 400_000


@dataclass(frozen=True)
class CliqueResult:
    size: int
    witness: tuple[int, ...]
    optimal: bool
    nodes: int
    seconds: float

    def to_json(self) -> dict:
        return {
            "size": self.size,
            "witness": list(self.witness),
            "optimal": self.optimal,
            "nodes": self.nodes,
            "seconds": round(self.seconds, 6),
        }


class Graph:
    """Cayley graph on (F_q, +) with connection set a union of power-residue
    cosets.  Immutable once built; row bitsets are cached on first use."""

    def __init__(self, field: Field, d: int, index_set: frozenset[int],
                 connection: list[int]):
        self.field = field
        self.d = d
        self.index_set = index_set
        self.connection = tuple(connection)
        self.degree = len(connection)
        bits = 0
        for s in connection:
            bits |= 1 << s
        self._S_bits = bits
        self._rows: dict[int, int] = {}

    @property
    def q(self) -> int:
        return self.field.q

    def adjacency(self, u: int, v: int) -> bool:
        if u == v:
            return False
        return (self._S_bits >> self.field.sub(v, u)) & 1 == 1

    def row(self, u: int) -> int:
        """Bitset of neighbours of u."""
        cached = self._rows.get(u)
        if cached is None:
            add = self.field.add
            cached = 0
            for s in self.connection:
                cached |= 1 << add(u, s)
            self._rows[u] = cached
        return cached

    def to_json(self) -> dict:
        return {
            "p": self.field.p,
            "e": self.field.e,
            "q": self.q,
            "d": self.d,
            "I": sorted(self.index_set),
            "degree": self.degree,
        }


def build_cyclotomic_graph(field: Field, d: int, index_set) -> Graph:
    """Cayley graph whose connection set is the union of the cosets g^i * H,
    i in the index set, H the d-th powers of the unit group."""
    q = field.q
    if d < 1 or (q - 1) % d:
        raise PreconditionError(f"d = {d} does not divide q-1 = {q - 1}")
    I = frozenset(i % d for i in index_set)
    if not I:
        raise PreconditionError("index set must be nonempty")
    connection = [a for a in range(1, q) if field.dth_class(a, d) in I]
    bits = 0
    for s in connection:
        bits |= 1 << s
    for s in connection:
        if not (bits >> field.neg(s)) & 1:
            raise PreconditionError("connection set is not symmetric (S != -S)")
    graph = Graph(field, d, I, connection)
    assert graph.degree == len(I) * (q - 1) // d
    return graph


def build_paley_graph(field: Field, d: int) -> Graph:
    """GP(q, d): u ~ v iff v - u is a nonzero d-th power."""
    q = field.q
    if d <= 1:
        raise PreconditionError("d must exceed 1")
    if (q - 1) % (2 * d):
        raise PreconditionError(f"d = {d} does not divide (q-1)/2 = {(q - 1) // 2}")
    return build_cyclotomic_graph(field, d, {0})


def is_clique(graph: Graph, vertices) -> bool:
    vs = sorted(set(vertices))
    for i, u in enumerate(vs):
        for v in vs[i + 1:]:
            if not graph.adjacency(u, v):
                return False
    return True


# ---------------------------------------------------------------------------
# branch and bound


def _color_order(P: int, rows: list[int]) -> tuple[list[int], list[int]]:
    """Greedy colouring of the candidate set; returns vertices in
    nondecreasing colour order with their colour numbers."""
    order: list[int] = []
    bounds: list[int] = []
    color = 0
    uncolored = P
    while uncolored:
        color += 1
        avail = uncolored
        while avail:
            b = avail & -avail
            v = b.bit_length() - 1
            avail &= ~rows[v] & ~b
            uncolored &= ~b
            order.append(v)
            bounds.append(color)
    return order, bounds


class _Search:
    """Max-clique branch and bound over reduced-index bitset rows."""

    def __init__(self, rows: list[int], deadline: float | None):
        self.rows = rows
        self.deadline = deadline
        self.best_size = 0
        self.best_bits = 0
        self.nodes = 0
        self.timed_out = False

    def run(self, P: int, base_size: int) -> None:
        self.best_size = base_size - 1
        if self.deadline is not None and time.monotonic() > self.deadline:
            self.timed_out = True
        else:
            self._expand(0, base_size, P)
        if self.best_size < base_size:
            self.best_size, self.best_bits = base_size, 0

    def _expand(self, rbits: int, rsize: int, P: int) -> None:
        self.nodes += 1
        if self.deadline is not None and self.nodes % 256 == 0:
            if time.monotonic() > self.deadline:
                self.timed_out = True
        if self.timed_out:
            return
        if not P:
            if rsize > self.best_size:
                self.best_size = rsize
                self.best_bits = rbits
            return
        rows = self.rows
        order, bounds = _color_order(P, rows)
        for i in range(len(order) - 1, -1, -1):
            if self.timed_out:
                return
            if rsize + bounds[i] <= self.best_size:
                return
            v = order[i]
            self._expand(rbits | (1 << v), rsize + 1, P & rows[v])
            P &= ~(1 << v)


class _BudgetExhausted(Exception):
    pass


def _lex_least_clique(graph: Graph, k: int, budget: int = _LEX_NODE_BUDGET):
    """Lexicographically least k-clique, or None if the node budget runs out.

    DFS in ascending vertex order; the first complete clique found is the
    lexicographic minimum.  The budget is a node count, so the outcome is
    deterministic.
    """
    remaining = [budget]

    def dfs(P: int, need: int, acc: list[int]):
        if need == 0:
            return acc
        while P:
            remaining[0] -= 1
            if remaining[0] < 0:
                raise _BudgetExhausted
            b = P & -P
            v = b.bit_length() - 1
            P ^= b
            if P.bit_count() + 1 < need:
                return None
            sub = P & graph.row(v)
            if sub.bit_count() >= need - 1:
                got = dfs(sub, need - 1, acc + [v])
                if got is not None:
                    return got
        return None

    try:
        return dfs((1 << graph.q) - 1, k, [])
    except _BudgetExhausted:
        return None


def max_clique(graph: Graph, time_limit: float = DEFAULT_TIME_LIMIT) -> CliqueResult:
    """Exact clique number with witness.

    For GP(q, d) every edge maps onto (0, 1) by x -> (x-u)(v-u)^{-1} (the
    connection set is closed under multiplication by d-th powers), so the
    search runs on the common neighbourhood of {0, 1}.  For a general index
    set only translation is available, fixing vertex 0.  If the time limit
    is hit, the best clique found so far is returned with optimal=False.
    """
    start = time.monotonic()
    deadline = start + time_limit
    if graph.index_set == frozenset({0}):
        base = [0, 1]
        P0 = graph.row(0) & graph.row(1)
    else:
        base = [0]
        P0 = graph.row(0)

    reduced: list[int] = []
    bits = P0
    while bits:
        b = bits & -bits
        reduced.append(b.bit_length() - 1)
        bits ^= b
    index = {u: i for i, u in enumerate(reduced)}
    rrows = []
    for u in reduced:
        ru = graph.row(u) & P0
        row_bits = 0
        while ru:
            b = ru & -ru
            row_bits |= 1 << index[b.bit_length() - 1]
            ru ^= b
        rrows.append(row_bits)

    search = _Search(rrows, deadline)
    search.run((1 << len(reduced)) - 1, len(base))
    size = search.best_size
    witness = list(base)
    wbits = search.best_bits
    while wbits:
        b = wbits & -wbits
        witness.append(reduced[b.bit_length() - 1])
        wbits ^= b
    optimal = not search.timed_out
    if optimal:
        lex = _lex_least_clique(graph, size)
        if lex is not None:
            witness = lex
    return CliqueResult(
        size=size,
        witness=tuple(sorted(witness)),
        optimal=optimal,
        nodes=search.nodes,
        seconds=time.monotonic() - start,
    )


def enumerate_max_cliques(graph: Graph, required=(),
                          time_limit: float = DEFAULT_TIME_LIMIT) -> list[tuple[int, ...]]:
    """All maximum cliques containing the required vertices, sorted."""
    req = sorted(set(required))
    if not is_clique(graph, req):
        raise PreconditionError("required vertices do not form a clique")
    result = max_clique(graph, time_limit)
    if not result.optimal:
        raise PreconditionError("clique number not certified within the time limit")
    omega = result.size
    if len(req) > omega:  # unreachable: req is a clique
        return []
    P = (1 << graph.q) - 1
    for v in req:
        P &= graph.row(v)
    found: list[tuple[int, ...]] = []

    def dfs(P: int, need: int, acc: list[int]) -> None:
        if need == 0:
            found.append(tuple(sorted(req + acc)))
            return
        while P:
            if P.bit_count() < need:
                return
            b = P & -P
            v = b.bit_length() - 1
            P ^= b
            dfs(P & graph.row(v), need - 1, acc + [v])

    dfs(P, omega - len(req), [])
    return sorted(found)
