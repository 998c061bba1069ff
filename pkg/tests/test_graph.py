import networkx as nx
import pytest

from gpaley.errors import PreconditionError
from gpaley.field import build_field
from gpaley.graph import (build_cyclotomic_graph, build_paley_graph,
                          enumerate_max_cliques, is_clique, max_clique)
from gpaley.verify import gp_instances


def _nx_graph(graph):
    g = nx.Graph()
    g.add_nodes_from(range(graph.q))
    for u in range(graph.q):
        for v in range(u + 1, graph.q):
            if graph.adjacency(u, v):
                g.add_edge(u, v)
    return g


def test_paley_degree_examples():
    assert build_paley_graph(build_field(3, 2), 2).degree == 4
    assert build_paley_graph(build_field(13, 1), 2).degree == 6
    assert build_paley_graph(build_field(3, 3), 13).degree == 2


def test_invalid_d_rejected():
    with pytest.raises(PreconditionError):
        build_paley_graph(build_field(13, 1), 5)  # 5 does not divide 6
    with pytest.raises(PreconditionError):
        build_paley_graph(build_field(3, 2), 1)


def test_cyclotomic_examples():
    fld = build_field(13, 1)
    g = build_cyclotomic_graph(fld, 6, frozenset({0, 3}))
    assert g.degree == 4
    with pytest.raises(PreconditionError):
        # -1 lands in class 2 for d = 4, so S != -S
        build_cyclotomic_graph(fld, 4, frozenset({0}))
    with pytest.raises(PreconditionError):
        build_cyclotomic_graph(fld, 6, frozenset())


def test_max_clique_examples():
    g9 = build_paley_graph(build_field(3, 2), 2)
    r = max_clique(g9)
    assert (r.size, r.witness, r.optimal) == (3, (0, 1, 2), True)

    g13 = build_paley_graph(build_field(13, 1), 2)
    r = max_clique(g13)
    assert (r.size, r.witness) == (3, (0, 1, 4))

    g27 = build_paley_graph(build_field(3, 3), 13)
    assert max_clique(g27).size == 3


def test_against_networkx_oracle():
    for q, d in gp_instances(125):
        graph = build_paley_graph(_field(q), d)
        result = max_clique(graph)
        cliques = list(nx.find_cliques(_nx_graph(graph)))
        best = max(len(c) for c in cliques)
        assert result.optimal
        assert result.size == best, (q, d)
        witnesses = sorted(tuple(sorted(c)) for c in cliques if len(c) == best)
        assert result.witness == witnesses[0], (q, d)


def _field(q):
    from gpaley.intutil import prime_power

    p, e = prime_power(q)
    return build_field(p, e)


def test_enumerate_max_cliques():
    g13 = build_paley_graph(build_field(13, 1), 2)
    all_cliques = enumerate_max_cliques(g13)
    nxg = _nx_graph(g13)
    best = max(len(c) for c in nx.find_cliques(nxg))
    expected = sorted(tuple(sorted(c)) for c in nx.find_cliques(nxg)
                      if len(c) == best)
    assert list(all_cliques) == expected

    through_01 = enumerate_max_cliques(g13, {0, 1})
    assert all({0, 1} <= set(c) for c in through_01)
    assert set(through_01) == {c for c in expected if {0, 1} <= set(c)}


def test_enumerate_requires_clique():
    g9 = build_paley_graph(build_field(3, 2), 2)
    with pytest.raises(PreconditionError):
        enumerate_max_cliques(g9, {0, 4})  # 4 is a non-residue offset from 0


def test_is_clique():
    g27 = build_paley_graph(build_field(3, 3), 13)
    assert is_clique(g27, {0, 1, 2})
    assert not is_clique(g27, {0, 1, 2, 3})
    fld81 = build_field(3, 4)
    g81 = build_paley_graph(fld81, 10)
    assert is_clique(g81, fld81.subfield_elements(2))


def test_subfield_lower_bound_property():
    from gpaley.bounds import subfield_clique_orders

    for q, d in gp_instances(81):
        graph = build_paley_graph(_field(q), d)
        size = max_clique(graph).size
        for k in subfield_clique_orders(q, d):
            assert size >= k


def test_timeout_returns_partial():
    graph = build_paley_graph(build_field(19, 2), 2)
    result = max_clique(graph, time_limit=0.0)
    assert not result.optimal
    assert is_clique(graph, result.witness)


def test_witness_is_clique_invariant():
    for q, d in gp_instances(49):
        graph = build_paley_graph(_field(q), d)
        result = max_clique(graph)
        assert len(result.witness) == result.size
        assert is_clique(graph, result.witness)
