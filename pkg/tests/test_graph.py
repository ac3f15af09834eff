import itertools

import networkx as nx
import pytest
from hypothesis import given, settings

from localbox.graph import (
    Graph,
    GraphFormatError,
    INFINITY,
    VertexPartition,
    average_degree,
    clique_number,
    complement,
    cycle_graph,
    emit_graph,
    eulerian_orientation,
    girth,
    halfplus_orientation,
    max_independent_set_size,
    maximum_matching,
    multicyclic_free,
    parse_graph,
    path_graph,
    perfect_matching_graph,
    petersen_graph,
    star_graph,
)
from strategies import graphs


@given(graphs())
def test_graph6_round_trip(G):
    assert parse_graph(emit_graph(G, "graph6"), "graph6") == G


@given(graphs())
def test_edgelist_round_trip(G):
    assert parse_graph(emit_graph(G, "edgelist"), "edgelist", n=G.n) == G


@given(graphs(max_n=12))
def test_graph6_matches_networkx(G):
    ours = emit_graph(G, "graph6").strip()
    theirs = nx.to_graph6_bytes(G.to_networkx(), header=False).strip()
    assert ours == theirs


@pytest.mark.parametrize("text", [b"0 1\n1 x\n", b"0 0\n", b"-1 2\n"])
def test_bad_edgelist(text):
    with pytest.raises(GraphFormatError):
        parse_graph(text, "edgelist")


def test_bad_graph6():
    with pytest.raises(GraphFormatError):
        parse_graph(b"C~~~~", "graph6")


@pytest.mark.parametrize("G, expected", [
    (cycle_graph(3), 3),
    (cycle_graph(7), 7),
    (petersen_graph(), 5),
    (path_graph(6), INFINITY),
    (star_graph(4), INFINITY),
])
def test_girth(G, expected):
    assert girth(G) == expected


@given(graphs(max_n=9))
def test_girth_matches_networkx(G):
    g = nx.girth(G.to_networkx())
    assert girth(G) == g


@given(graphs(max_n=8))
@settings(max_examples=60, deadline=None)
def test_matching_size_matches_exhaustive(G):
    best = 0
    edges = sorted(G.edges)
    for r in range(len(edges), 0, -1):
        if any(len({x for e in c for x in e}) == 2 * r for c in itertools.combinations(edges, r)):
            best = r
            break
    assert len(maximum_matching(G).pairs) == best


@given(graphs(max_n=9))
def test_clique_is_independence_of_complement(G):
    assert clique_number(G) == max_independent_set_size(complement(G))
    assert clique_number(G) == max((len(c) for c in nx.find_cliques(G.to_networkx())), default=0)


@pytest.mark.parametrize("n", [4, 6, 10])
def test_perfect_matching_graph(n):
    M = maximum_matching(perfect_matching_graph(n))
    assert M.is_perfect


@pytest.mark.parametrize("G", [cycle_graph(5), complement(cycle_graph(7)), Graph(6, itertools.combinations(range(5), 2))])
def test_eulerian_orientation_balanced(G):
    O = eulerian_orientation(G)
    assert len(O.arcs) == G.m
    assert all(abs(o - i) == 0 for o, i in zip(O.outdegrees(), O.indegrees()))


@given(graphs(max_n=9))
def test_halfplus_orientation(G):
    O = halfplus_orientation(G)
    assert {tuple(sorted(a)) for a in O.arcs} == set(G.edges)
    for v, out in enumerate(O.outdegrees()):
        assert out <= G.degree(v) // 2 + 1


def test_multicyclic_free():
    assert multicyclic_free(cycle_graph(6))[0]
    theta = Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])
    assert not multicyclic_free(theta)[0]


def test_average_degree_exact():
    assert average_degree(petersen_graph()) == 3
    assert average_degree(path_graph(3)) == pytest.approx(4 / 3)


def test_vertex_partition_validation():
    P = VertexPartition.from_labels([0, 1, 1, 2], 3)
    assert P.union([1, 2]) == [1, 2, 3]
    with pytest.raises(ValueError):
        VertexPartition(3, (frozenset({0, 1}), frozenset({1, 2})))
