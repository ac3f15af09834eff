import random

import networkx as nx
import pytest
from hypothesis import given, settings

from localbox.boxrep import realize
from localbox.graph import Graph, PreconditionError, complement, cycle_graph, girth, path_graph, star_graph
from localbox.interval import (
    asteroidal_triple,
    chordless_cycle,
    diam3_cointerval,
    interval_color,
    is_chordal,
    is_cointerval,
    is_interval,
    is_tree,
    sparse_two_box,
    tree_two_box,
)
from strategies import atlas, graphs, is_interval_oracle, umbrella_free_order


def test_recognition_matches_ordering_search():
    for G in atlas(7):
        assert is_interval(G).is_interval == (umbrella_free_order(G) is not None), sorted(G.edges)


def test_recognition_matches_oracle_on_atlas():
    for G in atlas(7):
        res = is_interval(G)
        assert res.is_interval == is_interval_oracle(G), sorted(G.edges)
        if res.is_interval:
            assert res.model.graph() == G
            res.model.validate(G)


@given(graphs(max_n=10))
@settings(max_examples=150, deadline=None)
def test_certificates(G):
    res = is_interval(G)
    if res.is_interval:
        assert res.model.graph() == G
        return
    ob = res.obstruction
    if ob.kind == "chordless_cycle":
        cyc = ob.vertices
        assert len(cyc) >= 4
        sub = G.induced(cyc)
        assert all(d == 2 for d in sub.degrees()) and sub.is_connected()
    else:
        a, b, c = ob.vertices
        assert not (G.has_edge(a, b) or G.has_edge(b, c) or G.has_edge(a, c))
        assert asteroidal_triple(G) is not None


@given(graphs(max_n=10))
def test_chordal_matches_networkx(G):
    assert is_chordal(G) == nx.is_chordal(G.to_networkx())
    assert (chordless_cycle(G) is None) == is_chordal(G)


@pytest.mark.parametrize("n", [4, 5, 8])
def test_cycles_are_not_interval(n):
    res = is_interval(cycle_graph(n))
    assert not res.is_interval and res.obstruction.kind == "chordless_cycle"


def test_asteroidal_triple_tree():
    # subdivided claw: chordal, but its three leaves form an asteroidal triple
    T = Graph(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])
    res = is_interval(T)
    assert not res.is_interval and res.obstruction.kind == "asteroidal_triple"
    assert set(res.obstruction.vertices) == {2, 4, 6}


def test_girth5_cointerval_iff_small_diameter_forest():
    for G in atlas(7):
        if girth(G) < 5:
            continue
        forest_small = is_tree_forest_diam3(G)
        assert is_cointerval(G) == forest_small, sorted(G.edges)


def is_tree_forest_diam3(G):
    # at most one non-trivial component, a tree of diameter <= 3
    nx_g = G.to_networkx()
    comps = [c for c in nx.connected_components(nx_g) if len(c) > 1]
    if len(comps) > 1:
        return False
    if not comps:
        return True
    sub = nx_g.subgraph(comps[0])
    return nx.is_tree(sub) and nx.diameter(sub) <= 3


@given(graphs(max_n=12))
def test_interval_color_is_optimal(G):
    res = is_interval(G)
    if not res.is_interval:
        return
    cols = interval_color(G, res.model)
    assert all(cols[u] != cols[v] for u, v in G.edges)
    omega = max((len(c) for c in nx.find_cliques(G.to_networkx())), default=0)
    assert max(cols, default=0) == omega


@pytest.mark.parametrize("T", [star_graph(5), path_graph(4), Graph(6, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)])])
def test_diam3_cointerval(T):
    M = diam3_cointerval(T)
    assert complement(M.graph()) == T
    assert all(1 <= lo <= hi <= 2 * T.n for lo, hi in M.intervals)


def test_diam3_rejects_long_path():
    with pytest.raises(PreconditionError):
        diam3_cointerval(path_graph(5))


def random_tree(rng, n):
    return Graph(n, [(v, rng.randrange(v)) for v in range(1, n)])


@pytest.mark.parametrize("seed", range(10))
def test_tree_two_box(seed):
    rng = random.Random(seed)
    T = random_tree(rng, rng.randint(2, 40))
    assert is_tree(T)
    R = tree_two_box(T)
    assert realize(R) == T and R.max_locality <= 2


@pytest.mark.parametrize("seed", range(20))
def test_sparse_two_box(seed):
    # a random graph with no multicyclic component: a forest plus one chord per tree
    rng = random.Random(seed)
    n = rng.randint(3, 30)
    edges = set()
    for v in range(1, n):
        if rng.random() < 0.85:
            edges.add((rng.randrange(v), v))
    G = Graph(n, edges)
    for comp in G.components():
        if len(comp) >= 3 and rng.random() < 0.6:
            c = sorted(comp)
            for _ in range(20):
                u, v = rng.sample(c, 2)
                if not G.has_edge(u, v):
                    G = Graph(n, set(G.edges) | {(min(u, v), max(u, v))})
                    break
    R = sparse_two_box(G)
    assert realize(R) == G and R.max_locality <= 2


@pytest.mark.parametrize("n", range(3, 12))
def test_sparse_two_box_cycles(n):
    R = sparse_two_box(cycle_graph(n))
    assert realize(R) == cycle_graph(n) and R.max_locality <= 2
