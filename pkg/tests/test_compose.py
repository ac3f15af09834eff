import math
import random

import pytest
from sympy import primerange

from localbox.boxrep import realize, verify
from localbox.compose import (
    CompositionError,
    DriverRefused,
    PRIME_THRESHOLD,
    SteinerSystem,
    affine_plane,
    alpha,
    balanced_partition,
    complete_graph_steiner,
    compose,
    is_prime,
    lbox_by_degree,
    lbox_by_edges,
    prime_in_window,
    prime_square_in_window,
    prime_square_window,
    prime_window,
    trivial_steiner,
    verify_steiner,
)
from localbox.exact import lbox_exact
from localbox.graph import Graph, VertexPartition, complete_graph, cycle_graph, empty_graph, star_graph
from localbox.graph import PreconditionError


@pytest.mark.parametrize("q", [2, 3, 5, 7])
def test_affine_plane(q):
    S = affine_plane(q)
    assert verify_steiner(S)
    assert S.replication == q + 1
    assert SteinerSystem.from_text(S.to_text()) == S


def test_affine_plane_needs_prime():
    with pytest.raises(PreconditionError):
        affine_plane(4)


def test_verify_steiner_catches_missing_pair():
    S = complete_graph_steiner(5)
    broken = SteinerSystem(5, 2, 2, S.blocks[1:])
    assert not verify_steiner(broken)
    assert verify_steiner(trivial_steiner(6))


def test_is_prime_against_sieve():
    sieve = set(primerange(0, 5000))
    assert all(is_prime(q) == (q in sieve) for q in range(5000))


def test_prime_windows():
    assert prime_in_window(PRIME_THRESHOLD) == 3299
    lo, hi = prime_window(PRIME_THRESHOLD)
    assert lo <= 3299 <= hi
    t = PRIME_THRESHOLD ** 2
    q = prime_square_in_window(t)
    lo, hi = prime_square_window(t)
    assert is_prime(q) and lo <= q * q <= hi


def test_prime_window_refuses_small_t():
    with pytest.raises(PreconditionError):
        prime_in_window(100)


def block_reps(G, P, S):
    return [lbox_exact(G.induced(P.union(b))).certificate for b in S.blocks]


@pytest.mark.parametrize("seed", range(6))
def test_compose_on_complete_graph_systems(seed):
    rng = random.Random(seed)
    n = rng.randint(4, 12)
    G = Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.5])
    s = rng.randint(2, 4)
    P = VertexPartition.from_labels([rng.randrange(s) for _ in range(n)], s)
    S = complete_graph_steiner(s)
    reps = block_reps(G, P, S)
    R = compose(G, P, S, reps)
    assert realize(R) == G
    assert R.max_locality <= (s - 1) * max(r.max_locality for r in reps)


def test_compose_rejects_mismatched_blocks():
    G = cycle_graph(6)
    P = VertexPartition.from_labels([0, 0, 1, 1, 2, 2], 3)
    S = complete_graph_steiner(3)
    reps = block_reps(G, P, S)
    with pytest.raises(CompositionError):
        compose(G, P, S, reps[:-1])
    with pytest.raises(CompositionError):
        compose(G, P, S, [reps[1], reps[0], reps[2]])


def test_balanced_partition():
    rng = random.Random(3)
    n = 60
    G = Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.3])
    res = balanced_partition(G, 2, slack=1.0, seed=5)
    assert res.ok and res.violations == 0
    assert sorted(v for c in res.partition.classes for v in c) == list(range(n))


def test_alpha_product():
    a = alpha(1e6)
    assert 0 < a.value < 1 and a.tail_bound <= 1e-15
    direct = 1.0
    L = math.log(1e6) ** 2
    for i in range(1, 200):
        direct /= 1 + 18 * (4 / 9) ** i / L
    assert a.value == pytest.approx(direct, rel=1e-12)


@pytest.mark.parametrize("G, expected", [
    (complete_graph(6), 0),
    (empty_graph(5), 1),
    (star_graph(9), 1),
    (cycle_graph(5), 2),
])
def test_driver_small_cases(G, expected):
    res = lbox_by_degree(G, seed=0)
    assert res.locality == expected
    assert verify(res.representation, G, expected).ok


def test_driver_partition_path():
    n = 40
    # 4-regular circulant
    G = Graph(n, [(v, (v + j) % n) for v in range(n) for j in (1, 2)])
    res = lbox_by_degree(G, q_override=2, seed=7)
    assert realize(res.representation) == G
    assert res.locality == res.representation.max_locality
    assert res.trace


def test_driver_refuses_without_prime():
    G = Graph(12, [(v, (v + 1) % 12) for v in range(12)] + [(v, (v + 5) % 12) for v in range(12)])
    with pytest.raises(DriverRefused):
        lbox_by_degree(G, seed=0, exact_cutoff=8)


def test_edges_driver_adds_high_degree_vertices():
    G = Graph(10, [(0, v) for v in range(1, 10)] + [(1, 2), (3, 4)])
    res = lbox_by_edges(G, seed=0)
    assert realize(res.representation) == G
