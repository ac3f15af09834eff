"""Random graphs: sampling, the multicyclic-component Monte Carlo, and the
partition-into-sparse-pairs representation pipeline."""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .boxrep import Representation, points_representation, verify
from .compose import complete_graph_steiner, compose
from .graph import Graph, VertexPartition, multicyclic_free
from .interval import sparse_two_box


@dataclass(frozen=True)
class GnpSample:
    n: int
    p: float
    seed: int | None
    graph: Graph


def _pairs(n: int) -> tuple[np.ndarray, np.ndarray]:
    return np.triu_indices(n, 1)


def _sample_edges(n: int, p: float, rng: np.random.Generator) -> tuple[np.ndarray, np.ndarray]:
    us, vs = _pairs(n)
    keep = rng.random(us.size) < p
    return us[keep], vs[keep]


def sample_gnp(n: int, p: float, seed=None) -> GnpSample:
    """Every pair independently an edge with probability p."""
    if not 0 <= p <= 1:
        raise ValueError(f"p={p} is not a probability")
    us, vs = _sample_edges(n, p, np.random.default_rng(seed))
    return GnpSample(n, p, seed, Graph(n, zip(us.tolist(), vs.tolist())))


def _has_multicyclic(n: int, us: np.ndarray, vs: np.ndarray) -> bool:
    """Union-find: some component has more edges than vertices."""
    parent = list(range(n))
    extra = [0] * n  # edges minus (vertices - 1), tracked at the root

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in zip(us.tolist(), vs.tolist()):
        a, b = find(u), find(v)
        if a == b:
            extra[a] += 1
            if extra[a] >= 2:
                return True
        else:
            parent[b] = a
            extra[a] += extra[b]
            if extra[a] >= 2:
                return True
    return False


@dataclass(frozen=True)
class MulticyclicEstimate:
    n: int
    c: float
    trials: int
    hits: int
    empirical: float
    bound: float
    sigma: float

    def csv_row(self) -> str:
        return f"{self.n},{self.c},{self.trials},{self.empirical:.6f},{self.bound:.6f},{self.sigma:.6f}"

    @property
    def within(self) -> bool:
        return self.empirical <= self.bound + 3 * self.sigma


CSV_HEADER = "n,c,trials,empirical,bound,sigma"


def multicyclic_bound(n: int, c: float) -> float:
    """2 / ((1-c)^3 n)."""
    return 2 / ((1 - c) ** 3 * n)


def multicyclic_mc(n: int, c: float, trials: int, seed=None) -> MulticyclicEstimate:
    """Frequency of a multicyclic component in G(n, c/n)."""
    if c >= 1 or c < 0:
        raise ValueError(f"c={c} must lie in [0, 1)")
    if n < 1 or trials < 1:
        raise ValueError("n and trials must be positive")
    p = c / n
    hits = 0
    for child in np.random.SeedSequence(seed).spawn(trials):
        us, vs = _sample_edges(n, p, np.random.default_rng(child))
        hits += _has_multicyclic(n, us, vs)
    bound = multicyclic_bound(n, c)
    b = min(bound, 1.0)
    return MulticyclicEstimate(n, c, trials, hits, hits / trials, bound, math.sqrt(b * (1 - b) / trials))


class PipelineFailure(RuntimeError):
    def __init__(self, message: str, pair: tuple[int, int] | None, attempts: int):
        super().__init__(message)
        self.pair = pair
        self.attempts = attempts


@dataclass(frozen=True)
class GnpRepResult:
    representation: Representation
    locality: int
    classes: int
    attempts: int
    bound: int


def class_count(np_: float, epsilon: float) -> int:
    return max(1, math.ceil(2 * (1 + epsilon) * np_))


def gnp_rep(G: Graph, np_: float, epsilon: float, seed=None, max_retries: int = 5) -> GnpRepResult:
    """Random partition into ceil(2(1+eps) np) classes such that every pair
    of classes spans a graph without multicyclic components; each pair gets a
    2-box representation and the pairs are glued along the edges of K_ell."""
    if G.m == 0:
        R = points_representation(G.n)
        return GnpRepResult(R, R.max_locality, 1, 0, R.max_locality)
    ell = class_count(np_, epsilon)
    if ell == 1:
        ok, _ = multicyclic_free(G)
        if not ok:
            raise PipelineFailure("single class has a multicyclic component", (0, 0), 1)
        R = sparse_two_box(G)
        return GnpRepResult(R, R.max_locality, 1, 1, 2)
    offending = None
    for attempt, child in enumerate(np.random.SeedSequence(seed).spawn(max_retries), start=1):
        labels = np.random.default_rng(child).integers(0, ell, G.n)
        P = VertexPartition.from_labels(labels, ell)
        offending = next((pr for pr in combinations(range(ell), 2)
                          if not multicyclic_free(G.induced(P.union(pr)))[0]), None)
        if offending is None:
            break
    else:
        raise PipelineFailure(f"classes {offending} still span a multicyclic component after "
                              f"{max_retries} partitions", offending, max_retries)
    S = complete_graph_steiner(ell)
    reps = [sparse_two_box(G.induced(P.union(blk))) for blk in S.blocks]
    R = compose(G, P, S, reps)
    bound = 2 * (ell - 1)
    rep = verify(R, G, bound)
    if not rep.ok:
        raise AssertionError(f"pipeline output fails verification: {rep.first_violation}")
    return GnpRepResult(R, R.max_locality, ell, attempt, bound)
