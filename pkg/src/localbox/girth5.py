"""Complements of k-regular graphs of girth at least five.

Covers of the complement X by trees of diameter at most 3 (stars of
in-edges under an orientation, or double stars around matching edges)
turn into local box representations, because such trees are exactly the
co-interval graphs of girth >= 5.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .boxrep import CoIntervalCover, CoverPart, Representation, from_cover, verify
from .graph import (
    Graph,
    PreconditionError,
    average_degree,
    complement,
    eulerian_orientation,
    girth,
    halfplus_orientation,
    maximum_matching,
)
from .interval import diam3_cointerval


class HypothesisError(PreconditionError):
    pass


@dataclass(frozen=True)
class Gcreg5Instance:
    G: Graph
    k: int
    girth_ok: bool
    has_pm: bool


def avgdeg_lower(G: Graph) -> int:
    """floor(ad(G^c)/2 + 1), valid when G^c has girth >= 5."""
    X = complement(G)
    if X.m == 0:
        raise HypothesisError("complement has no edges (complete graph, local boxicity 0)")
    g = girth(X)
    if g < 5:
        raise HypothesisError(f"complement has girth {g} < 5")
    return math.floor(average_degree(X) / 2 + 1)


def gcreg_instance(G: Graph) -> Gcreg5Instance:
    X = complement(G)
    degs = set(X.degrees())
    if len(degs) != 1:
        raise HypothesisError(f"complement is not regular (degrees {sorted(degs)})")
    k = degs.pop()
    if k == 0:
        raise HypothesisError("complement has no edges")
    g = girth(X)
    if g < 5:
        raise HypothesisError(f"complement has girth {g} < 5")
    has_pm = k % 2 == 0 or maximum_matching(X).is_perfect
    return Gcreg5Instance(G, k, True, has_pm)


def claimed_value(inst: Gcreg5Instance) -> int:
    if inst.k % 2 == 0 or inst.has_pm:
        return inst.k // 2 + 1
    return (inst.k + 3) // 2


def tree_cover(inst: Gcreg5Instance) -> list[frozenset[tuple[int, int]]]:
    """Edge sets of the covering trees, in a fixed order."""
    X = complement(inst.G)
    trees = []
    if inst.k % 2 == 0 or not inst.has_pm:
        ori = eulerian_orientation(X) if inst.k % 2 == 0 else halfplus_orientation(X)
        for v in range(X.n):
            ins = ori.in_neighbours(v)
            if ins:
                trees.append(frozenset((min(u, v), max(u, v)) for u in ins))
        return trees
    M = maximum_matching(X)
    rest = Graph(X.n, X.edges - M.pairs)
    ins = {v: [] for v in range(X.n)}
    if rest.m:
        ori = eulerian_orientation(rest)
        ins = {v: ori.in_neighbours(v) for v in range(X.n)}
    for u, v in sorted(M.pairs):
        es = {(u, v)}
        es |= {(min(w, u), max(w, u)) for w in ins[u]}
        es |= {(min(w, v), max(w, v)) for w in ins[v]}
        trees.append(frozenset(es))
    return trees


def _tree_model(edges: frozenset[tuple[int, int]]) -> dict[int, tuple[int, int]]:
    vs = sorted({x for e in edges for x in e})
    idx = {v: i for i, v in enumerate(vs)}
    T = Graph(len(vs), ((idx[a], idx[b]) for a, b in edges))
    model = diam3_cointerval(T)  # raises unless T is a tree of diameter <= 3
    return {v: model[idx[v]] for v in vs}


@dataclass(frozen=True)
class GcregResult:
    representation: Representation
    value: int
    instance: Gcreg5Instance
    cover: CoIntervalCover


def gcreg_rep(G: Graph) -> GcregResult:
    inst = gcreg_instance(G)
    trees = tree_cover(inst)
    X = complement(G)
    cover = CoIntervalCover(X, tuple(CoverPart.from_edges(t) for t in trees))
    models = [_tree_model(t) for t in trees]
    R = from_cover(cover, models)
    value = claimed_value(inst)
    rep = verify(R, G, value)
    if not rep.ok:
        raise AssertionError(f"tree-cover representation fails at {value}: {rep.first_violation}")
    return GcregResult(R, value, inst, cover)


@dataclass(frozen=True)
class GcregValue:
    value: int
    upper: Representation
    lower_witness: str


def gcreg_value(G: Graph) -> GcregValue:
    res = gcreg_rep(G)
    inst = res.instance
    lb = avgdeg_lower(G)
    if inst.k % 2 == 0 or inst.has_pm:
        why = (f"complement is {inst.k}-regular with girth >= 5, average degree {inst.k}: "
               f"lower bound floor({inst.k}/2 + 1) = {lb}")
    else:
        why = (f"complement is {inst.k}-regular (k odd) with girth >= 5 and no perfect matching: "
               f"lower bound (k+3)/2 = {(inst.k + 3) // 2}")
    return GcregValue(res.value, res.representation, why)
