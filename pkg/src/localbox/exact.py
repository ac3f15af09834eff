"""Exact solvers for small graphs: local boxicity, boxicity, chromatic number.

Both box parameters are computed through covers of the complement X = G^c
by co-interval subgraphs.  A co-interval subgraph of X[U] with all of U
non-isolated is the complement, inside U, of an interval supergraph of
G[U]; every interval supergraph contains the completion of G[U] along one
of its interval orderings, so it is enough to consider the completions
along every ordering of U.  Those are enumerated by a dynamic program over
the set of already placed vertices, keeping only inclusion-maximal partial
edge sets.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .boxrep import (
    CoIntervalCover,
    CoverPart,
    Representation,
    empty_representation,
    from_cover,
    points_representation,
    verify,
)
from .graph import Graph, average_degree, complement, girth


class BudgetExceeded(Exception):
    pass


@dataclass(frozen=True)
class SolveResult:
    value: int | None
    certificate: object
    lower_bound_witness: str
    status: str = "exact"  # or "unknown"
    lower: int = 0

    @property
    def solved(self) -> bool:
        return self.status == "exact"


class _Clock:
    def __init__(self, budget: float | None):
        self.deadline = None if budget is None else time.monotonic() + budget
        self.ticks = 0

    def tick(self) -> None:
        self.ticks += 1
        if self.deadline is not None and self.ticks & 1023 == 0 and time.monotonic() > self.deadline:
            raise BudgetExceeded


def _bits(mask: int) -> Iterable[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _keep_maximal(masks: Iterable[int]) -> list[int]:
    out: list[int] = []
    for f in sorted(set(masks), key=lambda x: -x.bit_count()):
        if not any(f & ~g == 0 for g in out):
            out.append(f)
    return out


class _EdgeIndex:
    """Edges of X numbered in lexicographic order, as bitmasks."""

    def __init__(self, X: Graph):
        self.edges = X.sorted_edges()
        self.index = {e: i for i, e in enumerate(self.edges)}
        self.at = [0] * X.n  # edge bits incident to each vertex
        for i, (u, v) in enumerate(self.edges):
            self.at[u] |= 1 << i
            self.at[v] |= 1 << i
        self.pair = {}
        for (u, v), i in self.index.items():
            self.pair[u, v] = self.pair[v, u] = 1 << i

    def to_pairs(self, mask: int) -> list[tuple[int, int]]:
        return [self.edges[i] for i in _bits(mask)]


def maximal_cointerval_parts(G: Graph, U: int, ex: _EdgeIndex, clock: _Clock | None = None) -> list[int]:
    """Inclusion-maximal co-interval subgraphs of X[U] (edge bitmasks)."""
    verts = list(_bits(U))
    nbr = {v: G.adj[v] & U for v in verts}
    xnbr = {v: [u for u in verts if u != v and (u, v) in ex.pair] for v in verts}
    layer = {0: [0]}
    for _ in range(len(verts)):
        nxt: dict[int, list[int]] = {}
        for P, fams in layer.items():
            closed = [u for u in _bits(P) if nbr[u] & ~P == 0]
            for v in verts:
                if P >> v & 1:
                    continue
                add = 0
                for u in closed:
                    if u in xnbr[v]:
                        add |= ex.pair[u, v]
                if clock is not None:
                    clock.tick()
                nxt.setdefault(P | 1 << v, []).extend(f | add for f in fams)
        layer = {P: _keep_maximal(fs) for P, fs in nxt.items()}
    return layer.get(U, [])


def _touches(mask: int, ex: _EdgeIndex) -> int:
    out = 0
    for i in _bits(mask):
        u, v = ex.edges[i]
        out |= 1 << u | 1 << v
    return out


def local_parts(G: Graph, ex: _EdgeIndex, clock: _Clock | None = None) -> list[tuple[int, int]]:
    """(support, edges) for every candidate part of a local cover."""
    parts = []
    n = G.n
    X_adj = [0] * n
    for u, v in ex.edges:
        X_adj[u] |= 1 << v
        X_adj[v] |= 1 << u
    for U in range(1, 1 << n):
        if U.bit_count() < 2:
            continue
        # every vertex of U needs an X-neighbour inside U
        if any(X_adj[v] & U == 0 for v in _bits(U)):
            continue
        for f in maximal_cointerval_parts(G, U, ex, clock):
            if _touches(f, ex) == U:
                parts.append((U, f))
    return parts


def _search_local(n: int, ex: _EdgeIndex, parts: list[tuple[int, int]], d: int,
                  clock: _Clock) -> list[int] | None:
    """Indices of parts covering all edges with every load <= d, or None."""
    full = (1 << len(ex.edges)) - 1
    by_edge = [[] for _ in ex.edges]
    for i, (U, f) in enumerate(parts):
        for e in _bits(f):
            by_edge[e].append(i)
    for lst in by_edge:
        lst.sort(key=lambda i: (-parts[i][1].bit_count(), parts[i][0].bit_count(), i))
    failed: set = set()

    def rec(uncovered: int, loads: tuple[int, ...]) -> list[int] | None:
        if not uncovered:
            return []
        key = (uncovered, loads)
        if key in failed:
            return None
        clock.tick()
        for v in range(n):
            if loads[v] >= d and ex.at[v] & uncovered:
                failed.add(key)
                return None
        low = uncovered & -uncovered
        e = low.bit_length() - 1
        cands = []
        for i in by_edge[e]:
            U, f = parts[i]
            if all(loads[v] < d for v in _bits(U)):
                cands.append(i)
        # drop candidates dominated on the uncovered edges by one with smaller support
        kept = []
        for i in cands:
            U, f = parts[i]
            fu = f & uncovered
            if any(parts[j][0] & ~U == 0 and fu & ~parts[j][1] == 0 for j in kept):
                continue
            kept.append(i)
        for i in kept:
            U, f = parts[i]
            nl = list(loads)
            for v in _bits(U):
                nl[v] += 1
            sub = rec(uncovered & ~f, tuple(nl))
            if sub is not None:
                return [i] + sub
        failed.add(key)
        return None

    return rec(full, (0,) * n)


def _cover_from(G: Graph, ex: _EdgeIndex, X: Graph, chosen: list[tuple[int, int]]) -> CoIntervalCover:
    return CoIntervalCover(X, tuple(CoverPart.from_edges(ex.to_pairs(f)) for _, f in chosen))


def girth5_lower_bound(G: Graph) -> int | None:
    """floor(ad(G^c)/2 + 1) when the complement has girth at least 5."""
    X = complement(G)
    if X.m == 0 or girth(X) < 5:
        return None
    return math.floor(average_degree(X) / 2 + 1)


def _local_solve(G: Graph, d_from: int, d_to: int | None, budget: float | None,
                 use_degree_bound: bool) -> SolveResult:
    X = complement(G)
    if X.m == 0:
        return SolveResult(0, empty_representation(G.n), "complete graph: nothing to cover", lower=0)
    if G.m == 0:
        # every pair must be separated; distinct points on one line do it
        R = points_representation(G.n)
        return SolveResult(1, R, "the complement has edges, so at least one dimension is needed", lower=1)
    clock = _Clock(budget)
    ex = _EdgeIndex(X)
    lower, why = 1, "the complement has edges, so some vertex is local somewhere"
    if use_degree_bound:
        tb = girth5_lower_bound(G)
        if tb is not None and tb > lower:
            lower = tb
            why = f"complement has girth >= 5 and average degree {average_degree(X)}: bound {tb}"
    d = max(lower, d_from)
    try:
        parts = local_parts(G, ex, clock)
        while d_to is None or d <= d_to:
            found = _search_local(G.n, ex, parts, d, clock)
            if found is not None:
                chosen = [parts[i] for i in found]
                R = from_cover(_cover_from(G, ex, X, chosen))
                rep = verify(R, G, d)
                if not rep.ok:
                    raise AssertionError(f"certificate failed verification: {rep.first_violation}")
                if d > lower:
                    why = f"exhaustive search over {len(parts)} maximal parts: no cover with load <= {d - 1}"
                return SolveResult(d, R, why, lower=d)
            lower, why = d + 1, f"exhaustive search over {len(parts)} maximal parts: no cover with load <= {d}"
            d += 1
        return SolveResult(None, None, why, status="infeasible", lower=lower)
    except BudgetExceeded:
        return SolveResult(None, None, f"time budget exceeded; value >= {lower} ({why})",
                           status="unknown", lower=lower)


def lbox_exact(G: Graph, budget: float | None = None, use_degree_bound: bool = True) -> SolveResult:
    """Local boxicity by iterative deepening on the per-vertex load."""
    return _local_solve(G, 0, None, budget, use_degree_bound)


def lbox_at_most(G: Graph, d: int, budget: float | None = None) -> tuple[bool | None, Representation | None]:
    """Decision version; (None, None) if the budget runs out."""
    if d < 0:
        return False, None
    res = _local_solve(G, 0, d, budget, use_degree_bound=True)
    if res.status == "unknown":
        return None, None
    if res.value is not None and res.value <= d:
        return True, res.certificate
    return False, None


# -- boxicity ---------------------------------------------------------------------

def _search_global(ex: _EdgeIndex, parts: list[int], k: int, clock: _Clock) -> list[int] | None:
    full = (1 << len(ex.edges)) - 1
    by_edge = [[i for i, f in enumerate(parts) if f >> e & 1] for e in range(len(ex.edges))]
    widest = max((f.bit_count() for f in parts), default=0)
    failed: set = set()

    def rec(uncovered: int, left: int) -> list[int] | None:
        if not uncovered:
            return []
        if left == 0 or uncovered.bit_count() > left * widest or (uncovered, left) in failed:
            return None
        clock.tick()
        e = (uncovered & -uncovered).bit_length() - 1
        seen = []
        for i in sorted(by_edge[e], key=lambda i: -(parts[i] & uncovered).bit_count()):
            fu = parts[i] & uncovered
            if any(fu & ~g == 0 for g in seen):
                continue
            seen.append(fu)
            sub = rec(uncovered & ~parts[i], left - 1)
            if sub is not None:
                return [i] + sub
        failed.add((uncovered, left))
        return None

    return rec(full, k)


def box_exact(G: Graph, budget: float | None = None) -> SolveResult:
    """Boxicity: fewest interval supergraphs whose intersection is G."""
    X = complement(G)
    if X.m == 0:
        return SolveResult(0, empty_representation(G.n), "complete graph: no interval graph needed")
    clock = _Clock(budget)
    ex = _EdgeIndex(X)
    lower, why = 1, "not complete"
    try:
        parts = maximal_cointerval_parts(G, (1 << G.n) - 1, ex, clock)
        k = 1
        while True:
            found = _search_global(ex, parts, k, clock)
            if found is not None:
                chosen = [parts[i] for i in found]
                C = CoIntervalCover(X, tuple(CoverPart.from_edges(ex.to_pairs(f)) for f in chosen))
                R = from_cover(C)
                if not verify(R, G, k).ok:
                    raise AssertionError("boxicity certificate failed verification")
                if k > 1:
                    why = (f"exhaustive search over {len(parts)} minimal interval completions: "
                           f"no {k - 1} of them intersect to G")
                return SolveResult(k, R, why, lower=k)
            lower = k + 1
            k += 1
    except BudgetExceeded:
        return SolveResult(None, None, f"time budget exceeded; value >= {lower}", status="unknown", lower=lower)


# -- chromatic number --------------------------------------------------------------

def _greedy_dsatur(G: Graph) -> list[int]:
    n = G.n
    colors = [-1] * n
    sat = [0] * n
    for _ in range(n):
        v = max((u for u in range(n) if colors[u] < 0),
                key=lambda u: (sat[u].bit_count(), G.degree(u), -u))
        c = 0
        while sat[v] >> c & 1:
            c += 1
        colors[v] = c
        for u in G.nbrs(v):
            sat[u] |= 1 << c
    return colors


def _k_colour(G: Graph, k: int, clock: _Clock, seed_clique: list[int]) -> list[int] | None:
    """Backtracking k-colouring with forward checking and DSATUR selection."""
    n = G.n
    nbrs = [sorted(G.nbrs(v)) for v in range(n)]
    colors = [-1] * n
    full = (1 << k) - 1
    dom = [full] * n
    for c, v in enumerate(seed_clique):
        if c >= k:
            return None
        colors[v] = c
    for v in seed_clique:
        for u in nbrs[v]:
            dom[u] &= ~(1 << colors[v])
    if any(colors[v] < 0 and dom[v] == 0 for v in range(n)):
        return None
    top = len(seed_clique)

    def rec(count: int, used: int) -> bool:
        if count == n:
            return True
        clock.tick()
        best, key = -1, None
        for v in range(n):
            if colors[v] < 0:
                kk = (-(dom[v].bit_count()), sum(colors[u] < 0 for u in nbrs[v]))
                if key is None or kk > key:
                    best, key = v, kk
        v = best
        options = dom[v]
        # colours beyond the first unused one are interchangeable
        fresh = False
        for c in range(k):
            if not options >> c & 1:
                continue
            if c >= used:
                if fresh:
                    break
                fresh = True
            colors[v] = c
            changed = []
            ok = True
            for u in nbrs[v]:
                if colors[u] < 0 and dom[u] >> c & 1:
                    dom[u] &= ~(1 << c)
                    changed.append(u)
                    if dom[u] == 0:
                        ok = False
            if ok and rec(count + 1, max(used, c + 1)):
                return True
            for u in changed:
                dom[u] |= 1 << c
            colors[v] = -1
        return False

    if rec(top, top):
        return colors
    return None


def _max_clique_vertices(G: Graph) -> list[int]:
    best: list[int] = []

    def grow(clique: list[int], cand: int) -> None:
        nonlocal best
        if len(clique) > len(best):
            best = list(clique)
        while cand:
            if len(clique) + cand.bit_count() <= len(best):
                return
            v = (cand & -cand).bit_length() - 1
            cand &= ~(1 << v)
            grow(clique + [v], cand & G.adj[v])

    grow([], (1 << G.n) - 1)
    return best


def tabu_colour(G: Graph, k: int, seed: int = 0, max_iter: int = 50000) -> list[int] | None:
    """Tabu search for a k-colouring (0-based); None if none was found."""
    n = G.n
    if n == 0:
        return []
    rng = np.random.default_rng(seed)
    nb = [list(G.nbrs(v)) for v in range(n)]
    col = rng.integers(0, k, n)
    gamma = np.zeros((n, k), dtype=np.int64)
    for v in range(n):
        for u in nb[v]:
            gamma[v, col[u]] += 1
    conflicts = int(sum(gamma[v, col[v]] for v in range(n))) // 2
    tabu = np.zeros((n, k), dtype=np.int64)
    for it in range(max_iter):
        if conflicts == 0:
            return col.tolist()
        bad = [v for v in range(n) if gamma[v, col[v]] > 0]
        best = None
        for v in bad:
            for c in range(k):
                if c == col[v]:
                    continue
                delta = int(gamma[v, c] - gamma[v, col[v]])
                if tabu[v, c] > it and conflicts + delta > 0:
                    continue
                if best is None or delta < best[0] or (delta == best[0] and rng.random() < 0.3):
                    best = (delta, v, c)
        if best is None:
            continue
        delta, v, c = best
        old = col[v]
        col[v] = c
        conflicts += delta
        for u in nb[v]:
            gamma[u, old] -= 1
            gamma[u, c] += 1
        tabu[v, old] = it + int(0.6 * len(bad)) + int(rng.integers(0, 10))
    return None


@dataclass(frozen=True)
class ChromaticResult:
    value: int | None
    coloring: list[int] | None
    status: str = "exact"
    lower: int = 0


def chromatic_exact(G: Graph, budget: float | None = None) -> ChromaticResult:
    """Exact chromatic number with a proper colouring (colours 1..value).

    Upper bounds come from DSATUR and then seeded tabu search; the value is
    certified by an exhaustive refutation one colour below.
    """
    if G.n == 0:
        return ChromaticResult(0, [])
    clock = _Clock(budget)
    clique = _max_clique_vertices(G)
    lower = len(clique)
    best = _greedy_dsatur(G)
    k = max(best) + 1
    try:
        while k > lower:
            col = tabu_colour(G, k - 1)
            if col is None:
                col = _k_colour(G, k - 1, clock, clique)
            if col is None:
                lower = k
                break
            best, k = col, k - 1
    except BudgetExceeded:
        return ChromaticResult(None, [c + 1 for c in best], status="unknown", lower=lower)
    return ChromaticResult(k, [c + 1 for c in best], lower=k)
