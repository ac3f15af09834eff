"""Interval graph machinery.

Recognition is chordality (maximum cardinality search) followed by an
asteroidal-triple scan; a model is then read off a transitive orientation
of the complement, whose down-sets are nested for interval graphs.
Also here: co-interval checks, the diameter-3 tree models, and explicit
two-dimensional box representations of forests and unicyclic graphs.
"""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .boxrep import LocalBox, Representation, realize
from .graph import Graph, PreconditionError, complement, multicyclic_free


@dataclass(frozen=True)
class IntervalModel:
    intervals: tuple[tuple[int, int], ...]

    @property
    def n(self) -> int:
        return len(self.intervals)

    def graph(self) -> Graph:
        iv = self.intervals
        return Graph(self.n, ((u, v) for u in range(self.n) for v in range(u + 1, self.n)
                              if not (iv[u][1] < iv[v][0] or iv[v][1] < iv[u][0])))

    def to_representation(self) -> Representation:
        return Representation(self.n, 1, tuple(LocalBox(((0, lo, hi),)) for lo, hi in self.intervals))

    def __getitem__(self, v: int) -> tuple[int, int]:
        return self.intervals[v]

    def validate(self, G: Graph) -> None:
        if self.n != G.n or self.graph() != G:
            raise ValueError("interval model does not realize the graph")


@dataclass(frozen=True)
class Obstruction:
    kind: str  # "chordless_cycle" or "asteroidal_triple"
    vertices: tuple[int, ...]

    def __str__(self) -> str:
        return f"{self.kind} {list(self.vertices)}"


@dataclass(frozen=True)
class IntervalResult:
    is_interval: bool
    model: IntervalModel | None = None
    obstruction: Obstruction | None = None

    def __bool__(self) -> bool:
        return self.is_interval


# -- chordality ----------------------------------------------------------------------

def mcs_order(G: Graph) -> list[int]:
    """Maximum cardinality search; the reverse is a perfect elimination
    ordering iff G is chordal."""
    weight = [0] * G.n
    seen = [False] * G.n
    order = []
    for _ in range(G.n):
        v = max((u for u in range(G.n) if not seen[u]), key=lambda u: (weight[u], -u))
        seen[v] = True
        order.append(v)
        for u in G.nbrs(v):
            if not seen[u]:
                weight[u] += 1
    return order


def perfect_elimination_order(G: Graph) -> list[int] | None:
    peo = mcs_order(G)[::-1]
    pos = {v: i for i, v in enumerate(peo)}
    for v in peo:
        later = [u for u in G.nbrs(v) if pos[u] > pos[v]]
        if later:
            parent = min(later, key=pos.__getitem__)
            for u in later:
                if u != parent and not G.has_edge(u, parent):
                    return None
    return peo


def is_chordal(G: Graph) -> bool:
    return perfect_elimination_order(G) is not None


def _shortest_path(G: Graph, a: int, b: int, banned: set[int]) -> list[int] | None:
    prev = {a: None}
    todo = deque([a])
    while todo:
        x = todo.popleft()
        if x == b:
            path = []
            while x is not None:
                path.append(x)
                x = prev[x]
            return path[::-1]
        for y in sorted(G.nbrs(x)):
            if y not in prev and y not in banned:
                prev[y] = x
                todo.append(y)
    return None


def chordless_cycle(G: Graph) -> tuple[int, ...] | None:
    """An induced cycle of length >= 4, or None if G is chordal."""
    for v in range(G.n):
        nb = sorted(G.nbrs(v))
        closed = set(nb) | {v}
        for i, a in enumerate(nb):
            for b in nb[i + 1:]:
                if G.has_edge(a, b):
                    continue
                path = _shortest_path(G, a, b, closed - {a, b})
                if path is not None:
                    return (v, *path)
    return None


# -- asteroidal triples ------------------------------------------------------------

def _avoid_components(G: Graph) -> np.ndarray:
    """C[c, v] = component label of v in G - N[c], or -1 if v is in N[c]."""
    C = np.full((G.n, G.n), -1, dtype=np.int64)
    for c in range(G.n):
        blocked = G.adj[c] | (1 << c)
        label = 0
        for s in range(G.n):
            if blocked >> s & 1 or C[c, s] >= 0:
                continue
            C[c, s] = label
            stack = [s]
            while stack:
                x = stack.pop()
                for y in G.nbrs(x):
                    if not blocked >> y & 1 and C[c, y] < 0:
                        C[c, y] = label
                        stack.append(y)
            label += 1
    return C


def asteroidal_triple(G: Graph) -> tuple[int, int, int] | None:
    """Three pairwise non-adjacent vertices, each pair joined by a path
    avoiding the closed neighbourhood of the third."""
    if G.n < 3:
        return None
    C = _avoid_components(G)
    A = np.zeros((G.n, G.n), dtype=bool)
    for u, v in G.edges:
        A[u, v] = A[v, u] = True
    idx = np.arange(G.n)
    for a in range(G.n):
        for b in range(a + 1, G.n):
            if A[a, b]:
                continue
            cs = idx[(idx > b) & ~A[a] & ~A[b]]
            if cs.size == 0:
                continue
            ok = (C[cs, a] == C[cs, b]) & (C[a, cs] == C[a, b]) & (C[b, cs] == C[b, a])
            hits = cs[ok]
            if hits.size:
                return (a, b, int(hits[0]))
    return None


# -- model construction --------------------------------------------------------------

def transitive_orientation(H: Graph) -> set[tuple[int, int]] | None:
    """Transitive orientation of H by successive implication classes, or
    None if H is not a comparability graph."""
    remaining = {e for e in H.edges}
    adj = [set(H.nbrs(v)) for v in range(H.n)]
    arcs: set[tuple[int, int]] = set()
    while remaining:
        x, y = min(remaining)
        cls = {(x, y)}
        todo = [(x, y)]
        while todo:
            a, b = todo.pop()
            forced = [(a, c) for c in adj[a] if c != b and c not in adj[b]]
            forced += [(c, b) for c in adj[b] if c != a and c not in adj[a]]
            for arc in forced:
                if arc[::-1] in cls:
                    return None
                if arc not in cls:
                    cls.add(arc)
                    todo.append(arc)
        for a, b in cls:
            remaining.discard((min(a, b), max(a, b)))
            adj[a].discard(b)
            adj[b].discard(a)
        arcs |= cls
    M = np.zeros((H.n, H.n), dtype=np.int64)
    for a, b in arcs:
        M[a, b] = 1
    if ((M @ M > 0) & (M == 0)).any():
        return None
    return arcs


def model_from_order(n: int, before: set[tuple[int, int]]) -> IntervalModel | None:
    """Intervals for an interval order given as strict relation ``u before v``.
    Returns None if the down-sets are not nested."""
    down = [frozenset(u for u, w in before if w == v) for v in range(n)]
    levels = sorted(set(down), key=len)
    for small, big in zip(levels, levels[1:]):
        if not small < big:
            return None
    rank = {s: i for i, s in enumerate(levels)}
    ivs = []
    for v in range(n):
        lo = rank[down[v]]
        hi = max(i for i, s in enumerate(levels) if v not in s)
        ivs.append((lo, hi))
    # ranks are in [0, n); spread to distinct-free integers in [1, 2n]
    return IntervalModel(tuple((2 * lo + 1, 2 * hi + 2) for lo, hi in ivs))


def build_model(G: Graph) -> IntervalModel | None:
    if G.n == 0:
        return IntervalModel(())
    arcs = transitive_orientation(complement(G))
    if arcs is None:
        return None
    model = model_from_order(G.n, arcs)
    if model is None or model.graph() != G:
        return None
    return model


def is_interval(G: Graph) -> IntervalResult:
    cyc = chordless_cycle(G) if not is_chordal(G) else None
    if cyc is not None:
        return IntervalResult(False, obstruction=Obstruction("chordless_cycle", cyc))
    at = asteroidal_triple(G)
    if at is not None:
        return IntervalResult(False, obstruction=Obstruction("asteroidal_triple", at))
    model = build_model(G)
    if model is None:
        raise AssertionError("chordal AT-free graph without an interval model")
    return IntervalResult(True, model=model)


def is_cointerval(G: Graph) -> bool:
    support = [v for v in range(G.n) if G.adj[v]]
    return is_interval(complement(G.induced(support))).is_interval


# -- coloring ------------------------------------------------------------------------

def interval_color(G: Graph, M: IntervalModel | Sequence[tuple]) -> list[int]:
    """Greedy by left endpoint; uses exactly clique_number(G) colors (1-based)."""
    if not isinstance(M, IntervalModel):
        M = IntervalModel(tuple(tuple(iv) for iv in M))
    M.validate(G)
    order = sorted(range(G.n), key=lambda v: (M[v][0], M[v][1], v))
    colors = [0] * G.n
    active: list[tuple] = []
    free: list[int] = []
    used = 0
    for v in order:
        lo, hi = M[v]
        while active and active[0][0] < lo:
            heapq.heappush(free, heapq.heappop(active)[1])
        if free:
            c = heapq.heappop(free)
        else:
            used += 1
            c = used
        colors[v] = c
        heapq.heappush(active, (hi, c))
    return colors


# -- trees of diameter at most 3 -------------------------------------------------------

def is_tree(T: Graph) -> bool:
    return T.n >= 1 and T.m == T.n - 1 and T.is_connected()


def _eccentricities(T: Graph) -> list[int]:
    out = []
    for s in range(T.n):
        dist = {s: 0}
        todo = deque([s])
        while todo:
            x = todo.popleft()
            for y in T.nbrs(x):
                if y not in dist:
                    dist[y] = dist[x] + 1
                    todo.append(y)
        out.append(max(dist.values()))
    return out


def diam3_centres(T: Graph) -> tuple[int, int]:
    """The pair (u, v) used by the diameter-3 construction."""
    if not is_tree(T) or T.m == 0:
        raise PreconditionError("expected a tree with at least one edge")
    ecc = _eccentricities(T)
    if max(ecc) > 3:
        raise PreconditionError(f"tree has diameter {max(ecc)} > 3")
    if T.n == 2:
        return 0, 1
    if max(ecc) == 2:
        u = ecc.index(1)
        return u, min(T.nbrs(u))
    u, v = sorted(x for x in range(T.n) if ecc[x] == 2)
    return u, v


def diam3_cointerval(T: Graph) -> IntervalModel:
    """Model of the complement of a tree of diameter <= 3: centres at the
    points 1 and 3, the other leaves of u on [2, 3], those of v on [1, 2]."""
    u, v = diam3_centres(T)
    ivs = [None] * T.n
    ivs[u], ivs[v] = (1, 1), (3, 3)
    for x in T.nbrs(u) - {v}:
        ivs[x] = (2, 3)
    for x in T.nbrs(v) - {u}:
        ivs[x] = (1, 2)
    return IntervalModel(tuple(ivs))


# -- two-dimensional representations of sparse graphs ------------------------------

def _dfs_nesting(G: Graph, root: int, banned: set[int], clock: int,
                 depth0: int, out: dict[int, list]) -> int:
    """Assign [pre, post] and depth to the tree hanging at ``root`` (which
    is itself excluded); returns the advanced clock."""
    stack = [(root, iter(sorted(G.nbrs(root) - banned)), depth0)]
    seen = {root} | banned
    while stack:
        x, it, dep = stack[-1]
        for y in it:
            if y in seen:
                continue
            seen.add(y)
            out[y] = [clock, None, dep + 1]
            clock += 1
            stack.append((y, iter(sorted(G.nbrs(y))), dep + 1))
            break
        else:
            stack.pop()
            if x != root:
                out[x][1] = clock
                clock += 1
    return clock


def tree_two_box(T: Graph) -> Representation:
    """Forest -> 2 dimensions: DFS nesting [pre, post] and depth [t, t+1]."""
    ok, ranks = multicyclic_free(T)
    if any(ranks):
        raise PreconditionError("input has a cycle")
    boxes: list = [None] * T.n
    clock = 0
    for comp in T.components():
        r = comp[0]
        info: dict[int, list] = {}
        start = clock
        clock = _dfs_nesting(T, r, set(), clock + 1, 0, info)
        boxes[r] = LocalBox(((0, start, clock), (1, 0, 1)))
        for x, (pre, post, dep) in info.items():
            boxes[x] = LocalBox(((0, pre, post), (1, dep, dep + 1)))
        clock += 1
    return Representation(T.n, 2, tuple(boxes))


def _cycle_of(G: Graph, comp: list[int]) -> list[int]:
    deg = {v: G.degree(v) for v in comp}
    alive = set(comp)
    leaves = [v for v in comp if deg[v] <= 1]
    while leaves:
        x = leaves.pop()
        alive.discard(x)
        for y in G.nbrs(x):
            if y in alive:
                deg[y] -= 1
                if deg[y] == 1:
                    leaves.append(y)
    start = min(alive)
    cyc, prev = [start], None
    while True:
        x = cyc[-1]
        nxt = min(y for y in G.nbrs(x) if y in alive and y != prev and (len(cyc) < 2 or y != cyc[-2]))
        if nxt == start:
            return cyc
        prev = x
        cyc.append(nxt)


def _unicyclic_boxes(G: Graph, comp: list[int], clock: int, boxes: list) -> int:
    cyc = _cycle_of(G, comp)
    k = len(cyc)
    on_cycle = set(cyc)
    start = clock
    # trees at c_0 first, gaps g_1..g_k around the blocks of c_1..c_{k-1}
    info0: dict[int, list] = {}
    clock = _dfs_nesting(G, cyc[0], on_cycle - {cyc[0]}, clock + 1, 0, info0)
    for x, (pre, post, dep) in info0.items():
        boxes[x] = LocalBox(((0, pre, post), (1, -2 * dep, -2 * dep + 2)))
    gaps = []
    for i in range(1, k):
        gaps.append(clock)
        info: dict[int, list] = {}
        clock = _dfs_nesting(G, cyc[i], on_cycle - {cyc[i]}, clock + 1, 0, info)
        for x, (pre, post, dep) in info.items():
            boxes[x] = LocalBox(((0, pre, post), (1, 2 * dep + 2, 2 * dep + 4)))
    gaps.append(clock)
    boxes[cyc[0]] = LocalBox(((0, start, clock), (1, 0, 2)))
    for i in range(1, k):
        y = (2, 4) if i in (1, k - 1) else (3, 4)
        boxes[cyc[i]] = LocalBox(((0, gaps[i - 1], gaps[i]), (1, *y)))
    return clock + 1


def sparse_two_box(G: Graph) -> Representation:
    """2-dimensional representation of a graph without multicyclic components.

    Tree components use the DFS x depth layout.  For a unicyclic component
    with cycle c_0..c_{k-1}, the first axis lays out the hanging trees in
    consecutive blocks with c_i spanning its own block up to the shared gap
    points on either side and c_0 spanning everything; the second axis
    separates c_0 from all but c_1, c_{k-1} and its own children.
    """
    ok, ranks = multicyclic_free(G)
    if not ok:
        raise PreconditionError("graph has a component with two or more independent cycles")
    boxes: list = [None] * G.n
    clock = 0
    for comp in G.components():
        sub_edges = sum(G.degree(v) for v in comp) // 2
        if sub_edges == len(comp) - 1:
            r = comp[0]
            info: dict[int, list] = {}
            start = clock
            clock = _dfs_nesting(G, r, set(), clock + 1, 0, info)
            boxes[r] = LocalBox(((0, start, clock), (1, 0, 1)))
            for x, (pre, post, dep) in info.items():
                boxes[x] = LocalBox(((0, pre, post), (1, dep, dep + 1)))
            clock += 1
        else:
            clock = _unicyclic_boxes(G, comp, clock, boxes)
    R = Representation(G.n, 2, tuple(boxes))
    if realize(R) != G:
        raise AssertionError("sparse two-box construction failed to realize the graph")
    return R
