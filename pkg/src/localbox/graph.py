"""Finite simple graphs on vertices ``0..n-1`` and the structural routines the
constructions rely on (complement, girth, cycle census, orientations,
matchings, cliques), plus graph6 / edge-list I/O.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

import networkx as nx

INFINITY = math.inf


class GraphFormatError(ValueError):
    """Malformed graph text; ``position`` is a line number (edgelist) or a
    byte offset (graph6)."""

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at {position})"
        super().__init__(message)
        self.position = position


class PreconditionError(ValueError):
    pass


def _edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable simple undirected graph.

    Adjacency is kept both as neighbour frozensets and as integer bitmasks;
    the exact solvers work on the bitmasks.
    """

    __slots__ = ("n", "edges", "adj", "_nbrs", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        es = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            es.add(_edge(u, v))
        adj = [0] * n
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in es:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            nbrs[u].add(v)
            nbrs[v].add(u)
        self.n = n
        self.edges = frozenset(es)
        self.adj = tuple(adj)
        self._nbrs = tuple(frozenset(s) for s in nbrs)
        self._hash = None

    # -- basic queries -------------------------------------------------
    @property
    def m(self) -> int:
        return len(self.edges)

    def nbrs(self, v: int) -> frozenset[int]:
        return self._nbrs[v]

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return len(self._nbrs[v])

    def degrees(self) -> list[int]:
        return [len(s) for s in self._nbrs]

    @property
    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.edges))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    # -- derived graphs ------------------------------------------------
    def complement(self) -> Graph:
        return complement(self)

    def induced(self, vertices: Iterable[int]) -> Graph:
        """Induced subgraph, relabelled to ``0..k-1`` in increasing order of
        the original vertex labels."""
        vs = sorted(set(vertices))
        index = {v: i for i, v in enumerate(vs)}
        es = [(index[u], index[v]) for u, v in self.edges if u in index and v in index]
        return Graph(len(vs), es)

    def components(self) -> list[list[int]]:
        """Connected components, each sorted, ordered by smallest vertex."""
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp, queue = [s], deque([s])
            while queue:
                u = queue.popleft()
                for w in self._nbrs[u]:
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        queue.append(w)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges)
        return g

    @classmethod
    def from_networkx(cls, g: nx.Graph) -> Graph:
        nodes = list(g.nodes())
        index = {v: i for i, v in enumerate(nodes)}
        return cls(len(nodes), ((index[u], index[v]) for u, v in g.edges()))


# -- standard families ------------------------------------------------------

def empty_graph(n: int) -> Graph:
    return Graph(n)


def complete_graph(n: int) -> Graph:
    return Graph(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def path_graph(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(n, ((i, (i + 1) % n) for i in range(n)))


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with centre 0."""
    return Graph(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def perfect_matching_graph(n: int) -> Graph:
    if n % 2:
        raise ValueError("n must be even")
    return Graph(n, ((2 * i, 2 * i + 1) for i in range(n // 2)))


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def disjoint_union(*graphs: Graph) -> Graph:
    edges, offset = [], 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges)
        offset += g.n
    return Graph(offset, edges)


# -- I/O ---------------------------------------------------------------------

def _graph6_size(n: int) -> bytes:
    if n < 63:
        return bytes([n + 63])
    if n < 258048:
        return bytes([126, 63 + (n >> 12 & 63), 63 + (n >> 6 & 63), 63 + (n & 63)])
    raise ValueError("graph6 size field supports n < 258048")


def emit_graph(g: Graph, fmt: str = "edgelist") -> bytes:
    if fmt == "graph6":
        bits = [1 if g.has_edge(i, j) else 0 for j in range(1, g.n) for i in range(j)]
        bits += [0] * (-len(bits) % 6)
        body = bytes(
            63 + int("".join(map(str, bits[k:k + 6])), 2) for k in range(0, len(bits), 6)
        )
        return _graph6_size(g.n) + body
    if fmt == "edgelist":
        lines = [f"# n={g.n}"] + [f"{u} {v}" for u, v in g.sorted_edges()]
        return ("\n".join(lines) + "\n").encode()
    raise ValueError(f"unknown graph format {fmt!r}")


def _parse_graph6(data: bytes) -> Graph:
    data = data.strip()
    if data.startswith(b">>graph6<<"):
        data = data[10:]
    for pos, c in enumerate(data):
        if not 63 <= c <= 126:
            raise GraphFormatError(f"invalid graph6 byte {c!r}", pos)
    if not data:
        raise GraphFormatError("empty graph6 string", 0)
    if data[0] != 126:
        n, start = data[0] - 63, 1
    elif len(data) >= 4 and data[1] != 126:
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        start = 4
    else:
        raise GraphFormatError("unsupported graph6 size field", 0)
    need = n * (n - 1) // 2
    body = data[start:]
    if len(body) != (need + 5) // 6:
        raise GraphFormatError(
            f"expected {(need + 5) // 6} data bytes for n={n}, got {len(body)}", start
        )
    bits = "".join(format(c - 63, "06b") for c in body)
    if "1" in bits[need:]:
        raise GraphFormatError("nonzero padding bits", start + len(body) - 1)
    edges, k = [], 0
    for j in range(1, n):
        for i in range(j):
            if bits[k] == "1":
                edges.append((i, j))
            k += 1
    return Graph(n, edges)


def _parse_edgelist(data: bytes, n: int | None) -> Graph:
    edges, declared, top = [], None, -1
    for lineno, raw in enumerate(data.decode("utf-8", "replace").splitlines(), 1):
        line = raw.strip()
        if line.startswith("#"):
            body = line[1:].strip()
            if body.startswith("n="):
                try:
                    declared = int(body[2:])
                except ValueError:
                    raise GraphFormatError(f"bad vertex count {body!r}", lineno) from None
            continue
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"expected 'u v', got {line!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"non-integer vertex in {line!r}", lineno) from None
        if u < 0 or v < 0 or u == v:
            raise GraphFormatError(f"invalid edge {line!r}", lineno)
        edges.append((u, v))
        top = max(top, u, v)
    size = n if n is not None else declared if declared is not None else top + 1
    if top >= size:
        raise GraphFormatError(f"vertex {top} exceeds declared n={size}")
    return Graph(size, edges)


def parse_graph(text: bytes | str, fmt: str = "edgelist", n: int | None = None) -> Graph:
    """Parse graph6 or edge-list text.

    Edge lists are ``u v`` lines with 0-based vertices; ``#`` starts a
    comment, and a ``# n=K`` comment (or the ``n`` argument) fixes the
    vertex count so trailing isolated vertices survive a round trip.
    """
    if isinstance(text, str):
        text = text.encode()
    if fmt == "graph6":
        return _parse_graph6(text)
    if fmt == "edgelist":
        return _parse_edgelist(text, n)
    raise ValueError(f"unknown graph format {fmt!r}")


def read_graph(path: str) -> Graph:
    with open(path, "rb") as fh:
        data = fh.read()
    fmt = "graph6" if path.endswith((".g6", ".graph6")) else "edgelist"
    return parse_graph(data, fmt)


# -- structural routines -------------------------------------------------------

def complement(g: Graph) -> Graph:
    return Graph(g.n, ((u, v) for u in range(g.n) for v in range(u + 1, g.n)
                       if not g.has_edge(u, v)))


def girth(g: Graph) -> float | int:
    """Length of a shortest cycle, ``math.inf`` for forests."""
    best = INFINITY
    for s in range(g.n):
        dist = {s: 0}
        parent = {s: -1}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for w in g.nbrs(u):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def cycle_census(g: Graph) -> list[tuple[list[int], int]]:
    """Per component: (vertices, cycle rank m_C - n_C + 1)."""
    out = []
    for comp in g.components():
        cs = set(comp)
        m = sum(1 for u, v in g.edges if u in cs)
        out.append((comp, m - len(comp) + 1))
    return out


def multicyclic_free(g: Graph) -> tuple[bool, list[int]]:
    """True iff no component carries two or more independent cycles.

    The second item lists the cycle rank of each component.
    """
    ranks = [r for _, r in cycle_census(g)]
    return all(r <= 1 for r in ranks), ranks


def average_degree(g: Graph) -> Fraction:
    if g.n == 0:
        raise ValueError("average degree of the empty vertex set is undefined")
    return Fraction(2 * g.m, g.n)


@dataclass(frozen=True)
class Orientation:
    base: Graph
    arcs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        seen = {_edge(u, v) for u, v in self.arcs}
        if len(seen) != len(self.arcs) or seen != self.base.edges:
            raise ValueError("an orientation must direct every edge exactly once")

    def outdegrees(self) -> list[int]:
        out = [0] * self.base.n
        for t, _ in self.arcs:
            out[t] += 1
        return out

    def indegrees(self) -> list[int]:
        ins = [0] * self.base.n
        for _, h in self.arcs:
            ins[h] += 1
        return ins

    def in_neighbours(self, v: int) -> list[int]:
        return sorted(t for t, h in self.arcs if h == v)

    def max_outdegree(self) -> int:
        return max(self.outdegrees(), default=0)


def _euler_tour_arcs(g: Graph, edges: set[tuple[int, int]]) -> list[tuple[int, int]]:
    """Hierholzer over the given edge set; every vertex has even degree in it."""
    remaining: dict[int, set[int]] = {}
    for u, v in edges:
        remaining.setdefault(u, set()).add(v)
        remaining.setdefault(v, set()).add(u)
    arcs = []
    for start in sorted(remaining):
        if not remaining[start]:
            continue
        stack, tour = [start], []
        while stack:
            u = stack[-1]
            if remaining[u]:
                w = min(remaining[u])
                remaining[u].discard(w)
                remaining[w].discard(u)
                stack.append(w)
            else:
                tour.append(stack.pop())
        tour.reverse()
        arcs.extend(zip(tour, tour[1:]))
    return arcs


def eulerian_orientation(g: Graph) -> Orientation:
    """Orient every edge so that out-degree equals in-degree everywhere."""
    for v in range(g.n):
        if g.degree(v) % 2:
            raise PreconditionError(f"vertex {v} has odd degree {g.degree(v)}")
    return Orientation(g, tuple(_euler_tour_arcs(g, set(g.edges))))


def _find_cycle(adj: dict[int, set[int]], start: int) -> list[int] | None:
    """A cycle through the DFS tree rooted at ``start`` (lowest-first)."""
    parent = {start: None}
    order = [(start, iter(sorted(adj[start])))]
    depth = {start: 0}
    while order:
        u, it = order[-1]
        for w in it:
            if w == parent[u]:
                continue
            if w in parent:
                # back edge closes a cycle
                cyc = [u]
                x = u
                while x != w:
                    x = parent[x]
                    cyc.append(x)
                return cyc
            parent[w] = u
            depth[w] = depth[u] + 1
            order.append((w, iter(sorted(adj[w]))))
            break
        else:
            order.pop()
    return None


def halfplus_orientation(g: Graph) -> Orientation:
    """Peel edge-disjoint cycles greedily, then orient the leftover forest.

    Each peeled cycle is oriented cyclically and each forest component
    towards its lowest vertex, so every vertex gets out-degree at most
    ``ceil(deg(v)/2)``.
    """
    adj = {v: set(g.nbrs(v)) for v in range(g.n)}
    arcs = []
    for v in range(g.n):
        while True:
            cyc = _find_cycle(adj, v) if adj[v] else None
            if cyc is None:
                break
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                arcs.append((a, b))
                adj[a].discard(b)
                adj[b].discard(a)
    forest = Graph(g.n, ((u, w) for u in adj for w in adj[u] if u < w))
    for comp in forest.components():
        root = comp[0]
        parent = {root: None}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in sorted(forest.nbrs(u)):
                if w not in parent:
                    parent[w] = u
                    arcs.append((w, u))
                    queue.append(w)
    return Orientation(g, tuple(arcs))


@dataclass(frozen=True)
class Matching:
    base: Graph
    pairs: frozenset[tuple[int, int]]

    def __post_init__(self):
        used = [v for e in self.pairs for v in e]
        if len(used) != len(set(used)):
            raise ValueError("matching edges must be vertex-disjoint")
        if not self.pairs <= self.base.edges:
            raise ValueError("matching uses a non-edge")

    @property
    def size(self) -> int:
        return len(self.pairs)

    @property
    def is_perfect(self) -> bool:
        return 2 * len(self.pairs) == self.base.n

    def mate(self, v: int) -> int | None:
        for a, b in self.pairs:
            if a == v:
                return b
            if b == v:
                return a
        return None


@dataclass(frozen=True)
class VertexPartition:
    n: int
    classes: tuple[frozenset[int], ...]

    def __post_init__(self):
        if not self.classes:
            raise ValueError("a partition needs at least one class")
        seen: set[int] = set()
        for c in self.classes:
            if seen & c:
                raise ValueError("classes must be disjoint")
            seen |= c
        if seen != set(range(self.n)):
            raise ValueError("classes must cover every vertex exactly once")

    @classmethod
    def from_labels(cls, labels, s: int) -> VertexPartition:
        classes = [set() for _ in range(s)]
        for v, c in enumerate(labels):
            classes[int(c)].add(v)
        return cls(len(labels), tuple(frozenset(c) for c in classes))

    def union(self, idx) -> list[int]:
        return sorted(v for i in idx for v in self.classes[i])


def maximum_matching(g: Graph) -> Matching:
    """Maximum-cardinality matching (Edmonds' blossom algorithm via networkx)."""
    pairs = nx.max_weight_matching(g.to_networkx(), maxcardinality=True)
    return Matching(g, frozenset(_edge(u, v) for u, v in pairs))


def _max_clique(cand: int, adj: tuple[int, ...], size: int, best: list[int]) -> None:
    if cand == 0:
        if size > best[0]:
            best[0] = size
        return
    if size + cand.bit_count() <= best[0]:
        return
    while cand:
        if size + cand.bit_count() <= best[0]:
            return
        v = cand.bit_length() - 1
        cand &= ~(1 << v)
        _max_clique(cand & adj[v], adj, size + 1, best)


def clique_number(g: Graph) -> int:
    if g.n == 0:
        return 0
    best = [1]
    _max_clique((1 << g.n) - 1, g.adj, 0, best)
    return best[0]


def max_independent_set_size(g: Graph) -> int:
    return clique_number(complement(g))


def is_triangle_free(g: Graph) -> bool:
    return all(not (g.adj[u] & g.adj[v]) for u, v in g.edges)


def is_proper_coloring(g: Graph, colors: list[int]) -> bool:
    return len(colors) == g.n and all(colors[u] != colors[v] for u, v in g.edges)


def iter_pairs(n: int) -> Iterator[tuple[int, int]]:
    for u in range(n):
        for v in range(u + 1, n):
            yield u, v
