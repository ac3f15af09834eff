"""Colouring graphs with 2-local box representations, and shift graphs.

Every routine returns a proper colouring together with the guaranteed
bound for its input class.  The bounds rely on colouring two-dimensional
pieces well; pieces with at most ``EXACT_PIECE`` vertices are coloured
optimally, larger ones greedily, and the result records which happened.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .boxrep import LocalBox, Representation, realize, verify
from .exact import _greedy_dsatur, chromatic_exact
from .graph import Graph, PreconditionError, clique_number, is_proper_coloring

EXACT_PIECE = 12


class ShapeError(ValueError):
    pass


@dataclass(frozen=True)
class ColoringResult:
    colors: list[int]
    count: int
    bound: float
    proper: bool
    exact_pieces: bool = True  # False when some piece was coloured heuristically

    @property
    def subcontract(self) -> str:
        return "exact" if self.exact_pieces else "heuristic"

    def csv(self) -> str:
        return "vertex,color\n" + "".join(f"{v},{c}\n" for v, c in enumerate(self.colors))


def _finish(G: Graph, colors: list[int], bound: float, exact: bool) -> ColoringResult:
    proper = is_proper_coloring(G, colors)
    if not proper:
        raise AssertionError("produced colouring is not proper")
    return ColoringResult(colors, len(set(colors)), bound, proper, exact)


def _merge(n: int, pieces: Iterable[tuple[list[int], list[int]]]) -> list[int]:
    """Give each (vertices, colours) piece its own palette."""
    out = [0] * n
    offset = 0
    for verts, cols in pieces:
        if not verts:
            continue
        relabel = {c: i + 1 for i, c in enumerate(sorted(set(cols)))}
        for v, c in zip(verts, cols):
            out[v] = offset + relabel[c]
        offset += len(relabel)
    return out


def _sub(G: Graph, R: Representation, verts: list[int]) -> tuple[Graph, Representation]:
    return G.induced(verts), R.restrict(verts)


def cw_bound(r: int) -> float:
    """320 r log(2r), the cited bound for boxicity-2 graphs."""
    return 320 * r * math.log2(2 * r) if r >= 1 else 0


# -- shift graphs --------------------------------------------------------------------

def shift_vertices(n: int) -> list[tuple[int, int]]:
    return list(combinations(range(n), 2))


def shift_graph(n: int) -> Graph:
    """Pairs i<j, with (i,j) ~ (k,l) whenever j = k or l = i."""
    if n < 2:
        raise ValueError("shift graphs need n >= 2")
    vs = shift_vertices(n)
    idx = {p: i for i, p in enumerate(vs)}
    return Graph(len(vs), ((idx[a], idx[b]) for a in vs for b in vs if a[1] == b[0]))


def shift_complement_rep(n: int) -> Representation:
    """(i, j) is the point 0 in dimension i and the point 1 in dimension j."""
    if n < 2:
        raise ValueError("shift graphs need n >= 2")
    boxes = tuple(LocalBox(((i, 0, 0), (j, 1, 1))) for i, j in shift_vertices(n))
    return Representation(len(boxes), n, boxes)


# -- pieces -----------------------------------------------------------------------------

def _interval_colour(ivs: list[tuple[float, float]]) -> list[int]:
    """Greedy by left end; optimal for any family of closed intervals."""
    import heapq

    order = sorted(range(len(ivs)), key=lambda i: (ivs[i][0], ivs[i][1], i))
    colors = [0] * len(ivs)
    active: list = []
    free: list[int] = []
    used = 0
    for i in order:
        lo, hi = ivs[i]
        while active and active[0][0] < lo:
            heapq.heappush(free, heapq.heappop(active)[1])
        if free:
            c = heapq.heappop(free)
        else:
            used += 1
            c = used
        colors[i] = c
        heapq.heappush(active, (hi, c))
    return colors


def box2_color(G: Graph, M: Representation) -> ColoringResult:
    """Colour a graph given by boxes in at most two dimensions."""
    used = sorted({d for b in M.boxes for d in b.dims})
    if len(used) > 2:
        raise ShapeError(f"representation uses {len(used)} dimensions, expected at most 2")
    if M.n != G.n or realize(M) != G:
        raise ValueError("representation does not realize the graph")
    r = clique_number(G) if G.n else 0
    bound = 6 if r <= 2 else cw_bound(r)
    if G.n == 0:
        return ColoringResult([], 0, bound, True, True)
    if G.n <= EXACT_PIECE:
        res = chromatic_exact(G)
        return _finish(G, res.coloring, bound, True)
    cols = [c + 1 for c in _greedy_dsatur(G)]
    return _finish(G, cols, bound, False)


def _projection(box: LocalBox, dim: int) -> tuple[float, float]:
    iv = box.get(dim)
    return (-math.inf, math.inf) if iv is None else iv


@dataclass(frozen=True)
class Type11Rep:
    R: Representation
    first_dim: int

    def other_dim(self, v: int) -> int | None:
        others = [d for d in self.R.boxes[v].dims if d != self.first_dim]
        if len(others) > 1:
            raise ShapeError(f"vertex {v} is local in dimensions {others} besides {self.first_dim}")
        return others[0] if others else None

    def validate(self, G: Graph) -> None:
        for v in range(self.R.n):
            self.other_dim(v)
        if self.R.n != G.n or realize(self.R) != G:
            raise ValueError("representation does not realize the graph")


def _components(n: int, adjacent) -> list[list[int]]:
    seen = [False] * n
    comps = []
    for s in range(n):
        if seen[s]:
            continue
        seen[s] = True
        comp, todo = [s], [s]
        while todo:
            x = todo.pop()
            for y in range(n):
                if not seen[y] and adjacent(x, y):
                    seen[y] = True
                    comp.append(y)
                    todo.append(y)
        comps.append(sorted(comp))
    return comps


def type11_color(G: Graph, T: Type11Rep) -> ColoringResult:
    """Split by the second local dimension, take components of the
    first-axis interval graph inside each class, colour the interval graph
    of component hulls and each component separately, and pair the colours."""
    T.validate(G)
    R, first = T.R, T.first_dim
    r = clique_number(G) if G.n else 0
    bound = 12 if r <= 2 else 320 * r * r * math.log2(2 * r)
    if G.n == 0:
        return ColoringResult([], 0, bound, True, True)
    iv = [_projection(b, first) for b in R.boxes]
    meets = lambda a, b: not (iv[a][1] < iv[b][0] or iv[b][1] < iv[a][0])
    classes: dict[int | None, list[int]] = {}
    for v in range(G.n):
        classes.setdefault(T.other_dim(v), []).append(v)
    pieces: list[list[int]] = []
    for key in sorted(classes, key=lambda k: -1 if k is None else k):
        members = classes[key]
        for comp in _components(len(members), lambda a, b: meets(members[a], members[b])):
            pieces.append([members[i] for i in comp])
    hulls = [(min(iv[v][0] for v in S), max(iv[v][1] for v in S)) for S in pieces]
    hcol = _interval_colour(hulls)
    if max(hcol) > max(r, 1):
        raise AssertionError(f"component hull graph needs {max(hcol)} colours, clique number is {r}")
    inner = [0] * G.n
    exact = True
    for S in pieces:
        sub_g, sub_r = _sub(G, R, S)
        res = box2_color(sub_g, sub_r)
        exact &= res.exact_pieces
        for v, c in zip(S, res.colors):
            inner[v] = c
    width = max(inner)
    colors = [0] * G.n
    for S, h in zip(pieces, hcol):
        for v in S:
            colors[v] = (h - 1) * width + inner[v]
    # compact to 1..count
    relabel = {c: i + 1 for i, c in enumerate(sorted(set(colors)))}
    return _finish(G, [relabel[c] for c in colors], bound, exact)


def _two_colour(G: Graph) -> list[int] | None:
    colors = [0] * G.n
    for s in range(G.n):
        if colors[s]:
            continue
        colors[s] = 1
        todo = deque([s])
        while todo:
            x = todo.popleft()
            for y in G.nbrs(x):
                if not colors[y]:
                    colors[y] = 3 - colors[x]
                    todo.append(y)
                elif colors[y] == colors[x]:
                    return None
    return colors


def _triangle(G: Graph) -> tuple[int, int, int] | None:
    for u, v in G.sorted_edges():
        common = G.adj[u] & G.adj[v]
        if common:
            return (u, v, (common & -common).bit_length() - 1)
    return None


def _check_2local(G: Graph, R: Representation) -> None:
    rep = verify(R, G, 2)
    if not rep.ok:
        raise ValueError(f"representation is not a 2-local representation of G: {rep.first_violation}")


def _local_in(R: Representation, dim: int) -> set[int]:
    return {v for v, b in enumerate(R.boxes) if b.get(dim) is not None}


def _doubly_local(R: Representation) -> tuple[int, int, int] | None:
    for v, b in enumerate(R.boxes):
        if b.locality >= 2:
            a, c = b.dims[:2]
            return v, a, c
    return None


def _independent(G: Graph, verts: Iterable[int]) -> bool:
    vs = list(verts)
    mask = sum(1 << v for v in vs)
    return all(G.adj[v] & mask == 0 for v in vs)


def tf_lbox2_color(G: Graph, R: Representation) -> ColoringResult:
    """Triangle-free graphs of local boxicity at most 2: at most 18 colours."""
    tri = _triangle(G)
    if tri is not None:
        raise PreconditionError(f"graph has the triangle {list(tri)}")
    _check_2local(G, R)
    bound = 18
    if G.n == 0:
        return ColoringResult([], 0, bound, True, True)
    found = _doubly_local(R)
    if found is None:
        # a triangle-free join of interval graphs is bipartite
        cols = _two_colour(G)
        if cols is None:
            raise AssertionError("1-local triangle-free graph is not bipartite")
        return _finish(G, cols, bound, True)
    v, a, b = found
    D1, D2 = _local_in(R, a), _local_in(R, b)
    V = set(range(G.n))
    rest = sorted(V - D1 - D2)
    core = sorted(D1 & D2)
    exact = True

    def core_colouring() -> list[tuple[list[int], list[int]]]:
        nonlocal exact
        if rest:
            if not (_independent(G, rest) and _independent(G, core)):
                raise AssertionError("expected independent sets around the doubly local vertex")
            return [(core, [1] * len(core)), (rest, [1] * len(rest))]
        sub_g, sub_r = _sub(G, R, core)
        res = box2_color(sub_g, sub_r)
        exact &= res.exact_pieces
        return [(core, res.colors)]

    def type11_piece(verts: list[int], first: int) -> tuple[list[int], list[int]]:
        nonlocal exact
        sub_g, sub_r = _sub(G, R, verts)
        res = type11_color(sub_g, Type11Rep(sub_r, first))
        exact &= res.exact_pieces
        return verts, res.colors

    only1, only2 = sorted(D1 - D2), sorted(D2 - D1)
    for big, first, other in ((sorted(D1), a, only2), (sorted(D2), b, only1)):
        if _independent(G, other):
            pieces = [type11_piece(big, first), (other, [1] * len(other)), (rest, [1] * len(rest))]
            return _finish(G, _merge(G.n, pieces), bound, exact)
    u, w = next((x, y) for x, y in G.sorted_edges() if x in D1 - D2 and y in D1 - D2)
    third = {}
    for x in (u, w):
        extra = [d for d in R.boxes[x].dims if d != a]
        if not extra:
            raise AssertionError("an edge endpoint outside D2 must have a second local dimension")
        third[x] = extra[0]
    sym = sorted((D1 - D2) | (D2 - D1))
    if third[u] == third[w]:
        c = third[u]
        if not set(sym) <= _local_in(R, c):
            raise AssertionError("symmetric difference should lie in the shared third dimension")
        pieces = [type11_piece(sym, c)] + core_colouring()
    else:
        D3, D4 = _local_in(R, third[u]), _local_in(R, third[w])
        groups = [sorted(set(sym) & D1 & D3), sorted(set(sym) & D1 & D4),
                  sorted(set(sym) & D2 & D3), sorted(set(sym) & D2 & D4)]
        if sorted(x for g in groups for x in g) != sym or not all(_independent(G, g) for g in groups):
            raise AssertionError("symmetric difference should split into four independent sets")
        pieces = [(g, [1] * len(g)) for g in groups] + core_colouring()
    return _finish(G, _merge(G.n, pieces), bound, exact)


def lbox2_bound(r: int) -> float:
    """320 r^3 log(2r)."""
    return 320 * r ** 3 * math.log2(2 * r) if r >= 1 else 0


def lbox2_color(G: Graph, R: Representation) -> ColoringResult:
    """Graphs of local boxicity at most 2 with clique number r: at most
    320 r^3 log(2r) colours, by peeling the two dimensions of a doubly local
    vertex and recursing on its neighbourhood outside them."""
    _check_2local(G, R)
    r = clique_number(G) if G.n else 0
    bound = lbox2_bound(r)
    if G.n == 0:
        return ColoringResult([], 0, bound, True, True)
    found = _doubly_local(R)
    if found is None:
        # complete join of interval graphs, one per dimension, plus universal vertices
        pieces = []
        groups: dict[int | None, list[int]] = {}
        for v, b in enumerate(R.boxes):
            groups.setdefault(b.dims[0] if b.dims else None, []).append(v)
        for key, verts in sorted(groups.items(), key=lambda kv: -1 if kv[0] is None else kv[0]):
            if key is None:
                pieces.append((verts, list(range(1, len(verts) + 1))))
            else:
                pieces.append((verts, _interval_colour([R.boxes[v].get(key) for v in verts])))
        return _finish(G, _merge(G.n, pieces), bound, True)
    if r <= 2:
        res = tf_lbox2_color(G, R)
        return ColoringResult(res.colors, res.count, bound, res.proper, res.exact_pieces)
    v, a, b = found
    D1, D2 = _local_in(R, a), _local_in(R, b)
    rest = sorted(set(range(G.n)) - D1 - D2)
    exact = True
    sub_g, sub_r = _sub(G, R, rest)
    low = lbox2_color(sub_g, sub_r)
    exact &= low.exact_pieces
    pieces = [(rest, low.colors)]
    for verts, first in ((sorted(D1), a), (sorted(D2 - D1), b)):
        sg, sr = _sub(G, R, verts)
        res = type11_color(sg, Type11Rep(sr, first))
        exact &= res.exact_pieces
        pieces.append((verts, res.colors))
    return _finish(G, _merge(G.n, pieces), bound, exact)
