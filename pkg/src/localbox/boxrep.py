"""Local box representations.

A representation assigns to every vertex a box in some dimension ``dims``;
each box is stored sparsely as the dimensions where it is bounded, every
other coordinate being the whole real line.  Besides building and checking
representations this module converts between the three equivalent views
(boxes, co-interval covers of the complement, families of interval
supergraphs) and implements the fixed-width binary codec.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Real
from typing import Iterable, Mapping, Sequence

import numpy as np

from .graph import Graph, complement

Interval = tuple  # (lo, hi), closed and bounded


class RepresentationError(ValueError):
    pass


class CoverValidationError(ValueError):
    pass


class CodecError(ValueError):
    pass


def _check_interval(iv) -> tuple:
    lo, hi = iv
    if not isinstance(lo, Real) or not isinstance(hi, Real):
        raise RepresentationError(f"interval endpoints must be real numbers, got {iv!r}")
    if lo > hi:
        raise RepresentationError(f"empty interval [{lo}, {hi}]")
    return (lo, hi)


@dataclass(frozen=True)
class LocalBox:
    """Box bounded in finitely many dimensions, sorted by dimension index."""

    items: tuple[tuple[int, Real, Real], ...] = ()

    def __post_init__(self):
        dims = [d for d, _, _ in self.items]
        if dims != sorted(set(dims)) or any(d < 0 for d in dims):
            raise RepresentationError(f"box dimensions must be distinct and sorted: {dims}")
        for _, lo, hi in self.items:
            _check_interval((lo, hi))

    @classmethod
    def of(cls, bounded: Mapping[int, Interval] | None = None) -> LocalBox:
        bounded = bounded or {}
        return cls(tuple((int(d), *_check_interval(iv)) for d, iv in sorted(bounded.items())))

    @property
    def locality(self) -> int:
        return len(self.items)

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(d for d, _, _ in self.items)

    def get(self, dim: int) -> Interval | None:
        for d, lo, hi in self.items:
            if d == dim:
                return (lo, hi)
        return None

    def as_dict(self) -> dict[int, Interval]:
        return {d: (lo, hi) for d, lo, hi in self.items}

    def intersects(self, other: LocalBox) -> bool:
        mine = self.as_dict()
        for d, lo, hi in other.items:
            iv = mine.get(d)
            if iv is not None and (iv[1] < lo or hi < iv[0]):
                return False
        return True


ALL = LocalBox()


@dataclass(frozen=True)
class Representation:
    n: int
    dims: int
    boxes: tuple[LocalBox, ...]

    def __post_init__(self):
        if len(self.boxes) != self.n:
            raise RepresentationError(f"expected {self.n} boxes, got {len(self.boxes)}")
        for v, b in enumerate(self.boxes):
            if b.items and b.items[-1][0] >= self.dims:
                raise RepresentationError(
                    f"vertex {v} bounded in dimension {b.items[-1][0]} >= dims={self.dims}"
                )

    @classmethod
    def build(cls, n: int, dims: int, boxes: Sequence[Mapping[int, Interval]]) -> Representation:
        return cls(n, dims, tuple(LocalBox.of(b) for b in boxes))

    def locality(self, v: int) -> int:
        return self.boxes[v].locality

    def localities(self) -> list[int]:
        return [b.locality for b in self.boxes]

    @property
    def max_locality(self) -> int:
        return max(self.localities(), default=0)

    def members(self, dim: int) -> list[tuple[int, Real, Real]]:
        """(vertex, lo, hi) for every vertex bounded in ``dim``."""
        out = []
        for v, b in enumerate(self.boxes):
            iv = b.get(dim)
            if iv is not None:
                out.append((v, iv[0], iv[1]))
        return out

    def by_dim(self) -> list[list[tuple[int, Real, Real]]]:
        cols: list[list] = [[] for _ in range(self.dims)]
        for v, b in enumerate(self.boxes):
            for d, lo, hi in b.items:
                cols[d].append((v, lo, hi))
        return cols

    def restrict(self, vertices: Iterable[int]) -> Representation:
        """Representation of the induced subgraph on ``vertices`` (relabelled
        in increasing order), keeping the dimension indices."""
        vs = sorted(set(vertices))
        return Representation(len(vs), self.dims, tuple(self.boxes[v] for v in vs))

    # -- text format ---------------------------------------------------
    def to_json(self) -> str:
        def enc(x):
            if isinstance(x, Fraction):
                return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
            return x

        doc = {
            "n": self.n,
            "dims": self.dims,
            "boxes": [[[d, enc(lo), enc(hi)] for d, lo, hi in b.items] for b in self.boxes],
        }
        return json.dumps(doc, separators=(",", ":")) + "\n"

    @classmethod
    def from_json(cls, text: str) -> Representation:
        def dec(x):
            if isinstance(x, str):
                return Fraction(x)
            if isinstance(x, bool) or not isinstance(x, (int, float)):
                raise RepresentationError(f"bad endpoint {x!r}")
            return x

        try:
            doc = json.loads(text)
            boxes = tuple(
                LocalBox(tuple((int(d), dec(lo), dec(hi)) for d, lo, hi in sorted(b, key=lambda t: t[0])))
                for b in doc["boxes"]
            )
            return cls(int(doc["n"]), int(doc["dims"]), boxes)
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, RepresentationError):
                raise
            raise RepresentationError(f"malformed representation document: {exc}") from exc


def empty_representation(n: int) -> Representation:
    """All-R boxes in dimension 0: the complete graph."""
    return Representation(n, 0, (ALL,) * n)


# -- realize / verify ------------------------------------------------------------

def _ranks(values) -> dict:
    return {x: i for i, x in enumerate(sorted(set(values)))}


def intersection_matrix(R: Representation) -> np.ndarray:
    """Boolean n x n matrix of pairwise box intersection (diagonal True)."""
    meet = np.ones((R.n, R.n), dtype=bool)
    for col in R.by_dim():
        if len(col) < 2:
            continue
        rank = _ranks([x for _, lo, hi in col for x in (lo, hi)])
        vs = np.fromiter((v for v, _, _ in col), dtype=np.intp, count=len(col))
        lo = np.fromiter((rank[a] for _, a, _ in col), dtype=np.intp, count=len(col))
        hi = np.fromiter((rank[b] for _, _, b in col), dtype=np.intp, count=len(col))
        apart = (hi[:, None] < lo[None, :]) | (hi[None, :] < lo[:, None])
        meet[np.ix_(vs, vs)] &= ~apart
    return meet


def realize(R: Representation) -> Graph:
    meet = intersection_matrix(R)
    us, vs = np.nonzero(np.triu(meet, 1))
    return Graph(R.n, zip(us.tolist(), vs.tolist()))


@dataclass(frozen=True)
class VerifyReport:
    ok: bool
    first_violation: str | None
    max_locality: int
    wrong_pairs: int = 0
    over_local: tuple[int, ...] = ()

    def __bool__(self) -> bool:
        return self.ok


def verify(R: Representation, G: Graph, d: int) -> VerifyReport:
    """Check that ``R`` is a ``d``-local box representation of ``G``."""
    if R.n != G.n:
        raise ValueError(f"representation has {R.n} vertices, graph has {G.n}")
    H = realize(R)
    wrong = sorted(H.edges ^ G.edges)
    over = tuple(v for v in range(R.n) if R.locality(v) > d)
    first = None
    if wrong:
        u, v = wrong[0]
        kind = "intersect but are not adjacent" if (u, v) in H.edges else "are adjacent but boxes are disjoint"
        first = f"vertices {u} and {v} {kind}"
    elif over:
        first = f"vertex {over[0]} is local in {R.locality(over[0])} > {d} dimensions"
    return VerifyReport(not wrong and not over, first, R.max_locality, len(wrong), over)


# -- dimension plumbing ------------------------------------------------------------

def prune_dims(R: Representation) -> Representation:
    """Drop every dimension in which all boxes are unbounded."""
    used = sorted({d for b in R.boxes for d in b.dims})
    remap = {d: i for i, d in enumerate(used)}
    boxes = tuple(LocalBox(tuple((remap[d], lo, hi) for d, lo, hi in b.items)) for b in R.boxes)
    return Representation(R.n, len(used), boxes)


def normalize(R: Representation) -> Representation:
    """Replace endpoints, per dimension, by their ranks 1, 2, ... (at most 2n)."""
    ranks = [_ranks([x for _, lo, hi in col for x in (lo, hi)]) for col in R.by_dim()]
    boxes = tuple(
        LocalBox(tuple((d, ranks[d][lo] + 1, ranks[d][hi] + 1) for d, lo, hi in b.items))
        for b in R.boxes
    )
    return Representation(R.n, R.dims, boxes)


def is_normalized(R: Representation) -> bool:
    top = 2 * R.n
    return all(
        isinstance(lo, int) and isinstance(hi, int) and 1 <= lo <= hi <= top
        for b in R.boxes for _, lo, hi in b.items
    )


def add_vertex_dim(R: Representation, v: int, nbrs: Iterable[int]) -> Representation:
    """Insert vertex ``v`` into a representation of ``G - v``.

    ``R`` covers the other vertices in increasing label order.  One new
    dimension is appended: ``v`` is the point 0 there, non-neighbours the
    point 1, and neighbours stay unbounded; ``v`` is unbounded elsewhere.
    """
    n = R.n + 1
    if not 0 <= v < n:
        raise ValueError(f"vertex {v} out of range for n={n}")
    nbrs = set(nbrs)
    if v in nbrs or not nbrs <= set(range(n)):
        raise ValueError("neighbourhood must be a subset of the other vertices")
    new = R.dims
    boxes = []
    for old, box in enumerate(R.boxes):
        label = old if old < v else old + 1
        if label in nbrs:
            boxes.append(box)
        else:
            boxes.append(LocalBox(box.items + ((new, 1, 1),)))
    boxes.insert(v, LocalBox(((new, 0, 0),)))
    return Representation(n, new + 1, tuple(boxes))


def angle_graph(G: Graph, S: Iterable[int]) -> Graph:
    """G<S>: every pair not inside S becomes an edge."""
    S = set(S)
    return Graph(G.n, ((u, v) for u in range(G.n) for v in range(u + 1, G.n)
                       if G.has_edge(u, v) or u not in S or v not in S))


def bipartition_angle_graph(G: Graph, A: Iterable[int]) -> Graph:
    """G<A,B>: both sides of the bipartition made into cliques."""
    A = set(A)
    return Graph(G.n, ((u, v) for u in range(G.n) for v in range(u + 1, G.n)
                       if G.has_edge(u, v) or ((u in A) == (v in A))))


def pad_universal(R: Representation, G: Graph, S: Iterable[int], check: bool = True) -> Representation:
    """Lift a representation of G[S] (vertices in increasing order of S) to
    one of G<S>, the vertices outside S becoming all-R boxes."""
    vs = sorted(set(S))
    if R.n != len(vs):
        raise RepresentationError(f"representation has {R.n} vertices, |S| = {len(vs)}")
    if check and realize(R) != G.induced(vs):
        raise RepresentationError("representation does not realize G[S]")
    boxes = [ALL] * G.n
    for i, v in enumerate(vs):
        boxes[v] = R.boxes[i]
    return Representation(G.n, R.dims, tuple(boxes))


def intersect_reps(reps: Sequence[Representation]) -> Representation:
    """Concatenate dimensions; the realized graph is the intersection."""
    if not reps:
        raise ValueError("need at least one representation")
    n = reps[0].n
    if any(r.n != n for r in reps):
        raise ValueError("representations disagree on the vertex count")
    offset, items = 0, [[] for _ in range(n)]
    for r in reps:
        for v, b in enumerate(r.boxes):
            items[v].extend((d + offset, lo, hi) for d, lo, hi in b.items)
        offset += r.dims
    return Representation(n, offset, tuple(LocalBox(tuple(it)) for it in items))


def points_representation(n: int) -> Representation:
    """1-local representation of the edgeless graph (distinct points)."""
    if n <= 1:
        return empty_representation(n)
    return Representation(n, 1, tuple(LocalBox(((0, i, i),)) for i in range(n)))


# -- co-interval covers ----------------------------------------------------------

@dataclass(frozen=True)
class CoverPart:
    support: frozenset[int]
    edges: frozenset[tuple[int, int]]

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[int, int]]) -> CoverPart:
        es = frozenset((u, v) if u < v else (v, u) for u, v in edges)
        return cls(frozenset(x for e in es for x in e), es)


@dataclass(frozen=True)
class CoIntervalCover:
    """Co-interval subgraphs of ``base`` (the complement of the represented
    graph) whose edges cover ``base``."""

    base: Graph
    parts: tuple[CoverPart, ...]

    def loads(self) -> list[int]:
        load = [0] * self.base.n
        for p in self.parts:
            for v in p.support:
                load[v] += 1
        return load

    @property
    def max_load(self) -> int:
        return max(self.loads(), default=0)

    def validate(self) -> None:
        from .interval import is_interval

        covered = set()
        for i, p in enumerate(self.parts):
            if not p.edges <= self.base.edges:
                raise CoverValidationError(f"part {i} uses a non-edge of the base graph")
            touched = {x for e in p.edges for x in e}
            if touched != set(p.support):
                raise CoverValidationError(f"part {i}: support must be its non-isolated vertices")
            if not is_interval(_part_complement(p)).is_interval:
                raise CoverValidationError(f"part {i} is not co-interval")
            covered |= p.edges
        if covered != self.base.edges:
            missing = sorted(self.base.edges - covered)[0]
            raise CoverValidationError(f"edge {missing} of the base graph is not covered")


def _part_complement(p: CoverPart) -> Graph:
    vs = sorted(p.support)
    idx = {v: i for i, v in enumerate(vs)}
    return complement(Graph(len(vs), ((idx[u], idx[v]) for u, v in p.edges)))


def to_cover(R: Representation, on: Graph, check: bool = True) -> CoIntervalCover:
    if check and realize(R) != on:
        raise RepresentationError("representation does not realize the given graph")
    parts = []
    for col in R.by_dim():
        es = [(min(u, v), max(u, v)) for i, (u, a, b) in enumerate(col)
              for (v, c, d) in col[i + 1:] if b < c or d < a]
        if es:
            parts.append(CoverPart.from_edges(es))
    return CoIntervalCover(complement(on), tuple(parts))


def from_cover(C: CoIntervalCover, models: Sequence | None = None) -> Representation:
    """One dimension per part.  ``models[i]``, if given, is an interval model
    of the complement of part ``i`` on its support, as a mapping from vertex
    to interval; otherwise a model is computed."""
    from .interval import is_interval

    for i, p in enumerate(C.parts):
        if not p.edges <= C.base.edges:
            raise CoverValidationError(f"part {i} uses a non-edge of the base graph")
    if set().union(*(p.edges for p in C.parts)) != set(C.base.edges):
        raise CoverValidationError("parts do not cover every edge of the base graph")
    items: list[list] = [[] for _ in range(C.base.n)]
    for i, p in enumerate(C.parts):
        vs = sorted(p.support)
        if models is not None and models[i] is not None:
            model = models[i]
            ivs = [model[v] for v in vs]
            sub = _part_complement(p)
            got = Graph(len(vs), ((a, b) for a in range(len(vs)) for b in range(a + 1, len(vs))
                                  if not (ivs[a][1] < ivs[b][0] or ivs[b][1] < ivs[a][0])))
            if got != sub:
                raise CoverValidationError(f"supplied model for part {i} is wrong")
        else:
            res = is_interval(_part_complement(p))
            if not res.is_interval:
                raise CoverValidationError(f"part {i} is not co-interval ({res.obstruction})")
            ivs = list(res.model.intervals)
        for v, iv in zip(vs, ivs):
            items[v].append((i, iv[0], iv[1]))
    return Representation(C.base.n, len(C.parts), tuple(LocalBox(tuple(it)) for it in items))


# -- interval families -------------------------------------------------------------

@dataclass(frozen=True)
class FamilyMember:
    graph: Graph
    universal: tuple[bool, ...]


@dataclass(frozen=True)
class IntervalFamily:
    n: int
    members: tuple[FamilyMember, ...] = field(default=())

    def intersection(self) -> Graph:
        edges = None
        for m in self.members:
            edges = set(m.graph.edges) if edges is None else edges & m.graph.edges
        if edges is None:
            edges = {(u, v) for u in range(self.n) for v in range(u + 1, self.n)}
        return Graph(self.n, edges)

    def nonuniversal_counts(self) -> list[int]:
        return [sum(not m.universal[v] for m in self.members) for v in range(self.n)]


def to_family(R: Representation) -> IntervalFamily:
    members = []
    for d in range(R.dims):
        sub = Representation(R.n, 1, tuple(
            LocalBox(((0,) + b.get(d),)) if b.get(d) is not None else ALL for b in R.boxes))
        members.append(FamilyMember(realize(sub), tuple(b.get(d) is None for b in R.boxes)))
    return IntervalFamily(R.n, tuple(members))


def from_family(F: IntervalFamily) -> Representation:
    from .interval import is_interval

    items: list[list] = [[] for _ in range(F.n)]
    full = (1 << F.n) - 1
    for i, m in enumerate(F.members):
        for v in range(F.n):
            if m.universal[v] and (m.graph.adj[v] | 1 << v) != full:
                raise CoverValidationError(f"member {i}: vertex {v} flagged universal but is not")
        vs = [v for v in range(F.n) if not m.universal[v]]
        res = is_interval(m.graph.induced(vs))
        if not res.is_interval:
            raise CoverValidationError(f"member {i} is not an interval graph ({res.obstruction})")
        for v, iv in zip(vs, res.model.intervals):
            items[v].append((i, iv[0], iv[1]))
    return Representation(F.n, len(F.members), tuple(LocalBox(tuple(it)) for it in items))


# -- binary codec ------------------------------------------------------------------

def _clog2(x: int) -> int:
    return (x - 1).bit_length() if x > 1 else 0


def field_widths(n: int, d: int) -> tuple[int, int, int]:
    """Bit widths of (locality count, dimension index, endpoint)."""
    return _clog2(d) + 1, _clog2(d * n), _clog2(2 * n)


def encode(R: Representation, d: int) -> str:
    """Encode a normalized, pruned, ``d``-local representation as a string of
    '0'/'1'.  Per vertex: its locality, then ``(index, lo-1, hi-1)`` for each
    bounded dimension in increasing order, all fields big-endian."""
    if d < 2:
        raise CodecError("the codec requires d >= 2")
    if R.max_locality > d:
        raise CodecError(f"representation is {R.max_locality}-local, more than d={d}")
    if R.dims > d * R.n:
        raise CodecError(f"{R.dims} dimensions exceed d*n={d * R.n}; prune first")
    if not is_normalized(R):
        raise CodecError("endpoints must be integers in [1, 2n]; normalize first")
    wc, wi, we = field_widths(R.n, d)
    out = []
    for b in R.boxes:
        out.append(format(b.locality, f"0{wc}b"))
        for dim, lo, hi in b.items:
            if wi:
                out.append(format(dim, f"0{wi}b"))
            if we:
                out.append(format(lo - 1, f"0{we}b") + format(hi - 1, f"0{we}b"))
    return "".join(out)


def decode(bits: str, n: int, d: int) -> Representation:
    wc, wi, we = field_widths(n, d)
    pos = 0

    def take(w: int) -> int:
        nonlocal pos
        if pos + w > len(bits):
            raise CodecError(f"bit string ends early at offset {pos}")
        chunk = bits[pos:pos + w]
        pos += w
        return int(chunk, 2) if w else 0

    boxes, top = [], -1
    for _ in range(n):
        k = take(wc)
        if k > d:
            raise CodecError(f"locality {k} exceeds d={d} at offset {pos - wc}")
        items = []
        for _ in range(k):
            dim = take(wi)
            lo, hi = take(we) + 1, take(we) + 1
            items.append((dim, lo, hi))
            top = max(top, dim)
        boxes.append(LocalBox(tuple(items)))
    if set(bits[pos:]) - {"0"}:
        raise CodecError(f"trailing data after offset {pos}")
    return Representation(n, top + 1, tuple(boxes))


HEADER_BITS = 32


def pack(R: Representation, d: int) -> bytes:
    """File container: 32-bit header (n:12, d:8, dims:12) + payload, zero padded."""
    if R.n >= 1 << 12 or d >= 1 << 8 or R.dims >= 1 << 12:
        raise CodecError("header fields overflow (n < 4096, d < 256, dims < 4096)")
    bits = format(R.n, "012b") + format(d, "08b") + format(R.dims, "012b") + encode(R, d)
    bits += "0" * (-len(bits) % 8)
    return int(bits, 2).to_bytes(len(bits) // 8, "big") if bits else b""


def unpack(data: bytes) -> tuple[Representation, int]:
    if len(data) < 4:
        raise CodecError("container shorter than its header")
    bits = format(int.from_bytes(data, "big"), f"0{8 * len(data)}b")
    n, d, dims = int(bits[:12], 2), int(bits[12:20], 2), int(bits[20:32], 2)
    R = decode(bits[32:], n, d)
    if R.dims > dims:
        raise CodecError("payload uses more dimensions than the header declares")
    return Representation(n, dims, R.boxes), d
