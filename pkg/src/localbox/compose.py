"""Steiner systems, prime windows, gluing block representations, and the
recursive degree/edge drivers built on top of them."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

import numpy as np
import sympy

from .boxrep import (
    Representation,
    add_vertex_dim,
    empty_representation,
    intersect_reps,
    pad_universal,
    points_representation,
    realize,
    verify,
)
from .graph import Graph, PreconditionError, VertexPartition


# -- Steiner systems --------------------------------------------------------------

@dataclass(frozen=True)
class SteinerSystem:
    s: int
    t: int
    k: int
    blocks: tuple[tuple[int, ...], ...]

    @property
    def replication(self) -> int:
        """Blocks through each point, for t = 2."""
        return (self.s - 1) // (self.k - 1)

    def to_text(self) -> str:
        lines = [f"s {self.s}", f"t {self.t}", f"k {self.k}"]
        lines += [" ".join(map(str, b)) for b in self.blocks]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> SteinerSystem:
        rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
        head = {r[0]: int(r[1]) for r in rows[:3]}
        blocks = tuple(tuple(int(x) for x in r) for r in rows[3:])
        return cls(head["s"], head["t"], head["k"], blocks)


def is_prime(q: int) -> bool:
    """Miller-Rabin (sympy) double-checked by trial division."""
    q = int(q)
    mr = bool(sympy.isprime(q))
    if q < 2:
        td = False
    else:
        td = all(q % p for p in range(2, math.isqrt(q) + 1))
    if mr != td:
        raise AssertionError(f"primality tests disagree on {q}")
    return td


def affine_plane(q: int) -> SteinerSystem:
    """Lines of the affine plane over Z/q, point (x, y) numbered x*q + y.
    Lines come slope by slope (0..q-1), then the vertical class; inside a
    class by intercept."""
    if not is_prime(q):
        raise PreconditionError(f"{q} is not prime")
    blocks = []
    for m in range(q):
        for b in range(q):
            blocks.append(tuple(sorted(x * q + (m * x + b) % q for x in range(q))))
    for c in range(q):
        blocks.append(tuple(c * q + y for y in range(q)))
    return SteinerSystem(q * q, 2, q, tuple(blocks))


def complete_graph_steiner(ell: int) -> SteinerSystem:
    """Edges of K_ell as a (2, 2, ell) system."""
    if ell < 2:
        raise PreconditionError("need at least two points")
    return SteinerSystem(ell, 2, 2, tuple(combinations(range(ell), 2)))


def trivial_steiner(s: int) -> SteinerSystem:
    """The single block [s], a (2, s, s) system."""
    return SteinerSystem(s, 2, s, (tuple(range(s)),))


@dataclass(frozen=True)
class SteinerCheck:
    ok: bool
    violation: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def verify_steiner(S: SteinerSystem) -> SteinerCheck:
    for b in S.blocks:
        if len(b) != S.k or len(set(b)) != S.k or not all(0 <= x < S.s for x in b):
            return SteinerCheck(False, f"block {list(b)} is not a {S.k}-subset of [{S.s}]")
    count: dict[tuple[int, ...], int] = {}
    for b in S.blocks:
        for sub in combinations(sorted(b), S.t):
            count[sub] = count.get(sub, 0) + 1
    for sub in combinations(range(S.s), S.t):
        c = count.get(sub, 0)
        if c != 1:
            return SteinerCheck(False, f"{list(sub)} lies in {c} blocks")
    expected = math.comb(S.s, S.t) // math.comb(S.k, S.t)
    if len(S.blocks) != expected:
        return SteinerCheck(False, f"{len(S.blocks)} blocks, expected {expected}")
    return SteinerCheck(True)


# -- prime windows --------------------------------------------------------------

PRIME_THRESHOLD = 3275


def prime_window(t: float) -> tuple[float, float]:
    return t, t + t / (2 * math.log(t) ** 2)


def prime_square_window(t: float) -> tuple[float, float]:
    return t, t + 7 * t / math.log(t) ** 2


def prime_in_window(t: float) -> int:
    """Smallest prime >= t; it lies below t + t/(2 ln^2 t) for t >= 3275."""
    if t < PRIME_THRESHOLD:
        raise PreconditionError(f"t={t} is below {PRIME_THRESHOLD}: no window guarantee")
    q = math.ceil(t)
    while not is_prime(q):
        q += 1
    if q > prime_window(t)[1]:
        raise AssertionError(f"prime {q} outside the window for t={t}")
    return q


def prime_square_in_window(t: float) -> int:
    """Smallest prime q with q^2 >= t; q^2 lies below t + 7t/ln^2 t for t >= 3275^2."""
    if t < PRIME_THRESHOLD ** 2:
        raise PreconditionError(f"t={t} is below {PRIME_THRESHOLD}^2: no window guarantee")
    q = math.isqrt(math.ceil(t))
    while q * q < t or not is_prime(q):
        q += 1
    if q * q > prime_square_window(t)[1]:
        raise AssertionError(f"square {q * q} outside the window for t={t}")
    return q


# -- gluing ------------------------------------------------------------------------

class CompositionError(ValueError):
    pass


def block_vertices(P: VertexPartition, block: Sequence[int]) -> list[int]:
    return P.union(block)


def compose(G: Graph, P: VertexPartition, S: SteinerSystem,
            block_reps: Sequence[Representation]) -> Representation:
    """Pad each block representation to its whole vertex set and intersect.

    Every pair of classes lies in some block, so every non-edge of G is a
    non-edge of some padded block graph; each vertex lies in exactly
    (s-1)/(k-1) blocks, which bounds its locality.
    """
    if S.t != 2 or len(P.classes) != S.s or P.n != G.n:
        raise CompositionError("partition and Steiner system do not match")
    if len(block_reps) != len(S.blocks):
        raise CompositionError(f"{len(block_reps)} block representations for {len(S.blocks)} blocks")
    padded = []
    for j, (blk, R) in enumerate(zip(S.blocks, block_reps)):
        W = block_vertices(P, blk)
        if R.n != len(W) or realize(R) != G.induced(W):
            raise CompositionError(f"representation of block {j} does not realize its induced subgraph")
        padded.append(pad_universal(R, G, W, check=False))
    out = intersect_reps(padded) if padded else empty_representation(G.n)
    if realize(out) != G:
        raise AssertionError("composition does not realize G")
    cap = S.replication * max((R.max_locality for R in block_reps), default=0)
    if out.max_locality > cap:
        raise AssertionError(f"composed locality {out.max_locality} exceeds {cap}")
    return out


# -- balanced partitions -------------------------------------------------------------

def default_slack(q: int, delta: int) -> float:
    """4 sqrt(q ln D / D)."""
    if delta <= 1:
        return 4.0
    return 4 * math.sqrt(q * math.log(delta) / delta)


@dataclass(frozen=True)
class PartitionResult:
    ok: bool
    partition: VertexPartition
    attempts: int
    violations: int
    bound: float


def block_degree_violations(G: Graph, P: VertexPartition, S: SteinerSystem, bound: float) -> int:
    bad = 0
    for blk in S.blocks:
        W = 0
        for i in blk:
            for v in P.classes[i]:
                W |= 1 << v
        if any((G.adj[v] & W).bit_count() > bound for v in range(G.n) if W >> v & 1):
            bad += 1
    return bad


def balanced_partition(G: Graph, q: int, slack: float, seed=None,
                       max_retries: int | None = None) -> PartitionResult:
    """Uniform random assignment to q^2 classes, resampled until every block
    union of the affine plane has maximum degree <= (1 + slack) D / q."""
    if G.n == 0:
        raise PreconditionError("graph must be nonempty")
    S = affine_plane(q)
    bound = (1 + slack) * G.max_degree / q
    if max_retries is None:
        max_retries = math.ceil(10 * q * q * math.log(G.n + 2))
    rng = np.random.default_rng(seed)
    best = None
    for attempt in range(1, max_retries + 1):
        P = VertexPartition.from_labels(rng.integers(0, q * q, G.n), q * q)
        bad = block_degree_violations(G, P, S, bound)
        if best is None or bad < best[1]:
            best = (P, bad)
        if bad == 0:
            return PartitionResult(True, P, attempt, 0, bound)
    return PartitionResult(False, best[0], max_retries, best[1], bound)


# -- alpha -----------------------------------------------------------------------------

@dataclass(frozen=True)
class AlphaValue:
    t: float
    value: float
    tail_bound: float
    terms: int


def alpha(t: float, tol: float = 1e-15) -> AlphaValue:
    """prod_{i>=1} (1 + 18 (4/9)^i / ln^2 t)^-1, truncated once the
    geometric tail a r^(N+1)/(1-r) drops below tol."""
    if t < 2:
        raise ValueError("alpha is defined for t >= 2")
    if tol <= 0:
        raise ValueError("tol must be positive")
    a = 18 / math.log(t) ** 2
    r = 4 / 9
    log_val, i = 0.0, 0
    while True:
        i += 1
        log_val -= math.log1p(a * r ** i)
        tail = a * r ** (i + 1) / (1 - r)
        if tail <= tol:
            break
    return AlphaValue(t, math.exp(log_val), tail, i)


# -- drivers -----------------------------------------------------------------------------

class DriverRefused(RuntimeError):
    pass


@dataclass
class DriverResult:
    representation: Representation
    locality: int
    trace: list[str] = field(default_factory=list)


def _audited(G: Graph, R: Representation, trace: list[str]) -> DriverResult:
    loc = R.max_locality
    rep = verify(R, G, loc)
    if not rep.ok:
        raise AssertionError(f"driver output failed verification: {rep.first_violation}")
    return DriverResult(R, loc, trace)


def _degree_rec(G: Graph, q_override: int | None, exact_cutoff: int, seq: np.random.SeedSequence,
                slack: float | None, trace: list[str], depth: int) -> Representation:
    from .exact import lbox_exact
    from .interval import is_interval

    pad = "  " * depth
    if G.m == G.n * (G.n - 1) // 2:
        trace.append(f"{pad}n={G.n}: complete, 0 dimensions")
        return empty_representation(G.n)
    if G.m == 0:
        trace.append(f"{pad}n={G.n}: edgeless, distinct points")
        return points_representation(G.n)
    res = is_interval(G)
    if res.is_interval:
        trace.append(f"{pad}n={G.n}: interval graph, 1 dimension")
        return res.model.to_representation()
    if G.n <= exact_cutoff:
        sol = lbox_exact(G)
        trace.append(f"{pad}n={G.n}: exact, local boxicity {sol.value}")
        return sol.certificate
    delta = G.max_degree
    if q_override is not None:
        q = q_override
    elif delta > 1 and delta / math.log(delta) >= PRIME_THRESHOLD ** 2:
        q = prime_square_in_window(delta / math.log(delta))
    else:
        raise DriverRefused(
            f"n={G.n} exceeds exact_cutoff={exact_cutoff}, max degree {delta} is below the "
            "range of the prime-window machinery, and no q_override was given")
    sl = default_slack(q, delta) if slack is None else slack
    child, = seq.spawn(1)
    part = balanced_partition(G, q, sl, seed=child)
    if not part.ok:
        raise DriverRefused(f"balanced partition failed after {part.attempts} attempts "
                            f"({part.violations} violating blocks)")
    S = affine_plane(q)
    trace.append(f"{pad}n={G.n}: max degree {delta}, q={q}, partition in {part.attempts} attempt(s)")
    reps = []
    for blk in S.blocks:
        W = part.partition.union(blk)
        if len(W) >= G.n:
            raise DriverRefused(f"a block union keeps all {G.n} vertices; recursion would not shrink")
        sub_seq, = seq.spawn(1)
        reps.append(_degree_rec(G.induced(W), q_override, exact_cutoff, sub_seq, slack, trace, depth + 1))
    return compose(G, part.partition, S, reps)


def lbox_by_degree(G: Graph, q_override: int | None = None, exact_cutoff: int = 8,
                   seed=0, slack: float | None = None) -> DriverResult:
    """Recursive partition driver; the reported locality is audited."""
    trace: list[str] = []
    R = _degree_rec(G, q_override, exact_cutoff, np.random.SeedSequence(seed), slack, trace, 0)
    return _audited(G, R, trace)


def lbox_by_edges(G: Graph, q_override: int | None = None, exact_cutoff: int = 8,
                  seed=0, slack: float | None = None) -> DriverResult:
    """Peel the vertices of degree >= sqrt(m), represent the rest by the
    degree driver, then add the peeled vertices back one dimension each."""
    if G.m == 0:
        R = points_representation(G.n)
        return _audited(G, R, [f"edgeless on {G.n} vertices"])
    root = math.sqrt(G.m)
    S = [v for v in range(G.n) if G.degree(v) >= root]
    rest = [v for v in range(G.n) if G.degree(v) < root]
    trace = [f"peeling {len(S)} vertices of degree >= sqrt(m) = {root:.3f}"]
    inner = lbox_by_degree(G.induced(rest), q_override, exact_cutoff, seed, slack)
    trace += inner.trace
    R = inner.representation
    present = list(rest)
    for v in S:
        present_set = sorted(present + [v])
        pos = {x: i for i, x in enumerate(present_set)}
        nbrs = [pos[u] for u in G.nbrs(v) if u in pos]
        R = add_vertex_dim(R, pos[v], nbrs)
        present.append(v)
    return _audited(G, R, trace)
