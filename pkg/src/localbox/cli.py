"""Command line: exact solvers, verification, constructions, colouring,
Monte Carlo, bound tables, Steiner systems and the codec.

Exit status: 0 success, 1 verification or construction failure, 2 usage
or input error.
"""

from __future__ import annotations

import argparse
import os
import sys
import tempfile
from pathlib import Path

from . import bounds, coloring, compose, exact, girth5, gnp, interval
from .boxrep import Representation, RepresentationError, normalize, pack, prune_dims, unpack, verify
from .graph import Graph, GraphFormatError, PreconditionError, complement, emit_graph, read_graph


class Failure(Exception):
    """Verification or construction failure (exit 1)."""


def _write(path: str | os.PathLike, data: str | bytes) -> None:
    """Write atomically: temp file in the same directory, then rename."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    mode = "wb" if isinstance(data, bytes) else "w"
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.")
    try:
        with os.fdopen(fd, mode) as fh:
            fh.write(data)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _read_rep(path: str) -> Representation:
    return Representation.from_json(Path(path).read_text())


def _emit_rep(G: Graph, R: Representation, d: int, out: str | None, default: str) -> str:
    rep = verify(R, G, d)
    if not rep.ok:
        raise Failure(f"construction failed verification: {rep.first_violation}")
    path = out or default
    _write(path, R.to_json())
    return path


# -- subcommands ---------------------------------------------------------------------

def cmd_exact(a) -> int:
    G = read_graph(a.graph)
    if a.what == "chi":
        res = exact.chromatic_exact(G, budget=a.budget)
        if res.status != "exact":
            print(f"unknown (>= {res.lower})")
            return 1
        path = a.out or f"{a.graph}.chi.csv"
        _write(path, "vertex,color\n" + "".join(f"{v},{c}\n" for v, c in enumerate(res.coloring)))
        print(res.value)
        print(f"certificate: {path}")
        return 0
    solver = exact.lbox_exact if a.what == "lbox" else exact.box_exact
    res = solver(G, budget=a.budget)
    if res.status != "exact":
        print(f"unknown (>= {res.lower}): {res.lower_bound_witness}")
        return 1
    path = a.out or f"{a.graph}.{a.what}.rep"
    _write(path, res.certificate.to_json())
    print(res.value)
    print(f"certificate: {path}")
    print(f"lower bound: {res.lower_bound_witness}")
    return 0


def cmd_verify(a) -> int:
    G = read_graph(a.graph)
    R = _read_rep(a.rep)
    if R.n != G.n:
        raise Failure(f"representation has {R.n} vertices, graph has {G.n}")
    rep = verify(R, G, a.d)
    if rep.ok:
        print(f"ok: {a.d}-local representation (max locality {rep.max_locality})")
        return 0
    print(f"violation: {rep.first_violation}")
    return 1


def cmd_construct(a) -> int:
    kind = a.kind
    if kind == "shift":
        G = complement(coloring.shift_graph(a.n))
        R = coloring.shift_complement_rep(a.n)
        d, default = 2, f"shift{a.n}.rep"
        if a.graph_out:
            _write(a.graph_out, emit_graph(G, "graph6"))
    elif kind == "gnp":
        G = gnp.sample_gnp(a.n, a.np / a.n, seed=a.seed).graph
        try:
            res = gnp.gnp_rep(G, a.np, a.epsilon, seed=a.seed, max_retries=a.retries)
        except gnp.PipelineFailure as exc:
            raise Failure(str(exc)) from exc
        R, d, default = res.representation, res.bound, f"gnp{a.n}_s{a.seed}.rep"
        _write(a.graph_out or f"{a.out or default}.g6", emit_graph(G, "graph6"))
    else:
        if a.graph is None:
            raise PreconditionError(f"construct {kind} needs a graph file")
        G = read_graph(a.graph)
        default = f"{a.graph}.{kind}.rep"
        if kind == "gcreg":
            res = girth5.gcreg_rep(G)
            R, d = res.representation, res.value
        elif kind == "tree2box":
            R, d = interval.tree_two_box(G), 2
        elif kind in ("degree", "edges"):
            driver = compose.lbox_by_degree if kind == "degree" else compose.lbox_by_edges
            try:
                res = driver(G, q_override=a.q, exact_cutoff=a.cutoff, seed=a.seed)
            except compose.DriverRefused as exc:
                raise Failure(str(exc)) from exc
            R, d = res.representation, res.locality
        else:
            raise PreconditionError(f"unknown construction {kind}")
    path = _emit_rep(G, R, d, a.out, default)
    print(f"verified {d}-local representation with {R.dims} dimensions -> {path}")
    return 0


def cmd_color(a) -> int:
    G = read_graph(a.graph)
    R = _read_rep(a.rep)
    if a.kind == "lbox2":
        res = coloring.lbox2_color(G, R)
    elif a.kind == "tf":
        res = coloring.tf_lbox2_color(G, R)
    else:
        res = coloring.type11_color(G, coloring.Type11Rep(R, a.first_dim))
    if a.out:
        _write(a.out, res.csv())
    print(f"colors={res.count} bound={res.bound:g} proper={res.proper} subcontract={res.subcontract}")
    return 0 if res.proper else 1


def cmd_mc(a) -> int:
    est = gnp.multicyclic_mc(a.n, a.c, a.trials, seed=a.seed)
    text = gnp.CSV_HEADER + "\n" + est.csv_row() + "\n"
    if a.out:
        _write(a.out, text)
    sys.stdout.write(text)
    return 0


def cmd_bounds(a) -> int:
    if a.what == "counting":
        reports = [bounds.counting_upper(a.n, a.d)]
    else:
        reports = bounds.lower_bound_table(n=a.n, epsilon=a.epsilon, delta=a.delta, np_=a.np, m=a.m, g=a.g)
    text = bounds.table_csv(reports)
    if a.out:
        _write(a.out, text)
    sys.stdout.write(text)
    return 0


def cmd_steiner(a) -> int:
    S = compose.affine_plane(a.q)
    check = compose.verify_steiner(S)
    if not check.ok:
        raise Failure(check.violation)
    if a.out:
        _write(a.out, S.to_text())
    else:
        sys.stdout.write(S.to_text())
    return 0


def cmd_codec(a) -> int:
    if a.op == "encode":
        R = prune_dims(normalize(_read_rep(a.input)))
        data = pack(R, a.d)
        _write(a.out, data)
        print(f"{len(data)} bytes ({R.n} vertices, d={a.d}) -> {a.out}")
    else:
        R, d = unpack(Path(a.input).read_bytes())
        _write(a.out, R.to_json())
        print(f"decoded {R.n} vertices, {R.dims} dimensions, d={d} -> {a.out}")
    return 0


# -- parser ------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="localbox", description="Local box representations of graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("exact", help="exact lbox, box or chromatic number")
    s.add_argument("what", choices=["lbox", "box", "chi"])
    s.add_argument("graph")
    s.add_argument("--budget", type=float, default=None, help="time budget in seconds")
    s.add_argument("--out", help="certificate path")
    s.set_defaults(func=cmd_exact)

    s = sub.add_parser("verify", help="check a representation against a graph")
    s.add_argument("graph")
    s.add_argument("rep")
    s.add_argument("--d", type=int, required=True)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("construct", help="build a verified representation")
    s.add_argument("kind", choices=["gcreg", "gnp", "degree", "edges", "shift", "tree2box"])
    s.add_argument("graph", nargs="?")
    s.add_argument("--n", type=int)
    s.add_argument("--np", type=float, help="expected degree n*p (gnp)")
    s.add_argument("--epsilon", type=float, default=0.5)
    s.add_argument("--retries", type=int, default=5)
    s.add_argument("--q", type=int, default=None, help="prime for the partition driver")
    s.add_argument("--cutoff", type=int, default=8, help="exact solver cutoff")
    s.add_argument("--seed", type=int)
    s.add_argument("--out")
    s.add_argument("--graph-out", help="also write the represented graph (graph6)")
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("color", help="colour a graph from a 2-local representation")
    s.add_argument("kind", choices=["lbox2", "tf", "type11"])
    s.add_argument("graph")
    s.add_argument("rep")
    s.add_argument("--first-dim", type=int, default=0)
    s.add_argument("--out", help="CSV of vertex,color")
    s.set_defaults(func=cmd_color)

    s = sub.add_parser("mc", help="Monte Carlo experiments")
    s.add_argument("experiment", choices=["multicyclic"])
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--c", type=float, required=True)
    s.add_argument("--trials", type=int, required=True)
    s.add_argument("--seed", type=int, required=True)
    s.add_argument("--out")
    s.set_defaults(func=cmd_mc)

    s = sub.add_parser("bounds", help="formula evaluators")
    s.add_argument("what", choices=["table", "counting"])
    s.add_argument("--n", type=int)
    s.add_argument("--d", type=int)
    s.add_argument("--epsilon", type=float)
    s.add_argument("--delta", type=int)
    s.add_argument("--np", type=float)
    s.add_argument("--m", type=int)
    s.add_argument("--g", type=int)
    s.add_argument("--out")
    s.set_defaults(func=cmd_bounds)

    s = sub.add_parser("steiner", help="Steiner systems")
    s.add_argument("family", choices=["affine"])
    s.add_argument("--q", type=int, required=True)
    s.add_argument("--out")
    s.set_defaults(func=cmd_steiner)

    s = sub.add_parser("codec", help="binary representation codec")
    s.add_argument("op", choices=["encode", "decode"])
    s.add_argument("input")
    s.add_argument("--d", type=int, default=2)
    s.add_argument("--out", required=True)
    s.set_defaults(func=cmd_codec)
    return p


RANDOMIZED = {("construct", "gnp"), ("construct", "degree"), ("construct", "edges")}


def _check_args(p: argparse.ArgumentParser, a) -> None:
    if a.command == "construct":
        if (a.command, a.kind) in RANDOMIZED and a.seed is None:
            p.error(f"construct {a.kind} requires --seed")
        if a.kind in ("shift", "gnp") and a.n is None:
            p.error(f"construct {a.kind} requires --n")
        if a.kind == "gnp" and a.np is None:
            p.error("construct gnp requires --np")
    if a.command == "bounds" and a.what == "counting" and (a.n is None or a.d is None):
        p.error("bounds counting requires --n and --d")


def main(argv: list[str] | None = None) -> int:
    p = build_parser()
    a = p.parse_args(argv)
    _check_args(p, a)
    try:
        return a.func(a)
    except Failure as exc:
        print(f"failure: {exc}", file=sys.stderr)
        return 1
    except (GraphFormatError, RepresentationError, PreconditionError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
