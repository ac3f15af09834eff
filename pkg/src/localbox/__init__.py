"""Local boxicity: build, verify, encode and exactly compute local box
representations of graphs."""

from .boxrep import (
    CoIntervalCover,
    CoverPart,
    IntervalFamily,
    LocalBox,
    Representation,
    add_vertex_dim,
    decode,
    encode,
    from_cover,
    from_family,
    intersect_reps,
    normalize,
    pad_universal,
    prune_dims,
    realize,
    to_cover,
    to_family,
    verify,
)
from .graph import Graph, complement, girth, parse_graph, emit_graph, read_graph

__all__ = [
    "CoIntervalCover",
    "CoverPart",
    "Graph",
    "IntervalFamily",
    "LocalBox",
    "Representation",
    "add_vertex_dim",
    "complement",
    "decode",
    "emit_graph",
    "encode",
    "from_cover",
    "from_family",
    "girth",
    "intersect_reps",
    "normalize",
    "pad_universal",
    "parse_graph",
    "prune_dims",
    "read_graph",
    "realize",
    "to_cover",
    "to_family",
    "verify",
]
