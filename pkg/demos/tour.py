"""A short tour: exact values, a girth-5 construction, the codec and the
shift-graph colouring gap.

Run with ``python3 demos/tour.py``.
"""

import math

from localbox.boxrep import decode, encode, normalize, prune_dims, realize, verify
from localbox.coloring import shift_complement_rep, shift_graph
from localbox.exact import box_exact, chromatic_exact, lbox_exact
from localbox.girth5 import gcreg_value
from localbox.graph import complement, cycle_graph, perfect_matching_graph, petersen_graph


def exact_values():
    print("exact values")
    for name, G in [("C4", cycle_graph(4)), ("C5", cycle_graph(5)),
                    ("K6 minus a perfect matching", complement(perfect_matching_graph(6))),
                    ("complement of Petersen", complement(petersen_graph()))]:
        lb, bx = lbox_exact(G), box_exact(G)
        print(f"  {name:28s} lbox={lb.value}  box={bx.value}")
        print(f"  {'':28s} why not lower: {lb.lower_bound_witness}")


def girth_five():
    print("\ncomplement of a regular graph with girth >= 5")
    G = complement(petersen_graph())
    val = gcreg_value(G)
    print(f"  value {val.value}: {val.lower_witness}")
    for v, box in enumerate(val.upper.boxes[:3]):
        print(f"  vertex {v}: {dict((d, (lo, hi)) for d, lo, hi in box.items)}")


def codec():
    print("\ncodec")
    R = prune_dims(normalize(lbox_exact(complement(petersen_graph())).certificate))
    bits = encode(R, 2)
    n, d = R.n, 2
    bound = n * d * (3 * math.log2(n) + 7 * math.log2(d))
    print(f"  {len(bits)} bits for n={n}, d={d}; counting budget {bound:.0f} bits")
    assert realize(decode(bits, n, d)) == realize(R)


def shift_graphs():
    print("\nshift graphs: complements are 2-local but chromatic numbers grow")
    for n in (4, 8, 16):
        S = shift_graph(n)
        ok = verify(shift_complement_rep(n), complement(S), 2).ok
        chi = chromatic_exact(S).value
        print(f"  n={n:2d}: {S.n:3d} vertices, complement 2-local: {ok}, chi(S_n)={chi}")


if __name__ == "__main__":
    exact_values()
    girth_five()
    codec()
    shift_graphs()
