"""Sparse random graphs: how often a multicyclic component shows up, and the
class-pair pipeline that turns a sample into a verified representation.

Run with ``python3 demos/random_graphs.py``.
"""

from localbox.boxrep import verify
from localbox.gnp import CSV_HEADER, gnp_rep, multicyclic_mc, sample_gnp


def multicyclic_table():
    print(CSV_HEADER)
    for n in (100, 400):
        for c in (0.3, 0.7):
            print(multicyclic_mc(n, c, 500, seed=n).csv_row())


def pipeline(n: int = 300, np_: float = 2.0, epsilon: float = 0.5):
    print(f"\nG(n={n}, p={np_}/n), epsilon={epsilon}")
    for seed in range(3):
        G = sample_gnp(n, np_ / n, seed=seed).graph
        res = gnp_rep(G, np_, epsilon, seed=seed)
        ok = verify(res.representation, G, res.bound).ok
        print(f"  seed {seed}: m={G.m}, {res.classes} classes, {res.attempts} attempt(s), "
              f"locality {res.locality} <= {res.bound}: {ok}")


if __name__ == "__main__":
    multicyclic_table()
    pipeline()
