"""Closed-form counting bounds and lower-bound thresholds.

``log`` is binary throughout; natural logarithms are named ``ln``.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field


@dataclass(frozen=True)
class BoundReport:
    name: str
    inputs: dict = field(default_factory=dict)
    value: float | None = None
    citation: str = ""
    kind: str = "numeric"  # or "order-of-growth"

    def fields(self) -> list[str]:
        args = ";".join(f"{k}={v}" for k, v in self.inputs.items())
        val = "" if self.value is None else f"{self.value:.6g}"
        return [self.name, args, val, self.kind, self.citation]


CSV_HEADER = ["name", "inputs", "value", "kind", "citation"]


def counting_log2(n: int, d: int) -> float:
    """nd(3 log n + 7 log d): bits needed by the box codec."""
    return n * d * (3 * math.log2(n) + 7 * math.log2(d))


def counting_upper(n: int, d: int) -> BoundReport:
    """log2 of the number of labelled n-vertex graphs with local boxicity <= d."""
    if n < 2 or d < 2:
        raise ValueError("the counting bound needs n, d >= 2")
    return BoundReport("counting_upper_log2", {"n": n, "d": d}, counting_log2(n, d),
                       "upper bound on labelled n-vertex graphs of local boxicity <= d, as log2")


def all_graphs_log2(n: int) -> float:
    return math.comb(n, 2)


def regular_graphs_log2(n: int, delta: int) -> float:
    """(Delta n / 2) log(n / (e^2 Delta)): log2 of the Liebenau-Wormald count."""
    if not 1 <= delta <= n - 2:
        raise ValueError("need 1 <= Delta <= n - 2")
    return delta * n / 2 * math.log2(n / (math.e ** 2 * delta))


def lower_bound_table(n: int | None = None, epsilon: float | None = None, delta: int | None = None,
                      np_: float | None = None, m: int | None = None,
                      g: int | None = None) -> list[BoundReport]:
    out: list[BoundReport] = []
    if epsilon is not None and not 0 < epsilon < 1:
        raise ValueError("epsilon must lie in (0, 1)")
    if n is not None:
        if n < 2:
            raise ValueError("n must be at least 2")
        out.append(BoundReport("almost_all_graphs", {"n": n}, n / (21 * math.log2(n)),
                               "almost every n-vertex graph: at least n/(21 log n)"))
        out.append(BoundReport("all_graphs_log2", {"n": n}, all_graphs_log2(n),
                               "labelled n-vertex graphs, as log2"))
    if epsilon is not None and delta is not None:
        out.append(BoundReport("max_degree", {"epsilon": epsilon, "Delta": delta}, epsilon * delta / 21,
                               "almost every graph of max degree Delta = O(n^(1-eps)): at least eps Delta/21"))
        if n is not None and 1 <= delta <= n - 2:
            out.append(BoundReport("regular_graphs_log2", {"n": n, "Delta": delta},
                                   regular_graphs_log2(n, delta),
                                   "Liebenau-Wormald count (n/e^2 Delta)^(Delta n/2), as log2"))
    if epsilon is not None and np_ is not None:
        out.append(BoundReport("random_graph", {"epsilon": epsilon, "np": np_}, epsilon * np_ / 41,
                               "G(n,p) with np in [1-eps, n^(1-eps)]: at least eps np/41 a.a.s."))
    if m is not None:
        out.append(BoundReport("edges", {"m": m}, None,
                               "almost every graph with m = Theta(n^2) edges: Omega(sqrt(m)/log m); "
                               "order-of-growth, no constant given", "order-of-growth"))
    if g is not None:
        out.append(BoundReport("genus", {"g": g}, None,
                               "almost every graph of Euler genus g = Theta(n^2): Omega(sqrt(g)/log g); "
                               "order-of-growth, no constant given", "order-of-growth"))
    return out


def table_csv(reports: list[BoundReport]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    w.writerows(r.fields() for r in reports)
    return buf.getvalue()
