"""Girth thresholds in closed form.

Each evaluator answers: how large must the girth of a graph be, inside a
class described by its expansion (polynomial envelope, bounded average
degree, clique-minor-free, or merely sub-exponential), before p-path
degeneracy is guaranteed?  The Lambert W_-1 branch does the inverting.

Run:  python demos/girth_bounds_demo.py
"""

import math

from pathdeg.bounds import (
    ExpansionParams,
    girth_bound_clique,
    girth_bound_minor_closed,
    girth_bound_polynomial,
    girth_bound_subexponential,
    lambert_w_minus1,
    lower_bound_poly,
    threshold_beta,
    wcol_girth_rule,
)


def lambert_corner():
    print("Lambert W_-1 on [-1/e, 0): residuals at machine precision")
    for t in (-1 / math.e, -0.25, -0.1, -1e-3, -1e-9):
        w = lambert_w_minus1(t)
        print(f"  W(-1)({t:>12.6g}) = {w:>18.12f}   residual {abs(w * math.exp(w) - t):.2e}")
    print(f"  threshold_beta(1, 2) = {threshold_beta(1, 2):.10f} "
          "(least x beyond which x > log x + 2)\n")


def threshold_tables():
    params = ExpansionParams(a=1.0, b=1.0)
    print("Polynomial expansion a=1, b=1: girth threshold per p")
    for p in (2, 3, 5, 10, 100):
        res = girth_bound_polynomial(params, p)
        print(f"  p={p:>3}: threshold {res.threshold:>9.0f}  (girth must exceed it)")
    print()
    print("Maximum average degree d: threshold per (d, p)")
    for d in (6, 64, 576, 1024):
        res = girth_bound_minor_closed(d, 2)
        print(f"  d={d:>5}, p=2: {res.threshold:>8.3f} -> integer girth {res.integer_girth_threshold}")
    print()
    print("Clique-minor-free and sub-exponential flavors")
    res = girth_bound_clique(5, 2)
    print(f"  no K_5 minor, p=2: {res.threshold:.3f} ({res.provenance})")
    res = girth_bound_subexponential(lambda r: 2.0 ** math.sqrt(r), 2)
    print(f"  expansion 2^sqrt(r), p=2: {res.threshold:.0f} ({res.provenance})")
    print()
    print("Lower-bound witnesses and the weak-coloring girth rule")
    print(f"  witness girth, b=1, p=100, alpha=3/4: {lower_bound_poly(1.0, 100, 0.75):,.0f}")
    print(f"  wcol rule r=3: q=4 -> {wcol_girth_rule(3, 4):.0f}, q=6 -> {wcol_girth_rule(3, 6):.0f}")


if __name__ == "__main__":
    lambert_corner()
    threshold_tables()
