"""Exact subgraph density and shallow-minor density at desk scale.

`max_subgraph_density` is exact (iterated integer min-cuts), `mad` is
twice it, and `nabla_r_bruteforce` enumerates rooted-block contractions
to evaluate the depth-r minor density of tiny graphs -- enough to check
the inequalities the girth thresholds lean on.

Run:  python demos/density_demo.py
"""

from fractions import Fraction

from pathdeg import complete, cycle, fixture, mad, max_subgraph_density, nabla_r_bruteforce, subdivide
from pathdeg.density import shallow_minors


def density_table():
    print("Exact densities and maximum average degrees")
    for name, g in [("C_6", cycle(6)), ("K_4", complete(4)),
                    ("petersen", fixture("petersen")), ("heawood", fixture("heawood"))]:
        print(f"  {name:>9}: density {max_subgraph_density(g)}, mad {mad(g)}")
    print()


def shallow_minor_table():
    print("Brute-force shallow-minor densities (depth 0, 1/2, 1)")
    for name, g in [("K_4", complete(4)), ("C_6", cycle(6)), ("prism", fixture("prism"))]:
        row = [str(nabla_r_bruteforce(g, r)) for r in (0, Fraction(1, 2), 1)]
        print(f"  {name:>6}: " + "  ".join(row))
    print()


def composition_check():
    print("Nesting check: members of (K_4 nabla 1/2) nabla 1/2 stay below nabla_3/2(K_4)")
    g = complete(4)
    outer = nabla_r_bruteforce(g, Fraction(3, 2))
    worst = Fraction(0)
    for h in shallow_minors(g, Fraction(1, 2)):
        if h.n == 0:
            continue
        for m in shallow_minors(h, Fraction(1, 2)):
            if m.n:
                worst = max(worst, Fraction(m.m, m.n))
    print(f"  max density over composed minors: {worst} <= nabla_3/2: {outer}  ({worst <= outer})")
    print()


def subdivision_transfer():
    print("Subdividing dilutes shallow-minor density")
    g = complete(4)
    sub = subdivide(g, 1)  # every chain has length 2
    lhs = nabla_r_bruteforce(sub, 1)
    rhs = nabla_r_bruteforce(g, 1)  # ceil(1 / (p-1)) with p=3
    print(f"  nabla_1(K_4 subdivided once) = {lhs} <= nabla_1(K_4) = {rhs}  ({lhs <= rhs})")


if __name__ == "__main__":
    density_table()
    shallow_minor_table()
    composition_check()
    subdivision_transfer()
