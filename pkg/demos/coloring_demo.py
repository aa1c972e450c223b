"""Cycle-rainbow edge colorings from reduction certificates.

A graph that is (r+1)-path degenerate admits an edge coloring with r+1
colors in which every cycle C shows at least min(|C|, r+1) of them, and a
proper edge coloring with max(degree, r) colors in which every cycle shows
at least min(|C|, r).  Both come out of replaying the reduction
certificate backward; both are re-verified against the definitions over
all enumerated cycles.

Run:  python demos/coloring_demo.py
"""

from pathdeg import (
    acyclic_edge_coloring,
    arboricity_coloring,
    fixture,
    girth,
    subdivide,
    verify_cycle_rainbow,
    verify_proper,
)


def rainbow_table():
    print("r+1-color cycle-rainbow colorings on subdivided dodecahedra")
    for r in (1, 2, 3):
        g = subdivide(fixture("dodecahedron"), r)
        col = arboricity_coloring(g, r)
        ok = verify_cycle_rainbow(g, col, t=r + 1)
        print(f"  r={r}: girth {girth(g)}, colors used {col.num_colors}, "
              f"every cycle sees >= min(|C|, {r + 1}) colors: {ok}")
    print()


def acyclic_table():
    print("Proper colorings with the cycle condition, max(degree, r) colors")
    for r in (3, 4, 5):
        g = subdivide(fixture("dodecahedron"), r)
        col = acyclic_edge_coloring(g, r)
        print(f"  r={r}: colors used {col.num_colors}, proper={verify_proper(g, col)}, "
              f"cycles see >= min(|C|, {r}): {verify_cycle_rainbow(g, col, t=r)}")
    print()


def small_cases():
    from pathdeg import build_graph, cycle

    star = build_graph(6, [(0, i) for i in range(1, 6)])
    col = acyclic_edge_coloring(star, 3)
    print(f"Star with five rays, r=3: {col.num_colors} colors (its degree; stars have no cycles)")
    c5 = cycle(5)
    col = arboricity_coloring(c5, 1)
    print(f"C_5 with r=1: {col.num_colors} colors, the unique cycle sees both: "
          f"{verify_cycle_rainbow(c5, col, t=2)}")


if __name__ == "__main__":
    rainbow_table()
    acyclic_table()
    small_cases()
