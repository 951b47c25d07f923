"""Rhombus tilings of semiregular hexagons.

A hexagon with sides (s1..s6) on the triangular lattice decomposes into
unit triangles; gluing adjacent UP/DOWN pairs into rhombi is the same as
perfectly matching the triangle-adjacency graph, so the exact counters
apply directly.
"""

from fractions import Fraction

from matchenum import (
    build_hexagon,
    central_rhombus_edge,
    containment_ratio,
    count_brute,
    count_kasteleyn,
    count_permanent,
    hexagon_cell_count,
)

print("=== counting rhombus tilings three ways ===")
for sides in [(1, 1, 1, 1, 1, 1), (2, 2, 2, 2, 2, 2), (2, 3, 2, 2, 3, 2)]:
    g = build_hexagon(sides)
    print(f"hexagon {sides}: {g.n} cells "
          f"(closed form {hexagon_cell_count(sides)})")
    print(f"  backtracking oracle : {count_brute(g)}")
    print(f"  Kasteleyn determinant: {count_kasteleyn(g)}")
    print(f"  permanent            : {count_permanent(g)}")

print()
print("=== hexagons with a triangle removed ===")
# sides (a, b+1, c, a+1, b, c+1) leave one excess cell; removing a cell of
# the majority orientation balances the region again
sides = (2, 3, 2, 3, 2, 3)
g = build_hexagon(sides)
ups = sum(1 for c in g.labels if c.orient == "up")
excess = "up" if ups > g.n - ups else "down"
hole = next(c for c in sorted(g.labels) if c.orient == excess)
holey = build_hexagon(sides, holes=[hole])
print(f"hexagon {sides}: {g.n} cells, imbalance forces zero tilings "
      f"-> count {count_kasteleyn(g)}")
print(f"after removing {hole}: {count_kasteleyn(holey)} tilings "
      f"(oracle {count_brute(holey)})")

print()
print("=== the central rhombus of a symmetric hexagon ===")
# hexagons (a, a, b, a, a, b) with a, b of opposite parity have a unique
# rhombus centred at the centre of symmetry; the fraction of tilings that
# contain it is exactly one third
for n in (1, 2):
    a, b = 2 * n - 1, 2 * n
    sides = (a, a, b, a, a, b)
    g = build_hexagon(sides)
    up, down = central_rhombus_edge(sides)
    edge = g.edge_by_labels(up, down)
    ratio = containment_ratio(g, edge)
    print(f"sides {sides}: central rhombus {tuple(up)} + {tuple(down)}, "
          f"ratio {ratio} (exactly 1/3: {ratio == Fraction(1, 3)})")

# a corner rhombus behaves differently: the control shows the 1/3 value
# genuinely belongs to the centre
g = build_hexagon((1, 1, 2, 1, 1, 2))
corner_vertex = min(range(g.n), key=g.degree)
corner_edge = next(e for e in g.edges if corner_vertex in e)
print(f"corner edge control ratio: {containment_ratio(g, corner_edge)}")
