"""Builders for every lattice region family, plus the JSON region format.

Coordinate conventions (the single source of geometric truth):

* Triangular lattice: lattice points are integer pairs (a, b) whose true
  position is (a + b/2, b*sqrt(3)/2).  The upward unit triangle UP(x, y)
  has corners (x, y), (x+1, y), (x, y+1); DOWN(x, y) has corners
  (x+1, y), (x, y+1), (x+1, y+1).  UP(x, y) is edge-adjacent to exactly
  DOWN(x, y), DOWN(x-1, y) and DOWN(x, y-1).  Cell centres are stored
  scaled by 3: UP -> (3x+1, 3y+1), DOWN -> (3x+2, 3y+2).

* Hexagons: side lengths s1..s6 are walked counter-clockwise from the
  origin along the unit directions E, NE, NW, W, SW, SE.  The walk closes
  iff s1 - s4 = s5 - s2 = s3 - s6, and then the cell counts satisfy
  #UP - #DOWN = s1 - s4.

* Square lattice: the unit square (i, j) has corners (i, j)..(i+1, j+1)
  and centre stored doubled as (2i+1, 2j+1); its color is (i+j) mod 2.
  The order-n Aztec diamond is the set of squares with
  |2i+1| + |2j+1| <= 2n.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

from .graphs import MatchGraph


class RegionError(ValueError):
    """Invalid region parameters (closure violated, bad hole, imbalance...)."""


class TriCell(NamedTuple):
    x: int
    y: int
    orient: str  # "up" or "down"


UP, DOWN = "up", "down"

# unit steps E, NE, NW, W, SW, SE in (a, b) lattice coordinates
_HEX_DIRS = ((1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1))

HYPERCUBE_LIMIT = 12  # 2**12 vertices; counting routines bound themselves


def _tri_center3(cell: TriCell) -> tuple[int, int]:
    # centroid in lattice coordinates, scaled by 3 to stay integral
    if cell.orient == UP:
        return (3 * cell.x + 1, 3 * cell.y + 1)
    return (3 * cell.x + 2, 3 * cell.y + 2)


def _tri_neighbors(cell: TriCell) -> tuple[TriCell, ...]:
    x, y = cell.x, cell.y
    if cell.orient == UP:
        return (TriCell(x, y, DOWN), TriCell(x - 1, y, DOWN), TriCell(x, y - 1, DOWN))
    return (TriCell(x, y, UP), TriCell(x + 1, y, UP), TriCell(x, y + 1, UP))


def hexagon_boundary(sides: Sequence[int]) -> list[tuple[int, int]]:
    """Corner points of the hexagon walk, starting and ending at the origin."""
    s = validate_hex_sides(sides)
    pts = [(0, 0)]
    a, b = 0, 0
    for length, (da, db) in zip(s, _HEX_DIRS):
        a += length * da
        b += length * db
        pts.append((a, b))
    return pts


def validate_hex_sides(sides: Sequence[int]) -> tuple[int, ...]:
    s = tuple(int(v) for v in sides)
    if len(s) != 6:
        raise RegionError("a hexagon needs exactly six side lengths")
    if any(v < 0 for v in s):
        raise RegionError("hexagon side lengths must be nonnegative")
    if not (s[0] - s[3] == s[4] - s[1] == s[2] - s[5]):
        raise RegionError(
            f"side tuple {s} violates the closure condition "
            "s1 - s4 = s5 - s2 = s3 - s6"
        )
    return s


def hexagon_cells(sides: Sequence[int]) -> set[TriCell]:
    """All unit triangles strictly inside the hexagon.

    A cell is inside iff its centroid lies strictly left of every
    (counter-clockwise) boundary side; centroids scaled by 3 keep the
    half-plane tests in exact integers.
    """
    s = validate_hex_sides(sides)
    pts = hexagon_boundary(s)
    halfplanes = []
    for k in range(6):
        if s[k] == 0:
            continue
        p, q = pts[k], pts[k + 1]
        halfplanes.append((p, (q[0] - p[0], q[1] - p[1])))

    cells: set[TriCell] = set()
    if not halfplanes:
        return cells
    amin = min(p[0] for p in pts) - 1
    amax = max(p[0] for p in pts) + 1
    bmin = min(p[1] for p in pts) - 1
    bmax = max(p[1] for p in pts) + 1
    for x in range(amin, amax + 1):
        for y in range(bmin, bmax + 1):
            for orient in (UP, DOWN):
                cell = TriCell(x, y, orient)
                cx, cy = _tri_center3(cell)
                ok = True
                for (px, py), (dx, dy) in halfplanes:
                    # cross((q-p), centroid/3 - p) > 0, scaled by 3
                    if dx * (cy - 3 * py) - dy * (cx - 3 * px) <= 0:
                        ok = False
                        break
                if ok:
                    cells.add(cell)
    return cells


def hexagon_cell_count(sides: Sequence[int]) -> int:
    """Closed-form area in unit triangles: the enclosing lattice triangle
    of side s6+s1+s2 minus the three cut corners of sides s2, s4, s6."""
    s = validate_hex_sides(sides)
    t = s[5] + s[0] + s[1]
    return t * t - s[1] ** 2 - s[3] ** 2 - s[5] ** 2


def _tri_graph(cells: set[TriCell]) -> MatchGraph:
    labels = sorted(cells)
    index = {c: i for i, c in enumerate(labels)}
    edges = []
    for c in labels:
        if c.orient != UP:
            continue
        for nb in _tri_neighbors(c):
            if nb in index:
                edges.append((index[c], index[nb]))
    coords = [_tri_center3(c) for c in labels]
    color = [0 if c.orient == UP else 1 for c in labels]
    return MatchGraph(labels, edges, coords=coords, color=color)


def build_hexagon(sides: Sequence[int], holes: Iterable[TriCell] = ()) -> MatchGraph:
    """Adjacency graph of the unit triangles of the hexagon minus holes.

    Perfect matchings of the result are in bijection with the rhombus
    tilings of the holey hexagon.
    """
    cells = hexagon_cells(sides)
    seen_holes: set[TriCell] = set()
    for h in holes:
        h = TriCell(int(h[0]), int(h[1]), str(h[2]))
        if h.orient not in (UP, DOWN):
            raise RegionError(f"hole orientation must be 'up' or 'down', got {h.orient!r}")
        if h not in cells:
            raise RegionError(f"hole {h} lies outside the region")
        if h in seen_holes:
            raise RegionError(f"hole {h} listed twice")
        seen_holes.add(h)
    return _tri_graph(cells - seen_holes)


def central_rhombus_edge(sides: Sequence[int]) -> tuple[TriCell, TriCell]:
    """The unique UP/DOWN cell pair whose rhombus centre is the hexagon centre.

    Defined for side tuples (a, a, b, a, a, b) with a and b of opposite
    parity; the hexagon is then centrally symmetric with centre
    ((a-b)/2, (a+b)/2), a half-integer point that lands on exactly one
    rhombus midpoint.  Existence and uniqueness are checked by scanning
    every adjacent pair.
    """
    s = validate_hex_sides(sides)
    if not (s[0] == s[1] == s[3] == s[4] and s[2] == s[5]):
        raise RegionError(f"sides {s} are not of the (a, a, b, a, a, b) form")
    a, b = s[0], s[2]
    if (a + b) % 2 == 0:
        raise RegionError(f"a={a} and b={b} must have opposite parity")

    center2 = (a - b, a + b)  # doubled lattice coordinates of the centre
    cells = hexagon_cells(s)
    hits = []
    for c in cells:
        if c.orient != UP:
            continue
        for nb in _tri_neighbors(c):
            if nb not in cells:
                continue
            # midpoint of the shared lattice edge, doubled
            if nb == TriCell(c.x, c.y, DOWN):
                mid2 = (2 * c.x + 1, 2 * c.y + 1)
            elif nb == TriCell(c.x - 1, c.y, DOWN):
                mid2 = (2 * c.x, 2 * c.y + 1)
            else:
                mid2 = (2 * c.x + 1, 2 * c.y)
            if mid2 == center2:
                hits.append((c, nb))
    if len(hits) != 1:
        raise RegionError(
            f"expected exactly one central rhombus, found {len(hits)}"
        )
    return hits[0]


# -- square-lattice regions -----------------------------------------------


def _square_graph(cells: set[tuple[int, int]]) -> MatchGraph:
    labels = sorted(cells)
    index = {c: i for i, c in enumerate(labels)}
    edges = []
    for (i, j) in labels:
        for nb in ((i + 1, j), (i, j + 1)):
            if nb in index:
                edges.append((index[(i, j)], index[nb]))
    coords = [(2 * i + 1, 2 * j + 1) for i, j in labels]
    color = [(i + j) & 1 for i, j in labels]
    return MatchGraph(labels, edges, coords=coords, color=color)


def aztec_diamond_cells(n: int) -> set[tuple[int, int]]:
    if n < 1:
        raise RegionError("Aztec diamond order must be >= 1")
    cells = set()
    for i in range(-n, n):
        for j in range(-n, n):
            if abs(2 * i + 1) + abs(2 * j + 1) <= 2 * n:
                cells.add((i, j))
    return cells


def build_aztec_diamond(n: int) -> MatchGraph:
    """Cell-adjacency graph of the order-n Aztec diamond (2n(n+1) cells)."""
    return _square_graph(aztec_diamond_cells(n))


def aztec_rectangle_cells(a: int, b: int) -> set[tuple[int, int]]:
    """Squares (i, j) with |i+j+1| <= a and -a <= i-j <= 2b-a.

    In the diagonal coordinates (p, q) = (i+j+1, i-j) this is the
    [-a, a] x [-a, 2b-a] window, whose color classes have a(b+1) and
    (a+1)b cells; for a = b it coincides with the order-a Aztec diamond.
    """
    if not (1 <= a <= b):
        raise RegionError("Aztec rectangle needs 1 <= a <= b")
    cells = set()
    for i in range(-a - b - 1, a + b + 2):
        for j in range(-a - b - 1, a + b + 2):
            if abs(i + j + 1) <= a and -a <= i - j <= 2 * b - a:
                cells.add((i, j))
    return cells


def build_aztec_rectangle(
    a: int, b: int, removed: Iterable[tuple[int, int]] = ()
) -> MatchGraph:
    """Aztec rectangle minus the removed cells.

    The untouched rectangle has color-class imbalance b - a, so removals
    must restore balance; an imbalanced result would trivially have zero
    matchings and is rejected rather than silently counted.
    """
    cells = aztec_rectangle_cells(a, b)
    seen: set[tuple[int, int]] = set()
    for r in removed:
        r = (int(r[0]), int(r[1]))
        if r not in cells:
            raise RegionError(f"removed vertex {r} is not in the region")
        if r in seen:
            raise RegionError(f"removed vertex {r} listed twice")
        seen.add(r)
    remaining = cells - seen
    ones = sum((i + j) & 1 for i, j in remaining)
    if 2 * ones != len(remaining):
        raise RegionError(
            f"removal leaves color classes of sizes {len(remaining) - ones} "
            f"and {ones}; matchings would be trivially zero"
        )
    return _square_graph(remaining)


def aztec_window_cells(x: int, w: int) -> set[tuple[int, int]]:
    if x < 1 or w < 1:
        raise RegionError("Aztec window needs x >= 1 and w >= 1")
    outer = aztec_diamond_cells(x + w)
    inner = aztec_diamond_cells(x)
    return outer - inner


def build_aztec_window(x: int, w: int) -> MatchGraph:
    """Annulus between the concentric Aztec diamonds of orders x and x+w.

    2w(2x+w+1) cells, balanced; the embedding has one long bounded face
    around the hole in addition to the unit square faces.
    """
    return _square_graph(aztec_window_cells(x, w))


def build_hypercube(n: int) -> MatchGraph:
    """Hamming graph on n-bit vectors; bipartition by bit parity.

    Non-planar for n >= 3, so no drawing coordinates are attached.
    """
    if not (1 <= n <= HYPERCUBE_LIMIT):
        raise RegionError(f"hypercube dimension must be in 1..{HYPERCUBE_LIMIT}")
    size = 1 << n
    labels = list(range(size))
    edges = [
        (v, v | (1 << k))
        for v in range(size)
        for k in range(n)
        if not (v >> k) & 1
    ]
    color = [bin(v).count("1") & 1 for v in range(size)]
    return MatchGraph(labels, edges, color=color)


# -- declarative region specs ----------------------------------------------

KINDS = ("HEXAGON", "AZTEC_DIAMOND", "AZTEC_RECTANGLE", "AZTEC_WINDOW", "HYPERCUBE")


@dataclass(frozen=True)
class RegionSpec:
    """Declarative region description; the JSON form is the CLI input format.

    {"kind": "...", "params": {...}, "holes": [[x, y, "up"|"down"], ...]}
    """

    kind: str
    params: dict
    holes: tuple[TriCell, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise RegionError(f"unknown region kind {self.kind!r}")
        if self.holes and self.kind != "HEXAGON":
            raise RegionError("holes are only supported for HEXAGON regions")

    def build(self) -> MatchGraph:
        p = self.params
        try:
            if self.kind == "HEXAGON":
                return build_hexagon(p["sides"], self.holes)
            if self.kind == "AZTEC_DIAMOND":
                return build_aztec_diamond(int(p["n"]))
            if self.kind == "AZTEC_RECTANGLE":
                removed = [tuple(r) for r in p.get("removed", [])]
                return build_aztec_rectangle(int(p["a"]), int(p["b"]), removed)
            if self.kind == "AZTEC_WINDOW":
                return build_aztec_window(int(p["x"]), int(p["w"]))
            return build_hypercube(int(p["n"]))
        except KeyError as exc:
            raise RegionError(
                f"{self.kind} spec is missing parameter {exc.args[0]!r}"
            ) from None

    def to_dict(self) -> dict:
        d = {"kind": self.kind, "params": dict(self.params)}
        if self.kind == "HEXAGON":
            d["holes"] = [[h.x, h.y, h.orient] for h in self.holes]
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict) -> "RegionSpec":
        if not isinstance(d, dict) or "kind" not in d:
            raise RegionError("region document must be an object with a 'kind'")
        params = d.get("params", {})
        if not isinstance(params, dict):
            raise RegionError("'params' must be an object")
        holes = tuple(
            TriCell(int(h[0]), int(h[1]), str(h[2])) for h in d.get("holes", [])
        )
        return cls(kind=str(d["kind"]), params=params, holes=holes)

    @classmethod
    def from_json(cls, text: str) -> "RegionSpec":
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise RegionError(f"malformed region JSON: {exc}") from None
        return cls.from_dict(doc)
