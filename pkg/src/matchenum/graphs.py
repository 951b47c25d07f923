"""Immutable graph container shared by every region builder.

Vertices carry hashable labels and, for the lattice regions, exact integer
drawing coordinates (cell centres scaled so they land on integer points).
Triangular-lattice regions store sheared lattice coordinates; the shear is
an orientation-preserving linear map, so cross-product signs and cyclic
angular order agree with the honest Euclidean drawing and all geometry can
stay in integer arithmetic.

Graphs are frozen after construction and safe to share between threads.
"""

from __future__ import annotations

from functools import cmp_to_key
from typing import Hashable, Iterable, Optional, Sequence


class GraphError(ValueError):
    """Raised for malformed graphs or operations missing a prerequisite
    (no embedding, no bipartition, disconnected where connectivity is due).
    """


Dart = tuple[int, int]


class Face:
    """One face of the embedded graph, stored as its boundary dart walk.

    The walk keeps the face interior on the left, so bounded faces have
    positive doubled signed area and the outer walk of each component has
    non-positive area.
    """

    __slots__ = ("darts", "area2")

    def __init__(self, darts: Sequence[Dart], area2: int):
        self.darts = tuple(darts)
        self.area2 = area2

    @property
    def bounded(self) -> bool:
        return self.area2 > 0

    def __len__(self) -> int:
        return len(self.darts)

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        kind = "bounded" if self.bounded else "outer"
        return f"Face({kind}, len={len(self.darts)})"


class MatchGraph:
    """Finite simple graph whose perfect matchings are the objects of study.

    Optional extras:
      * ``color``  - a two-coloring (0/1 per vertex); every edge must join
        the two classes.
      * ``coords`` - integer drawing coordinates per vertex; when present,
        the rotation system (neighbours in counter-clockwise order) and the
        face structure of the straight-line embedding are available.
    """

    __slots__ = ("labels", "index", "edges", "edge_set", "adj", "color",
                 "coords", "_rotation", "_faces", "_face_of_dart")

    def __init__(
        self,
        labels: Iterable[Hashable],
        edges: Iterable[tuple[int, int]],
        coords: Optional[Sequence[tuple[int, int]]] = None,
        color: Optional[Sequence[int]] = None,
    ):
        self.labels = tuple(labels)
        self.index = {lab: i for i, lab in enumerate(self.labels)}
        if len(self.index) != len(self.labels):
            raise GraphError("duplicate vertex labels")
        n = len(self.labels)

        seen: set[tuple[int, int]] = set()
        norm: list[tuple[int, int]] = []
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise GraphError(f"duplicate edge {e}")
            seen.add(e)
            norm.append(e)
        self.edges = tuple(norm)
        self.edge_set = frozenset(norm)

        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        self.adj = tuple(tuple(sorted(ns)) for ns in adj)

        if color is not None:
            color = tuple(color)
            if len(color) != n or any(c not in (0, 1) for c in color):
                raise GraphError("bipartition must assign 0/1 to every vertex")
            for u, v in self.edges:
                if color[u] == color[v]:
                    raise GraphError(f"edge {(u, v)} joins same color class")
        self.color = color

        if coords is not None:
            coords = tuple((int(x), int(y)) for x, y in coords)
            if len(coords) != n:
                raise GraphError("coords must cover every vertex")
        self.coords = coords

        self._rotation: Optional[tuple[tuple[int, ...], ...]] = None
        self._faces: Optional[tuple[Face, ...]] = None
        self._face_of_dart: Optional[dict[Dart, int]] = None

    # -- basic queries ------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.labels)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edge_set

    def edge_by_labels(self, lu: Hashable, lv: Hashable) -> tuple[int, int]:
        try:
            u, v = self.index[lu], self.index[lv]
        except KeyError as exc:
            raise GraphError(f"unknown vertex label {exc.args[0]!r}") from None
        if not self.has_edge(u, v):
            raise GraphError(f"{lu!r} and {lv!r} are not adjacent")
        return (u, v) if u < v else (v, u)

    def class_sizes(self) -> tuple[int, int]:
        if self.color is None:
            raise GraphError("graph carries no bipartition")
        ones = sum(self.color)
        return len(self.color) - ones, ones

    def is_balanced(self) -> bool:
        a, b = self.class_sizes()
        return a == b

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            stack, comp = [s], []
            seen[s] = True
            while stack:
                v = stack.pop()
                comp.append(v)
                for u in self.adj[v]:
                    if not seen[u]:
                        seen[u] = True
                        stack.append(u)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    # -- derived graphs -----------------------------------------------

    def subgraph(self, keep: Iterable[int]) -> "MatchGraph":
        keep = sorted(set(keep))
        old_to_new = {v: i for i, v in enumerate(keep)}
        labels = [self.labels[v] for v in keep]
        edges = [
            (old_to_new[u], old_to_new[v])
            for u, v in self.edges
            if u in old_to_new and v in old_to_new
        ]
        coords = [self.coords[v] for v in keep] if self.coords is not None else None
        color = [self.color[v] for v in keep] if self.color is not None else None
        return MatchGraph(labels, edges, coords=coords, color=color)

    def delete_vertices(self, drop: Iterable[int]) -> "MatchGraph":
        drop = set(drop)
        return self.subgraph(v for v in range(self.n) if v not in drop)

    # -- embedding ----------------------------------------------------

    @property
    def rotation(self) -> tuple[tuple[int, ...], ...]:
        """Neighbours of every vertex in counter-clockwise angular order."""
        if self.coords is None:
            raise GraphError("graph carries no drawing coordinates")
        if self._rotation is None:
            self._rotation = tuple(
                tuple(self._sorted_ccw(v)) for v in range(self.n)
            )
        return self._rotation

    def _sorted_ccw(self, v: int) -> list[int]:
        cx, cy = self.coords[v]

        def cmp(a: int, b: int) -> int:
            ax, ay = self.coords[a][0] - cx, self.coords[a][1] - cy
            bx, by = self.coords[b][0] - cx, self.coords[b][1] - cy
            # split at angle 0: half 0 is [0, pi), half 1 is [pi, 2*pi)
            ha = 0 if (ay > 0 or (ay == 0 and ax > 0)) else 1
            hb = 0 if (by > 0 or (by == 0 and bx > 0)) else 1
            if ha != hb:
                return ha - hb
            cr = ax * by - ay * bx
            if cr > 0:
                return -1
            if cr < 0:
                return 1
            raise GraphError(f"neighbours of {v} share a direction")

        return sorted(self.adj[v], key=cmp_to_key(cmp))

    def faces(self) -> tuple[Face, ...]:
        """All faces of the straight-line embedding, one per dart orbit.

        Each component contributes its bounded faces plus one outer walk.
        """
        if self._faces is None:
            self._trace_faces()
        return self._faces

    def face_of_dart(self) -> dict[Dart, int]:
        if self._face_of_dart is None:
            self._trace_faces()
        return self._face_of_dart

    def _trace_faces(self) -> None:
        rot = self.rotation
        pos: dict[Dart, int] = {}
        for v in range(self.n):
            for k, u in enumerate(rot[v]):
                pos[(v, u)] = k

        face_of: dict[Dart, int] = {}
        faces: list[Face] = []
        for start in pos:
            if start in face_of:
                continue
            walk: list[Dart] = []
            dart = start
            area2 = 0
            while dart not in face_of:
                face_of[dart] = len(faces)
                walk.append(dart)
                u, v = dart
                ax, ay = self.coords[u]
                bx, by = self.coords[v]
                area2 += ax * by - ay * bx
                # interior stays on the left: leave v along the predecessor
                # of the arrival edge in the counter-clockwise order
                nxt = rot[v][(pos[(v, u)] - 1) % len(rot[v])]
                dart = (v, nxt)
            faces.append(Face(walk, area2))
        self._faces = tuple(faces)
        self._face_of_dart = face_of

    def bounded_faces(self) -> list[Face]:
        return [f for f in self.faces() if f.bounded]

    def euler_check(self) -> bool:
        """V - E + F = 2 with the outer face counted (connected graphs)."""
        if not self.is_connected():
            raise GraphError("Euler relation stated for connected graphs")
        f = len(self.faces()) if self.edges else 1
        return self.n - len(self.edges) + f == 2

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"MatchGraph(n={self.n}, m={len(self.edges)})"
