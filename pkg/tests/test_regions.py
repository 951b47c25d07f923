import json

import pytest

from matchenum import (
    MatchGraph,
    RegionError,
    RegionSpec,
    TriCell,
    build_aztec_diamond,
    build_aztec_rectangle,
    build_aztec_window,
    build_hexagon,
    build_hypercube,
    central_rhombus_edge,
    hexagon_cell_count,
    hexagon_cells,
)
from matchenum.regions import aztec_rectangle_cells, aztec_window_cells


def all_hex_side_tuples(max_side):
    """Every valid closure tuple with sides in 0..max_side."""
    out = []
    for s1 in range(max_side + 1):
        for s2 in range(max_side + 1):
            for s3 in range(max_side + 1):
                for k in range(-max_side, max_side + 1):
                    sides = (s1, s2, s3, s1 - k, s2 + k, s3 - k)
                    if all(0 <= s <= max_side for s in sides):
                        out.append(sides)
    return out


class TestMatchGraph:
    def test_rejects_self_loops(self):
        from matchenum import GraphError

        with pytest.raises(GraphError):
            MatchGraph(labels=[0, 1], edges=[(0, 0)])

    def test_rejects_duplicate_edges(self):
        from matchenum import GraphError

        with pytest.raises(GraphError):
            MatchGraph(labels=[0, 1], edges=[(0, 1), (1, 0)])

    def test_rejects_monochromatic_edges(self):
        from matchenum import GraphError

        with pytest.raises(GraphError):
            MatchGraph(labels=[0, 1], edges=[(0, 1)], color=[0, 0])

    def test_rejects_duplicate_labels(self):
        from matchenum import GraphError

        with pytest.raises(GraphError):
            MatchGraph(labels=["a", "a"], edges=[])

    def test_rotation_needs_coords(self):
        from matchenum import GraphError

        g = MatchGraph(labels=[0, 1], edges=[(0, 1)])
        with pytest.raises(GraphError):
            g.rotation


class TestHexagon:
    def test_unit_hexagon_is_six_cycle(self):
        g = build_hexagon((1, 1, 1, 1, 1, 1))
        assert g.n == 6
        assert all(g.degree(v) == 2 for v in range(6))
        assert g.class_sizes() == (3, 3)

    def test_222222_cell_count(self):
        g = build_hexagon((2, 2, 2, 2, 2, 2))
        assert g.n == 24
        assert g.class_sizes() == (12, 12)

    def test_cell_count_matches_closed_form(self):
        for sides in all_hex_side_tuples(4):
            assert len(hexagon_cells(sides)) == hexagon_cell_count(sides), sides

    def test_bipartition_imbalance_is_s1_minus_s4(self):
        for sides in all_hex_side_tuples(4):
            g = build_hexagon(sides)
            ups = sum(1 for c in g.labels if c.orient == "up")
            downs = g.n - ups
            assert ups - downs == sides[0] - sides[3], sides

    def test_shifted_hexagon_balances_after_removing_excess_cell(self):
        sides = (1, 2, 1, 2, 1, 2)
        g = build_hexagon(sides)
        ups = sum(1 for c in g.labels if c.orient == "up")
        downs = g.n - ups
        assert abs(ups - downs) == 1
        excess = "up" if ups > downs else "down"
        hole = next(c for c in g.labels if c.orient == excess)
        h = build_hexagon(sides, holes=[hole])
        assert h.is_balanced()

    def test_closure_violation_rejected(self):
        with pytest.raises(RegionError):
            build_hexagon((1, 2, 1, 1, 2, 2))
        with pytest.raises(RegionError):
            build_hexagon((1, 1, 1, 1, 1))
        with pytest.raises(RegionError):
            build_hexagon((1, 1, -1, 1, 1, -1))

    def test_bad_holes_rejected(self):
        sides = (2, 2, 2, 2, 2, 2)
        outside = TriCell(99, 99, "up")
        with pytest.raises(RegionError):
            build_hexagon(sides, holes=[outside])
        inside = sorted(hexagon_cells(sides))[0]
        with pytest.raises(RegionError):
            build_hexagon(sides, holes=[inside, inside])

    def test_faces_are_hexagonal_and_euler_holds(self):
        for sides in ((1, 1, 1, 1, 1, 1), (2, 2, 2, 2, 2, 2), (1, 1, 2, 1, 1, 2)):
            g = build_hexagon(sides)
            assert g.euler_check()
            assert all(len(f) == 6 for f in g.bounded_faces())


class TestCentralRhombus:
    @pytest.mark.parametrize("sides", [(1, 1, 2, 1, 1, 2), (3, 3, 4, 3, 3, 4)])
    def test_unique_central_edge(self, sides):
        up, down = central_rhombus_edge(sides)
        g = build_hexagon(sides)
        g.edge_by_labels(up, down)  # must exist
        # uniqueness oracle: the doubled midpoint of every other rhombus
        # differs from the doubled centre
        a, b = sides[0], sides[2]
        center2 = (a - b, a + b)
        hits = 0
        for u, v in g.edges:
            cu, cv = g.labels[u], g.labels[v]
            if cu.orient == "down":
                cu, cv = cv, cu
            if cv == TriCell(cu.x, cu.y, "down"):
                mid2 = (2 * cu.x + 1, 2 * cu.y + 1)
            elif cv == TriCell(cu.x - 1, cu.y, "down"):
                mid2 = (2 * cu.x, 2 * cu.y + 1)
            else:
                mid2 = (2 * cu.x + 1, 2 * cu.y)
            hits += mid2 == center2
        assert hits == 1

    def test_equal_parity_rejected(self):
        with pytest.raises(RegionError):
            central_rhombus_edge((2, 2, 2, 2, 2, 2))

    def test_wrong_shape_rejected(self):
        with pytest.raises(RegionError):
            central_rhombus_edge((1, 2, 1, 2, 1, 2))


class TestAztecDiamond:
    def test_order_one_is_four_cycle(self):
        g = build_aztec_diamond(1)
        assert g.n == 4
        assert all(g.degree(v) == 2 for v in range(4))

    @pytest.mark.parametrize("n,cells", [(1, 4), (2, 12), (3, 24)])
    def test_cell_counts(self, n, cells):
        g = build_aztec_diamond(n)
        assert g.n == cells == 2 * n * (n + 1)
        assert g.is_balanced()

    def test_faces_are_squares(self):
        g = build_aztec_diamond(3)
        assert g.euler_check()
        assert all(len(f) == 4 for f in g.bounded_faces())

    def test_invalid_order(self):
        with pytest.raises(RegionError):
            build_aztec_diamond(0)


class TestAztecRectangle:
    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_square_case_equals_diamond(self, n):
        ar = build_aztec_rectangle(n, n)
        ad = build_aztec_diamond(n)
        # canonical labeled form: identical label set and adjacency
        assert ar.labels == ad.labels
        assert ar.edges == ad.edges

    def test_class_sizes(self):
        for a, b in ((1, 2), (1, 3), (2, 3)):
            cells = aztec_rectangle_cells(a, b)
            ones = sum((i + j) & 1 for i, j in cells)
            sizes = sorted((len(cells) - ones, ones))
            assert sizes == sorted((a * (b + 1), (a + 1) * b))

    def test_imbalance_without_removal_rejected(self):
        with pytest.raises(RegionError):
            build_aztec_rectangle(2, 3)

    def test_removal_restores_balance(self):
        cells = sorted(aztec_rectangle_cells(1, 2))
        ones = sum((i + j) & 1 for i, j in cells)
        majority = 1 if 2 * ones > len(cells) else 0
        victim = next(c for c in cells if ((c[0] + c[1]) & 1) == majority)
        g = build_aztec_rectangle(1, 2, removed=[victim])
        assert g.is_balanced()
        assert g.n == len(cells) - 1

    def test_some_single_removal_admits_a_matching(self):
        from matchenum import count_brute

        cells = sorted(aztec_rectangle_cells(1, 2))
        ones = sum((i + j) & 1 for i, j in cells)
        majority = 1 if 2 * ones > len(cells) else 0
        counts = [
            count_brute(build_aztec_rectangle(1, 2, removed=[c]))
            for c in cells
            if ((c[0] + c[1]) & 1) == majority
        ]
        assert max(counts) >= 1

    def test_bad_removals_rejected(self):
        with pytest.raises(RegionError):
            build_aztec_rectangle(1, 2, removed=[(99, 99)])
        with pytest.raises(RegionError):
            build_aztec_rectangle(2, 1)


class TestAztecWindow:
    @pytest.mark.parametrize("x,w", [(1, 1), (2, 1), (1, 2), (2, 2), (1, 3)])
    def test_cell_count_formula(self, x, w):
        g = build_aztec_window(x, w)
        assert g.n == 2 * w * (2 * x + w + 1)
        assert g.n % 2 == 0
        assert g.is_balanced()

    def test_window_is_diamond_difference(self):
        assert aztec_window_cells(1, 2) == (
            set(build_aztec_diamond(3).labels) - set(build_aztec_diamond(1).labels)
        )

    def test_one_hole_face(self):
        g = build_aztec_window(1, 2)
        assert g.euler_check()
        lens = sorted(len(f) for f in g.bounded_faces())
        assert lens[:-1] == [4] * (len(lens) - 1)
        assert lens[-1] > 4  # the face around the hole

    def test_invalid_parameters(self):
        with pytest.raises(RegionError):
            build_aztec_window(0, 1)
        with pytest.raises(RegionError):
            build_aztec_window(1, 0)


class TestHypercube:
    def test_small_cubes(self):
        q1 = build_hypercube(1)
        assert q1.n == 2 and len(q1.edges) == 1
        q2 = build_hypercube(2)
        assert q2.n == 4 and len(q2.edges) == 4
        q3 = build_hypercube(3)
        assert q3.n == 8 and len(q3.edges) == 12
        assert q3.coords is None

    def test_bipartition_by_bit_parity(self):
        g = build_hypercube(4)
        for u, v in g.edges:
            assert bin(u ^ v).count("1") == 1
            assert g.color[u] != g.color[v]

    def test_out_of_range(self):
        with pytest.raises(RegionError):
            build_hypercube(0)
        with pytest.raises(RegionError):
            build_hypercube(13)


class TestRegionSpec:
    def test_json_round_trip(self):
        spec = RegionSpec(
            "HEXAGON",
            {"sides": [2, 2, 2, 2, 2, 2]},
            holes=(TriCell(0, 1, "up"),),
        )
        again = RegionSpec.from_json(spec.to_json())
        assert again == spec
        assert again.build().n == spec.build().n

    def test_all_kinds_build(self):
        docs = [
            {"kind": "HEXAGON", "params": {"sides": [1, 1, 1, 1, 1, 1]}},
            {"kind": "AZTEC_DIAMOND", "params": {"n": 2}},
            {"kind": "AZTEC_RECTANGLE", "params": {"a": 2, "b": 2, "removed": []}},
            {"kind": "AZTEC_WINDOW", "params": {"x": 1, "w": 1}},
            {"kind": "HYPERCUBE", "params": {"n": 3}},
        ]
        for doc in docs:
            g = RegionSpec.from_dict(doc).build()
            assert isinstance(g, MatchGraph)
            assert g.n > 0

    def test_bad_documents(self):
        with pytest.raises(RegionError):
            RegionSpec.from_json("{not json")
        with pytest.raises(RegionError):
            RegionSpec.from_dict({"kind": "TRIANGLE", "params": {}})
        with pytest.raises(RegionError):
            RegionSpec.from_dict({"params": {}})
        with pytest.raises(RegionError):
            RegionSpec.from_dict(
                {"kind": "AZTEC_DIAMOND", "params": {"n": 1},
                 "holes": [[0, 0, "up"]]}
            )
        with pytest.raises(RegionError):
            RegionSpec.from_dict({"kind": "AZTEC_DIAMOND", "params": {}}).build()

    def test_holes_serialize_per_format(self):
        doc = {"kind": "HEXAGON", "params": {"sides": [2, 2, 2, 2, 2, 2]},
               "holes": [[0, 1, "up"]]}
        spec = RegionSpec.from_dict(doc)
        assert json.loads(spec.to_json())["holes"] == [[0, 1, "up"]]
