"""Tests for path matrices, path systems, signed sums, and LGV verification."""

import random
from fractions import Fraction as F

import pytest

from lgvcramer import (
    Matrix,
    Path,
    PathSystem,
    Permutation,
    build_digraph,
    build_gadget,
    count_path_systems,
    det_bareiss,
    det_leibniz,
    enumerate_path_systems,
    is_vertex_disjoint,
    path_matrix,
    replace_column,
    signed_sum,
    verify_lgv,
)
from lgvcramer.errors import CapExceeded, DuplicateInRole, SizeMismatch, UnknownVertex

from randgen import random_dag, random_roles

A22 = Matrix.from_rows([[1, 2], [3, 4]])
X22 = (F(-4), F(9, 2))  # solves A22 * x = (5, 6)


def gadget22():
    return build_gadget(A22, X22)


class TestPathMatrix:
    def test_bipartite_layer_is_coefficient_matrix(self):
        gad = gadget22()
        g0 = gad.graph.without_vertex("X")
        pm = path_matrix(g0, ("A1", "A2"), ("B1", "B2"))
        assert pm.entries == A22

    def test_column_through_sink_is_matrix_vector_product(self):
        gad = gadget22()
        pm = path_matrix(gad.graph, ("A1", "A2"), ("X", "B2"))
        # column 1 entries: a_j1*x_1 + a_j2*x_2
        assert pm.entries.column(0) == (F(5), F(6))
        assert pm.entries.column(1) == (F(2), F(4))

    def test_unreachable_gives_zero_matrix(self):
        g = build_digraph(["s1", "s2", "t1", "t2"], [])
        pm = path_matrix(g, ("s1", "s2"), ("t1", "t2"))
        assert pm.entries == Matrix.from_rows([[0, 0], [0, 0]])

    def test_dp_agrees_with_enumeration(self):
        rng = random.Random(21)
        for _ in range(40):
            g = random_dag(rng, rng.randint(2, 9))
            sources, sinks = random_roles(rng, g)
            pm = path_matrix(g, sources, sinks)
            for i, s in enumerate(sources):
                for j, t in enumerate(sinks):
                    brute = sum(
                        (p.weight for p in g.enumerate_paths(s, t)), F(0)
                    )
                    assert pm.entries.rows[i][j] == brute

    def test_role_validation(self):
        g = build_digraph(["u", "v"], [("u", "v", 1)])
        with pytest.raises(SizeMismatch):
            path_matrix(g, ("u",), ("u", "v"))
        with pytest.raises(SizeMismatch):
            path_matrix(g, (), ())
        with pytest.raises(DuplicateInRole):
            path_matrix(g, ("u", "u"), ("u", "v"))
        with pytest.raises(UnknownVertex):
            path_matrix(g, ("u",), ("nope",))


class TestEnumerateSystems:
    def test_bipartite_gadget_layer(self):
        gad = gadget22()
        g0 = gad.graph.without_vertex("X")
        systems = enumerate_path_systems(g0, ("A1", "A2"), ("B1", "B2"))
        assert len(systems) == 2
        ident, swap = systems
        assert ident.sigma.images == (0, 1)
        assert (ident.weight, ident.sign, ident.vertex_disjoint) == (F(4), 1, True)
        assert swap.sigma.images == (1, 0)
        assert (swap.weight, swap.sign, swap.vertex_disjoint) == (F(6), -1, True)

    def test_gadget_with_sink_at_position_one(self):
        gad = gadget22()
        systems = enumerate_path_systems(gad.graph, ("A1", "A2"), ("X", "B2"))
        assert len(systems) == 4
        assert [ps.vertex_disjoint for ps in systems] == [True, False, True, False]
        disjoint = [ps for ps in systems if ps.vertex_disjoint]
        assert [p.vertices for p in disjoint[0].paths] == [
            ("A1", "B1", "X"),
            ("A2", "B2"),
        ]
        assert disjoint[0].sign == 1
        assert [p.vertices for p in disjoint[1].paths] == [
            ("A1", "B2"),
            ("A2", "B1", "X"),
        ]
        assert disjoint[1].sign == -1
        # the two non-disjoint systems share B2 and cancel in the signed sum
        shared = [ps for ps in systems if not ps.vertex_disjoint]
        assert shared[0].weight == shared[1].weight
        assert shared[0].sign == -shared[1].sign

    def test_unreachable_sinks_give_no_systems(self):
        g = build_digraph(["s", "t"], [])
        assert enumerate_path_systems(g, ("s",), ("t",)) == []

    def test_deterministic_order(self):
        gad = gadget22()
        a = enumerate_path_systems(gad.graph, ("A1", "A2"), ("X", "B2"))
        b = enumerate_path_systems(gad.graph, ("A1", "A2"), ("X", "B2"))
        assert a == b

    def test_count_matches_enumeration(self):
        rng = random.Random(22)
        for _ in range(30):
            g = random_dag(rng, rng.randint(2, 8))
            sources, sinks = random_roles(rng, g)
            total = count_path_systems(g, sources, sinks)
            assert total == len(enumerate_path_systems(g, sources, sinks))

    def test_cap(self):
        gad = gadget22()
        with pytest.raises(CapExceeded):
            enumerate_path_systems(gad.graph, ("A1", "A2"), ("X", "B2"), cap=3)


class TestVertexDisjoint:
    def test_two_disjoint_edges(self):
        ps = PathSystem(
            sigma=Permutation.from_images((0, 1)),
            paths=(Path(("A1", "B1"), F(1)), Path(("A2", "B2"), F(1))),
            weight=F(1),
            sign=1,
            vertex_disjoint=True,
        )
        assert is_vertex_disjoint(ps)

    def test_shared_vertex(self):
        ps = PathSystem(
            sigma=Permutation.from_images((0, 1)),
            paths=(Path(("A1", "B1", "X"), F(1)), Path(("A2", "B1"), F(1))),
            weight=F(1),
            sign=1,
            vertex_disjoint=False,
        )
        assert not is_vertex_disjoint(ps)

    def test_single_path_is_vacuously_disjoint(self):
        ps = PathSystem(
            sigma=Permutation.from_images((0,)),
            paths=(Path(("A1", "B1"), F(1)),),
            weight=F(1),
            sign=1,
            vertex_disjoint=True,
        )
        assert is_vertex_disjoint(ps)


class TestSignedSum:
    def test_bipartite_layer_leibniz(self):
        gad = gadget22()
        g0 = gad.graph.without_vertex("X")
        systems = enumerate_path_systems(g0, ("A1", "A2"), ("B1", "B2"))
        expected = F(1 * 4 - 2 * 3)
        assert signed_sum(systems) == expected
        assert signed_sum(systems, vd_only=True) == expected

    def test_empty_sum_is_zero(self):
        assert signed_sum([]) == 0
        assert signed_sum([], vd_only=True) == 0

    def test_vd_sum_scales_by_x1(self):
        gad = gadget22()
        systems = enumerate_path_systems(gad.graph, ("A1", "A2"), ("X", "B2"))
        det_a = F(1 * 4 - 2 * 3)
        assert signed_sum(systems, vd_only=True) == X22[0] * det_a
        assert signed_sum(systems) == X22[0] * det_a


class TestVerifyLgv:
    def test_single_edge(self):
        g = build_digraph(["A1", "B1"], [("A1", "B1", F(7, 3))])
        report = verify_lgv(g, ("A1",), ("B1",))
        assert report.verdict == "pass"
        assert report.det_path_matrix == F(7, 3)
        assert (report.total_count, report.vd_count) == (1, 1)

    def test_three_by_three_integer_instance(self):
        # a_ij = 3(i-1)+j with unit sink weights; A is singular so every
        # column replacement by A*1 has determinant 0
        a = Matrix.from_rows([[1, 2, 3], [4, 5, 6], [7, 8, 9]])
        gad = build_gadget(a, (1, 1, 1))
        b = a.mul_vector((F(1), F(1), F(1)))
        for i in (1, 2, 3):
            report = verify_lgv(gad.graph, gad.row_vertices, gad.extended_sinks(i))
            assert report.verdict == "pass"
            expected = det_leibniz(replace_column(a, i, b))
            assert report.det_path_matrix == expected == 0

    def test_unreachable_reports_zeroes_and_passes(self):
        g = build_digraph(["s", "t"], [])
        report = verify_lgv(g, ("s",), ("t",))
        assert report.verdict == "pass"
        assert report.det_path_matrix == 0
        assert report.all_systems_sum == 0
        assert report.vd_systems_sum == 0
        assert (report.total_count, report.vd_count) == (0, 0)

    def test_overlapping_roles_with_empty_paths(self):
        g = build_digraph(
            ["v1", "v2", "v3"], [("v1", "v2", 2), ("v2", "v3", 5)]
        )
        report = verify_lgv(g, ("v1", "v2"), ("v2", "v3"))
        assert report.verdict == "pass"
        # both systems route through v2, so the disjoint sum is empty
        assert report.vd_count == 0
        assert report.det_path_matrix == 0

    def test_random_dag(self):
        rng = random.Random(23)
        g = random_dag(rng, 8)
        sources, sinks = random_roles(rng, g, max_k=2)
        report = verify_lgv(g, sources, sinks)
        assert report.verdict == "pass"

    def test_cap_propagates(self):
        gad = gadget22()
        with pytest.raises(CapExceeded):
            verify_lgv(gad.graph, ("A1", "A2"), ("X", "B2"), cap=2)


def test_leibniz_consistency_property():
    # the signed sum over ALL systems is det(path matrix) by pure algebra
    rng = random.Random(24)
    for _ in range(30):
        g = random_dag(rng, rng.randint(2, 8))
        sources, sinks = random_roles(rng, g)
        pm = path_matrix(g, sources, sinks)
        systems = enumerate_path_systems(g, sources, sinks)
        assert signed_sum(systems) == det_bareiss(pm.entries)
