import random

import pytest
from hypothesis import given, settings, strategies as st

from arimat import (
    Forest,
    IntMatrix,
    NotSameComponent,
    coordinatizing_circuit,
    coordinatizing_path,
    elimination_order,
    incidence,
    kappa,
)

from conftest import COUNTEREX_36, EXAMPLE_37, EXAMPLE_37_INCIDENCE


A_37 = EXAMPLE_37.submatrix(cols=(4, 5, 6, 7))
A_36 = COUNTEREX_36.submatrix(cols=(4, 5, 6))

# spanning forest of the 3x7 example's circuit graph, reading edges as
# (row vertex, column vertex) with column labels 4..7
FOREST_37 = ((1, 4), (2, 4), (2, 5), (3, 5), (3, 6), (3, 7))


class TestIncidence:
    def test_zero(self):
        c = incidence(IntMatrix.zeros(2, 3))
        assert c.matrix == IntMatrix.zeros(2, 3)
        assert c.edges() == []

    def test_example(self):
        assert incidence(A_37).matrix == EXAMPLE_37_INCIDENCE

    def test_counterexample(self):
        assert incidence(A_36).matrix == IntMatrix([[1, 0, 1], [1, 1, 0], [0, 1, 1]])

    def test_sign_invariant(self):
        assert incidence(A_37) == incidence(
            A_37.scale_columns((-1, 1, -1, 1))
        )


class TestKappa:
    def test_example_connected(self):
        assert kappa(incidence(A_37)) == 1

    def test_all_zero(self):
        assert kappa(incidence(IntMatrix.zeros(2, 3))) == 5

    def test_counterexample_connected(self):
        assert kappa(incidence(A_36)) == 1

    def test_two_blocks(self):
        c = incidence(IntMatrix([[1, 0], [0, 1]]))
        assert kappa(c) == 2


class TestCoordinatizingPath:
    def test_empty(self):
        f = coordinatizing_path(incidence(IntMatrix.zeros(2, 3)))
        assert f.edges == ()
        assert f.kappa == 5

    def test_example_reproduces_highlighted_forest(self):
        f = coordinatizing_path(incidence(A_37))
        assert f.edges == FOREST_37
        assert len(f.edges) == 7 - 1

    def test_counterexample_five_edges(self):
        f = coordinatizing_path(incidence(A_36))
        assert len(f.edges) == 6 - 1

    def test_no_columns(self):
        f = coordinatizing_path(incidence(IntMatrix([[], [], []], ncols=0)))
        assert f.edges == () and f.kappa == 3

    @settings(max_examples=200, deadline=None)
    @given(st.integers(1, 6), st.integers(1, 6), st.data())
    def test_cardinality_formula(self, d, k, data):
        rows = data.draw(st.lists(
            st.lists(st.integers(0, 1), min_size=k, max_size=k),
            min_size=d, max_size=d))
        c = incidence(IntMatrix(rows))
        f = coordinatizing_path(c)
        assert len(f.edges) == c.n - kappa(c)
        assert set(f.edges) <= set(c.edges())


class TestForest:
    def test_rejects_cycle(self):
        with pytest.raises(ValueError):
            Forest.from_edges([(1, 3), (2, 3), (1, 4), (2, 4)], d=2, n=4)

    def test_rejects_bad_orientation(self):
        with pytest.raises(ValueError):
            Forest.from_edges([(3, 1)], d=2, n=4)

    def test_kappa_consistency(self):
        with pytest.raises(ValueError):
            Forest(((1, 3),), kappa=1, d=2, n=4)


class TestEliminationOrder:
    def test_empty(self):
        f = Forest.from_edges([], d=2, n=5)
        assert elimination_order(f).steps == ()

    def test_example_matches_published_sequence(self):
        f = Forest.from_edges(FOREST_37, d=3, n=7)
        order = elimination_order(f)
        assert [v for v, _ in order.steps] == [1, 4, 2, 5, 6, 7]
        assert [e for _, e in order.steps] == [
            (1, 4), (2, 4), (2, 5), (3, 5), (3, 6), (3, 7),
        ]

    def test_single_edge_eliminates_row(self):
        f = Forest.from_edges([(1, 2)], d=1, n=2)
        order = elimination_order(f)
        assert order.steps == ((1, (1, 2)),)

    @settings(max_examples=150, deadline=None)
    @given(st.integers(1, 5), st.integers(1, 5), st.data())
    def test_replay_is_valid(self, d, k, data):
        rows = data.draw(st.lists(
            st.lists(st.integers(0, 1), min_size=k, max_size=k),
            min_size=d, max_size=d))
        f = coordinatizing_path(incidence(IntMatrix(rows)))
        order = elimination_order(f)
        assert len(order.steps) == len(f.edges)
        remaining = set(f.edges)
        deg = f.degrees()
        for v, (i, j) in order.steps:
            assert (i, j) in remaining
            assert v in (i, j)
            assert deg[v] == 1
            remaining.discard((i, j))
            deg[i] -= 1
            deg[j] -= 1
        assert not remaining


class TestCoordinatizingCircuit:
    def test_published_circuits(self):
        f = Forest.from_edges(FOREST_37, d=3, n=7)
        c1 = coordinatizing_circuit(f, (2, 7))
        assert set(c1) == {(2, 5), (3, 5), (2, 7), (3, 7)}
        c2 = coordinatizing_circuit(f, (1, 6))
        assert set(c2) == {(1, 4), (2, 4), (2, 5), (3, 5), (3, 6), (1, 6)}

    def test_four_cycle(self):
        f = Forest.from_edges([(1, 3), (2, 3), (1, 4)], d=2, n=4)
        c = coordinatizing_circuit(f, (2, 4))
        assert set(c) == {(1, 3), (2, 3), (1, 4), (2, 4)}

    def test_contains_extra_edge_and_even_length(self):
        f = Forest.from_edges(FOREST_37, d=3, n=7)
        for e in [(2, 7), (1, 6)]:
            c = coordinatizing_circuit(f, e)
            assert e in c
            assert len(c) % 2 == 0 and len(c) >= 4

    def test_different_components(self):
        f = Forest.from_edges([(1, 3)], d=2, n=4)
        with pytest.raises(NotSameComponent):
            coordinatizing_circuit(f, (2, 4))

    def test_edge_already_in_forest(self):
        f = Forest.from_edges([(1, 3)], d=2, n=4)
        with pytest.raises(ValueError):
            coordinatizing_circuit(f, (1, 3))

    @settings(max_examples=100, deadline=None)
    @given(st.integers(2, 5), st.integers(2, 5), st.data())
    def test_every_nonforest_edge_closes_one_even_cycle(self, d, k, data):
        rows = data.draw(st.lists(
            st.lists(st.integers(0, 1), min_size=k, max_size=k),
            min_size=d, max_size=d))
        c = incidence(IntMatrix(rows))
        f = coordinatizing_path(c)
        forest = set(f.edges)
        for e in c.edges():
            if e in forest:
                continue
            cyc = coordinatizing_circuit(f, e)
            assert e in cyc
            assert len(cyc) % 2 == 0 and len(cyc) >= 4
            assert len(set(cyc)) == len(cyc)
            # all cycle edges except e belong to the forest
            assert set(cyc) - {e} <= forest
