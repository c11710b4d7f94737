"""
Tests del índice de Randić
==========================

Valores conocidos, identidad R = n/2 − gap y comparación con la suma
flotante arista por arista.
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings as hsettings, strategies as st

from core.exceptions import DomainError
from models.graph import Graph
from models.radical import RadicalValue, sqrt_rational
from services.randic_service import (
    pair_terms,
    randic,
    randic_float,
    randic_gap,
    randic_value,
    verify_gap_identity,
)

K4 = Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])

# 2-apex tree de orden 7 con R = 7/3 + 2/√3
DENSE_APEX = Graph(7, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 5), (2, 5), (5, 6), (3, 6), (4, 6), (1, 3), (2, 4)])


@st.composite
def graphs_without_isolated(draw, max_n=10):
    n = draw(st.integers(min_value=2, max_value=max_n))
    pairs = [(i, j) for j in range(n) for i in range(j)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    edges = [pair for pair, keep in zip(pairs, chosen) if keep]
    touched = {v for edge in edges for v in edge}
    # cada vértice aislado se conecta al siguiente
    for v in range(n):
        if v not in touched:
            w = (v + 1) % n
            edge = (min(v, w), max(v, w))
            if edge not in edges:
                edges.append(edge)
            touched.update(edge)
    return Graph(n, edges)


@st.composite
def relabeled(draw):
    g = draw(graphs_without_isolated())
    perm = draw(st.permutations(range(g.n)))
    return g, Graph(g.n, [(perm[u], perm[v]) for u, v in g.edges])


class TestKnownValues:
    def test_complete_graph(self):
        assert randic_value(K4) == 2

    def test_cycle(self):
        cycle = Graph(6, [(i, (i + 1) % 6) for i in range(6)])
        assert randic_value(cycle) == 3
        assert randic_gap(cycle).is_zero

    def test_path_of_three(self):
        p3 = Graph(3, [(0, 1), (1, 2)])
        assert randic_value(p3) == RadicalValue({2: 1})
        assert randic_gap(p3) == RadicalValue({1: Fraction(3, 2), 2: -1})

    def test_star(self):
        star = Graph(5, [(0, i) for i in range(1, 5)])
        assert randic_value(star) == 2

    def test_dense_apex_tree(self):
        assert randic_value(DENSE_APEX) == RadicalValue({1: Fraction(7, 3), 3: Fraction(2, 3)})

    @pytest.mark.parametrize("n", range(3, 51))
    def test_cycles(self, n):
        cycle = Graph(n, [(i, (i + 1) % n) for i in range(n)])
        assert randic_value(cycle) == Fraction(n, 2)

    @pytest.mark.parametrize("n", range(2, 51))
    def test_stars(self, n):
        star = Graph(n, [(0, i) for i in range(1, n)])
        assert randic_value(star) == sqrt_rational(n - 1)

    def test_single_vertex_is_zero(self):
        assert randic_value(Graph(1)).is_zero

    def test_pair_terms(self):
        weight, half_square = pair_terms(2, 2)
        assert weight == Fraction(1, 2)
        assert half_square.is_zero

    def test_spectrum_in_result(self):
        result = randic(DENSE_APEX)
        assert result.spectrum.get(3, 4) == 4
        assert result.spectrum.get(3, 3) == 7


class TestGapIdentity:
    def test_holds_on_k4(self):
        assert verify_gap_identity(K4)

    def test_isolated_vertex_is_outside_domain(self):
        with pytest.raises(DomainError):
            verify_gap_identity(Graph(3, [(0, 1)]))

    @hsettings(max_examples=100, deadline=None)
    @given(graphs_without_isolated())
    def test_holds_on_random_graphs(self, g):
        assert verify_gap_identity(g)


class TestFloatOracle:
    def test_dense_apex_tree(self):
        assert randic_float(DENSE_APEX) == pytest.approx(3.4880338717, abs=1e-9)

    @hsettings(max_examples=100, deadline=None)
    @given(graphs_without_isolated(max_n=14))
    def test_exact_matches_float(self, g):
        assert float(randic_value(g)) == pytest.approx(randic_float(g), abs=1e-9)


class TestInvariance:
    @hsettings(max_examples=100, deadline=None)
    @given(relabeled())
    def test_relabeling_keeps_value(self, pair):
        g, h = pair
        assert randic_value(g) == randic_value(h)
        assert randic(g).spectrum == randic(h).spectrum
