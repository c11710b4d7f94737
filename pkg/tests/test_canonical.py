"""
Tests de la forma canónica
==========================

El atlas de networkx (todos los grafos de hasta 7 vértices, uno por clase)
es el oráculo: códigos distintos para clases distintas e invariancia bajo
permutaciones.
"""

import random
from collections import defaultdict

import networkx as nx
import pytest
from hypothesis import given, settings as hsettings, strategies as st

from models.graph import Graph
from services.canonical_service import (
    are_isomorphic_bruteforce,
    canonical_code,
    canonical_form,
    canonical_labeling,
    refine,
    relabel,
)
from services.graph_io_service import from_networkx, write_graph6


def permuted(g: Graph, perm) -> Graph:
    return Graph(g.n, [(perm[u], perm[v]) for u, v in g.edges])


@st.composite
def graph_and_permutation(draw, max_n=9):
    n = draw(st.integers(min_value=1, max_value=max_n))
    pairs = [(i, j) for j in range(n) for i in range(j)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    perm = draw(st.permutations(range(n)))
    return Graph(n, [pair for pair, keep in zip(pairs, chosen) if keep]), perm


class TestCanonicalCode:
    def test_isomorphic_graphs_share_code(self):
        path_a = Graph(4, [(0, 1), (1, 2), (2, 3)])
        path_b = Graph(4, [(2, 0), (0, 3), (3, 1)])
        assert canonical_code(path_a) == canonical_code(path_b)

    def test_non_isomorphic_graphs_differ(self):
        star = Graph(4, [(0, 1), (0, 2), (0, 3)])
        path = Graph(4, [(0, 1), (1, 2), (2, 3)])
        assert canonical_code(star) != canonical_code(path)

    def test_canonical_form_is_consistent(self):
        g = Graph(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)])
        code, h = canonical_form(g)
        assert code == canonical_code(g) == write_graph6(h)
        assert are_isomorphic_bruteforce(g, h)

    def test_labeling_is_permutation(self):
        g = Graph(6, [(0, 1), (1, 2), (3, 4)])
        lab = canonical_labeling(g)
        assert sorted(lab) == list(range(6))
        assert write_graph6(Graph.from_adjacency(relabel(g.adj, lab))) == canonical_code(g)

    def test_regular_graphs(self):
        petersen = from_networkx(nx.petersen_graph())
        rng = random.Random(7)
        perm = list(range(10))
        rng.shuffle(perm)
        assert canonical_code(petersen) == canonical_code(permuted(petersen, perm))
        prism = from_networkx(nx.circular_ladder_graph(5))
        assert canonical_code(petersen) != canonical_code(prism)

    @hsettings(max_examples=150, deadline=None)
    @given(graph_and_permutation())
    def test_invariant_under_permutation(self, case):
        g, perm = case
        assert canonical_code(g) == canonical_code(permuted(g, perm))

    @pytest.mark.slow
    def test_atlas_classes_get_distinct_codes(self):
        by_order = defaultdict(set)
        total = defaultdict(int)
        for G in nx.graph_atlas_g()[1:]:
            g = from_networkx(G)
            by_order[g.n].add(canonical_code(g))
            total[g.n] += 1
        for n, codes in by_order.items():
            assert len(codes) == total[n]


class TestRefine:
    def test_splits_by_degree(self):
        star = Graph(4, [(0, 1), (0, 2), (0, 3)])
        cells = refine(star.adj, [tuple(range(4))])
        assert cells == [(1, 2, 3), (0,)]

    def test_regular_graph_stays_single_cell(self):
        cycle = Graph(5, [(i, (i + 1) % 5) for i in range(5)])
        assert refine(cycle.adj, [tuple(range(5))]) == [tuple(range(5))]


class TestBruteforce:
    def test_isomorphic(self):
        assert are_isomorphic_bruteforce(
            Graph(3, [(0, 1), (1, 2)]),
            Graph(3, [(0, 2), (2, 1)]),
        )

    def test_different_sizes(self):
        assert not are_isomorphic_bruteforce(Graph(3, [(0, 1)]), Graph(3, [(0, 1), (1, 2)]))
