"""
Tests de enumeración
====================

- Conteos de grafos conexos y árboles libres contra las sucesiones conocidas
- Oráculo etiquetado para órdenes chicos
- Estrategias A y B para k-apex trees y su validación cruzada
"""

import networkx as nx
import pytest

from core.config import settings
from core.exceptions import InfeasibleError, UsageError
from models.enums import EnumerationStrategy
from models.graph import Graph
from services import enumeration_service
from services.apex_service import apex_number
from services.canonical_service import canonical_code
from services.enumeration_service import (
    CONNECTED_COUNTS,
    FREE_TREE_COUNTS,
    apex_tree_codes,
    count_cross_check,
    enumerate_connected,
    enumerate_connected_bruteforce,
    enumerate_k_apex_trees,
    enumerate_trees,
    free_tree_parent_arrays,
    parent_array,
    resolve_strategy,
    strategy_b_candidates,
    summarize_apex_trees,
    summarize_connected,
    tree_code,
    tree_from_code,
)
from services.graph_io_service import from_networkx, to_networkx, write_graph6
from services.graph_service import is_connected, is_tree


class TestConnected:
    @pytest.mark.parametrize("n, expected", [(1, 1), (2, 1), (3, 2), (4, 6), (5, 21), (6, 112)])
    def test_counts(self, n, expected):
        graphs = list(enumerate_connected(n))
        assert len(graphs) == expected
        assert all(g.n == n and is_connected(g) for g in graphs)

    @pytest.mark.slow
    def test_order_seven(self):
        assert len(list(enumerate_connected(7))) == CONNECTED_COUNTS[7] == 853

    def test_output_is_canonical_and_sorted(self):
        codes = [write_graph6(g) for g in enumerate_connected(5)]
        assert codes == sorted(codes)
        assert all(canonical_code(g) == code for g, code in zip(enumerate_connected(5), codes))

    def test_levels_above_cache_are_streamed(self, monkeypatch):
        monkeypatch.setattr(enumeration_service, "CACHED_LEVELS", 4)
        monkeypatch.setattr(enumeration_service, "_LEVELS", {1: ("@",)})
        codes = [write_graph6(g) for g in enumerate_connected(5)]
        assert len(codes) == 21
        assert codes == sorted(codes)
        assert 4 in enumeration_service._LEVELS
        assert 5 not in enumeration_service._LEVELS

    def test_no_isomorphic_duplicates(self):
        graphs = [to_networkx(g) for g in enumerate_connected(5)]
        for i, G in enumerate(graphs):
            assert not any(nx.is_isomorphic(G, H) for H in graphs[i + 1:])

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_matches_labeled_oracle(self, n):
        oracle = {canonical_code(g) for g in enumerate_connected_bruteforce(n)}
        assert oracle == {write_graph6(g) for g in enumerate_connected(n)}

    def test_matches_networkx_atlas(self):
        atlas = {
            canonical_code(from_networkx(G))
            for G in nx.graph_atlas_g()[1:]
            if G.number_of_nodes() == 6 and nx.is_connected(G)
        }
        assert atlas == {write_graph6(g) for g in enumerate_connected(6)}

    def test_guards(self):
        with pytest.raises(UsageError):
            list(enumerate_connected(0))
        with pytest.raises(InfeasibleError) as info:
            list(enumerate_connected(settings.MAX_CONNECTED_ORDER + 1))
        assert info.value.estimate == CONNECTED_COUNTS[settings.MAX_CONNECTED_ORDER + 1]

    def test_summary(self):
        summary = summarize_connected(5)
        assert summary.count == 21
        assert summary.filter == "connected"
        assert summary.k is None


class TestTrees:
    @pytest.mark.parametrize("n", range(1, 12))
    def test_counts(self, n):
        trees = enumerate_trees(n)
        assert len(trees) == FREE_TREE_COUNTS[n]
        assert all(is_tree(t) and t.n == n for t in trees)

    def test_matches_networkx(self):
        expected = {tree_code(from_networkx(T)) for T in nx.nonisomorphic_trees(8)}
        assert expected == {tree_code(t) for t in enumerate_trees(8)}

    @pytest.mark.parametrize("n", range(1, 12))
    def test_parent_arrays_are_preorder(self, n):
        arrays = list(free_tree_parent_arrays(n))
        assert len(arrays) == FREE_TREE_COUNTS[n]
        for parents in arrays:
            assert parents[0] == -1
            assert all(0 <= p < v for v, p in enumerate(parents) if v)

    def test_one_tree_per_class(self):
        trees = enumerate_trees(10)
        assert len({tree_code(t) for t in trees}) == len(trees) == 106

    def test_code_round_trip(self):
        star = Graph(5, [(0, i) for i in range(1, 5)])
        code = tree_code(star)
        assert code == "(()()()())"
        assert tree_code(tree_from_code(code)) == code

    def test_parent_array(self):
        path = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
        assert parent_array(path) == (-1, 0, 1, 0, 3)

    def test_rejects_empty(self):
        with pytest.raises(UsageError):
            enumerate_trees(0)


class TestApexTrees:
    def test_known_counts(self):
        assert len(apex_tree_codes(1, 3)) == 1
        assert len(apex_tree_codes(1, 4)) == 3
        assert apex_tree_codes(2, 4) == ["C~"]

    def test_every_graph_has_exact_apex_number(self):
        for g in enumerate_k_apex_trees(2, 6):
            assert apex_number(g).k == 2

    def test_strategy_b_candidates(self):
        assert strategy_b_candidates(2, 7) == 2268

    @pytest.mark.parametrize("k, n", [(1, 4), (1, 5), (1, 6), (2, 5), (2, 6), (3, 6)])
    def test_strategies_agree(self, k, n):
        summary = count_cross_check(k, n)
        assert summary.count_a == summary.count_b == summary.count
        assert summary.strategy == "A+B"

    @pytest.mark.slow
    @pytest.mark.parametrize("k, n", [(1, 7), (2, 7), (1, 8), (2, 8)])
    def test_strategies_agree_larger_orders(self, k, n):
        summary = count_cross_check(k, n)
        assert summary.count_a == summary.count_b

    @pytest.mark.parametrize("n", [5, 6])
    def test_partition_of_connected_graphs(self, n):
        trees = len(enumerate_trees(n))
        apex = sum(len(apex_tree_codes(k, n)) for k in range(1, n - 1))
        assert trees + apex == CONNECTED_COUNTS[n]

    def test_validation(self):
        with pytest.raises(UsageError):
            apex_tree_codes(0, 5)
        with pytest.raises(UsageError):
            apex_tree_codes(3, 3)

    def test_resolve_strategy(self):
        assert resolve_strategy(2, 7, None, False) is EnumerationStrategy.B
        assert resolve_strategy(2, 7, EnumerationStrategy.A, False) is EnumerationStrategy.A
        with pytest.raises(InfeasibleError):
            resolve_strategy(1, 11, EnumerationStrategy.A, False)

    def test_summary(self):
        summary = summarize_apex_trees(1, 4, EnumerationStrategy.B)
        assert summary.count == 3
        assert summary.strategy == "B"
        assert summary.filter == "apex-number = 1"
