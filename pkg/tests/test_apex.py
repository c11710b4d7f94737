"""
Tests de número apex
====================

- Valores conocidos y certificados
- Ramificación y poda contra el oráculo por subconjuntos
- Auditoría de no regularidad
"""

import networkx as nx
import pytest
from hypothesis import given, settings as hsettings, strategies as st

from core.exceptions import DomainError, InfeasibleError, UsageError
from models.graph import Graph
from services.apex_service import (
    apex_at_most,
    apex_number,
    apex_number_bruteforce,
    audit_nonregularity,
    is_k_apex_tree,
    regular_witness,
    shortest_cycle,
)
from services.canonical_service import canonical_code
from services.enumeration_service import enumerate_connected
from services.graph_io_service import from_networkx, parse_graph6, write_graph6
from services.graph_service import is_tree

K4 = Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
K33 = from_networkx(nx.complete_bipartite_graph(3, 3))
PRISM = from_networkx(nx.circular_ladder_graph(3))


def cycle(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


@st.composite
def connected_graphs(draw, min_n=8, max_n=12):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    edges = {(draw(st.integers(min_value=0, max_value=v - 1)), v) for v in range(1, n)}
    pairs = [(i, j) for j in range(n) for i in range(j)]
    extra = draw(st.lists(st.sampled_from(pairs), max_size=n))
    edges.update(extra)
    return Graph(n, sorted(edges))


class TestKnownValues:
    def test_complete_graph(self):
        cert = apex_number(K4)
        assert cert.k == 2
        assert cert.witness == (0, 1)
        assert write_graph6(cert.residual) == "A_"

    def test_tree(self):
        path = Graph(6, [(i, i + 1) for i in range(5)])
        cert = apex_number(path)
        assert cert.k == 0
        assert cert.witness == ()
        assert cert.residual == path

    def test_cycle(self):
        cert = apex_number(cycle(9))
        assert cert.k == 1
        assert cert.witness == (0,)

    @pytest.mark.parametrize("n", range(3, 31))
    def test_cycles_have_apex_one(self, n):
        assert apex_number(cycle(n)).k == 1

    def test_petersen(self):
        petersen = from_networkx(nx.petersen_graph())
        cert = apex_number(petersen)
        assert is_tree(cert.residual)
        assert cert.k == apex_number_bruteforce(petersen).k

    def test_disconnected(self):
        with pytest.raises(DomainError):
            apex_number(Graph(4, [(0, 1), (2, 3)]))
        with pytest.raises(DomainError):
            apex_number_bruteforce(Graph(4, [(0, 1), (2, 3)]))

    def test_residual_is_tree(self):
        cert = apex_number(K33)
        assert cert.k == 2
        assert is_tree(cert.residual)
        assert cert.residual.n == 4

    def test_bruteforce_guard(self):
        with pytest.raises(InfeasibleError):
            apex_number_bruteforce(cycle(17))

    def test_shortest_cycle(self):
        g = parse_graph6("C~")
        assert len(shortest_cycle(g.adj, g.full_mask)) == 3


class TestAgainstBruteforce:
    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
    def test_all_connected_graphs(self, n):
        for g in enumerate_connected(n):
            fast = apex_number(g)
            slow = apex_number_bruteforce(g)
            assert fast.k == slow.k, write_graph6(g)
            assert fast.witness == slow.witness, write_graph6(g)

    @pytest.mark.slow
    def test_order_seven(self):
        for g in enumerate_connected(7):
            assert apex_number(g).witness == apex_number_bruteforce(g).witness

    @hsettings(max_examples=60, deadline=None)
    @given(connected_graphs())
    def test_random_connected_graphs(self, g):
        fast = apex_number(g)
        assert fast.witness == apex_number_bruteforce(g).witness
        assert apex_at_most(g, fast.k)
        assert fast.k == 0 or not apex_at_most(g, fast.k - 1)

    @pytest.mark.slow
    @hsettings(max_examples=500, deadline=None)
    @given(connected_graphs())
    def test_many_random_connected_graphs(self, g):
        assert apex_number(g).k == apex_number_bruteforce(g).k


class TestPredicates:
    def test_is_k_apex_tree(self):
        assert is_k_apex_tree(K4, 2)
        assert not is_k_apex_tree(K4, 1)
        assert is_k_apex_tree(cycle(5), 1)
        assert is_k_apex_tree(Graph(2, [(0, 1)]), 0)

    def test_disconnected_is_never_apex_tree(self):
        assert not is_k_apex_tree(Graph(4, [(0, 1), (2, 3)]), 1)

    def test_negative_k(self):
        with pytest.raises(UsageError):
            is_k_apex_tree(K4, -1)

    def test_apex_at_most(self):
        assert apex_at_most(K33, 2)
        assert not apex_at_most(K33, 1)
        assert not apex_at_most(K33, 0)


class TestNonRegularity:
    def test_complete_graph_quantities(self):
        witness = regular_witness(K4, 2, 3)
        assert witness.cross_edges == 4
        assert witness.identity_ok
        assert witness.bound_ok
        assert witness.chain_ok
        assert witness.pendant_ok

    def test_order_four(self):
        audit = audit_nonregularity(2, 4)
        assert [w.graph6 for w in audit.regular_witnesses] == ["C~"]
        assert audit.theorem_consistent

    def test_order_six_has_cubic_witnesses(self):
        audit = audit_nonregularity(2, 6)
        codes = {w.graph6 for w in audit.regular_witnesses}
        assert codes == {canonical_code(K33), canonical_code(PRISM)}
        assert all(w.degree == 3 for w in audit.regular_witnesses)
        assert audit.threshold == 7
        assert audit.theorem_consistent

    def test_no_witness_from_threshold(self):
        audit = audit_nonregularity(2, 7)
        assert audit.regular_witnesses == []
        assert audit.scanned > 0
        assert audit.theorem_consistent

    @pytest.mark.slow
    @pytest.mark.parametrize("n", [8, 9])
    def test_no_witness_above_threshold(self, n):
        audit = audit_nonregularity(2, n)
        assert audit.regular_witnesses == []

    def test_requires_k_at_least_two(self):
        with pytest.raises(UsageError):
            audit_nonregularity(1, 5)
