"""
Tests de la familia extremal
============================

Valor extremal, pertenencia, construcción de miembros y auditorías de
corolarios y conjetura. En (k=2, n=7) hay un 2-apex tree con R mayor que
el valor extremal: las auditorías deben reportarlo.
"""

from fractions import Fraction

import pytest

from core.exceptions import UsageError
from models.enums import MembershipVerdict, Sign
from models.graph import Graph
from models.radical import RadicalValue
from services.canonical_service import canonical_code
from services.family_service import (
    FLOAT_TOLERANCE,
    check_corollary_gap2,
    check_corollary_many_asym,
    construct_member,
    cubic_catalog,
    extremal_value,
    family_membership,
    subdivide_edge,
    subdivided_k4,
    verify_conjecture,
)
from services.randic_service import randic_float, randic_value

K4 = Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
DENSE_APEX = Graph(7, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 5), (2, 5), (5, 6), (3, 6), (4, 6), (1, 3), (2, 4)])


class TestExtremalValue:
    def test_closed_form(self):
        assert extremal_value(7).to_text() == "8/3 + 1/3*sqrt(6)"
        assert extremal_value(7) == RadicalValue({1: Fraction(8, 3), 6: Fraction(1, 3)})

    def test_is_total(self):
        assert extremal_value(1) - extremal_value(0) == Fraction(1, 2)

    @pytest.mark.parametrize("n", range(0, 40))
    def test_grows_by_one_every_two_vertices(self, n):
        assert extremal_value(n + 2) - extremal_value(n) == 1

    def test_dense_apex_tree_exceeds(self):
        assert randic_value(DENSE_APEX) > extremal_value(7)


class TestMembership:
    def test_subdivided_k4_is_member(self):
        membership = family_membership(subdivided_k4(9), 2)
        assert membership.is_member
        assert membership.value == extremal_value(9)
        assert membership.apex_k == 2

    def test_order_checked_first(self):
        membership = family_membership(K4, 2)
        assert membership.verdict is MembershipVerdict.ORDER_TOO_SMALL

    def test_degrees(self):
        assert family_membership(DENSE_APEX, 2).verdict is MembershipVerdict.DEGREES_OUTSIDE_2_3

    def test_asymmetric_count(self):
        cycle = Graph(8, [(i, (i + 1) % 8) for i in range(8)])
        membership = family_membership(cycle, 2)
        assert membership.verdict is MembershipVerdict.ASYMMETRIC_COUNT
        assert membership.asym_count == 0

    def test_apex_number(self):
        membership = family_membership(subdivided_k4(11), 3)
        assert membership.verdict is MembershipVerdict.APEX_NUMBER
        assert membership.apex_k == 2

    def test_requires_k_two(self):
        with pytest.raises(UsageError):
            family_membership(K4, 1)


class TestConstruction:
    def test_subdivided_k4_shape(self):
        g = subdivided_k4(7)
        assert g.n == 7 and g.m == 9
        assert sorted(g.degrees) == [2, 2, 2, 3, 3, 3, 3]
        with pytest.raises(UsageError):
            subdivided_k4(4)

    def test_subdivide_edge(self):
        g = subdivide_edge(K4, (0, 1), 2)
        assert g.n == 6 and g.m == 8
        assert (0, 1) not in g.edges

    @pytest.mark.parametrize("n", range(7, 21))
    def test_k2_members(self, n):
        result = construct_member(2, n)
        assert result.found
        assert result.source == "parametric-k4"
        value = randic_value(result.graph)
        assert value == extremal_value(n)
        assert abs(randic_float(result.graph) - float(extremal_value(n))) <= FLOAT_TOLERANCE

    def test_k3_member_from_cubic_catalog(self):
        result = construct_member(3, 11)
        assert result.found
        assert result.source == "cubic-catalog"
        assert family_membership(result.graph, 3).is_member

    def test_k4_member_from_cubic_catalog(self):
        result = construct_member(4, 18)
        assert result.found
        assert result.graph.n == 18
        assert family_membership(result.graph, 4).is_member

    def test_scope(self):
        with pytest.raises(UsageError):
            construct_member(2, 6)
        with pytest.raises(UsageError):
            construct_member(1, 10)

    def test_cubic_catalog(self):
        catalog = cubic_catalog(10)
        orders = [g.n for g in catalog]
        assert orders == sorted(orders)
        assert orders[0] == 4
        assert len({canonical_code(g) for g in catalog}) == len(catalog)
        assert all(set(g.degrees) == {3} for g in catalog)


class TestCorollaries:
    def test_gap_two_holds_at_order_seven(self):
        report = check_corollary_gap2(2, 7)
        assert report.holds
        assert report.violations == []
        assert report.qualifying == 406
        assert report.qualifying <= report.scanned

    @pytest.mark.slow
    def test_gap_two_holds_at_order_eight(self):
        report = check_corollary_gap2(2, 8)
        assert report.holds
        assert report.violations == []
        assert report.qualifying == 3916

    def test_many_asymmetric_edges_violated(self):
        report = check_corollary_many_asym(2, 7, 2)
        assert not report.holds
        assert canonical_code(DENSE_APEX) in {v.graph6 for v in report.violations}
        [violation] = [v for v in report.violations if v.graph6 == canonical_code(DENSE_APEX)]
        assert violation.asymmetric_by_gap == {"1": 4}

    def test_m_range(self):
        with pytest.raises(UsageError):
            check_corollary_many_asym(2, 7, 5)
        with pytest.raises(UsageError):
            check_corollary_many_asym(2, 7, 1)

    def test_scope(self):
        with pytest.raises(UsageError):
            check_corollary_gap2(2, 6)


class TestConjecture:
    def test_fails_at_order_seven(self):
        report = verify_conjecture(2, 7)
        assert not report.conjecture_holds
        assert report.comparison is Sign.POSITIVE
        assert canonical_code(DENSE_APEX) in {c.graph6 for c in report.counterexamples}
        assert canonical_code(subdivided_k4(7)) in report.family_members
        assert not report.family_empty
        assert report.float_agrees
        assert report.extremal_value.exact == "8/3 + 1/3*sqrt(6)"

    def test_scope(self):
        with pytest.raises(UsageError):
            verify_conjecture(2, 5)

    @pytest.mark.slow
    def test_holds_at_order_eight(self):
        report = verify_conjecture(2, 8)
        assert report.conjecture_holds is True
        assert report.comparison is Sign.ZERO
        assert report.float_agrees
        assert len(report.maximizers) == 5
        assert report.maximizers == report.family_members
        assert report.counterexamples == []

    @pytest.mark.slow
    def test_holds_at_order_nine(self):
        report = verify_conjecture(2, 9)
        assert report.conjecture_holds is True
        assert report.comparison is Sign.ZERO
        assert report.float_agrees
        assert report.scanned == 37536
        assert report.maximizers == report.family_members
        assert report.counterexamples == []
