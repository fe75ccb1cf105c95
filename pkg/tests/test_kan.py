"""Tests para la induccion (extension de Kan izquierda), unidad y counidad."""

import pytest

from src.categories.fincat import discrete_category
from src.diagrams.diagram import constant_diagram, restrict, validate_diagram_map
from src.diagrams.kan import counit, enumerate_diagram_maps, induce, induction, induction_adjunction_check, unit
from src.simplicial.sset import invert_if_iso
from src.utils.errors import IndexMismatch, SearchBudgetExceeded


@pytest.fixture
def res_mixed(span_mixed):
    return restrict(span_mixed, ["a", "c"])


class TestInduction:

    def test_values(self, res_mixed, span):
        ind = induce(res_mixed, span)
        assert ind.value["b"].is_empty
        assert ind.value["a"].count(0) == 1
        assert ind.value["c"].count(0) == 1

    def test_induction_from_full_category(self, span_mixed, span):
        ind = induce(span_mixed, span)
        for obj in span.objects:
            assert ind.value[obj].count(0) == span_mixed.value[obj].count(0)

    def test_non_full_index(self, span, point):
        Y = constant_diagram(discrete_category(["a", "b"]), point)
        with pytest.raises(IndexMismatch):
            induction(Y, span)

    def test_unit_is_iso(self, res_mixed, span):
        eta = unit(res_mixed, span)
        validate_diagram_map(eta)
        assert all(invert_if_iso(eta.components[d]) is not None for d in ("a", "c"))

    def test_counit(self, span_mixed):
        eps = counit(span_mixed, ["a", "c"])
        validate_diagram_map(eps)
        assert eps.components["b"].source.is_empty
        assert invert_if_iso(eps.components["a"]) is not None


class TestEnumeration:

    def test_self_maps_of_mixed_span(self, span_mixed):
        assert len(enumerate_diagram_maps(span_mixed, span_mixed)) == 4

    def test_budget(self, span_mixed):
        with pytest.raises(SearchBudgetExceeded):
            enumerate_diagram_maps(span_mixed, span_mixed, budget=2)


class TestAdjunction:

    def test_points(self, span_point):
        Y = restrict(span_point, ["a", "c"])
        check = induction_adjunction_check(Y, span_point)
        assert check.passed
        assert check.witness["count"] == 1

    def test_mixed(self, res_mixed, span_mixed):
        assert induction_adjunction_check(res_mixed, span_mixed).passed

    def test_s0_target(self, span, point, s0):
        Y = restrict(constant_diagram(span, point), ["a"])
        Z = constant_diagram(span, s0)
        check = induction_adjunction_check(Y, Z)
        assert check.passed
        assert check.witness["count"] == 2
