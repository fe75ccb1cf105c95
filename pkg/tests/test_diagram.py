"""Tests para diagramas, transformaciones naturales y colimites."""

import pytest

from src.categories.fincat import discrete_category, full_subcategory
from src.diagrams.diagram import (
    DiagramMap,
    colimit,
    colimit_factor,
    constant_diagram,
    identity_diagram_map,
    is_objectwise_homology_equivalence,
    make_diagram,
    reindex,
    restrict,
    validate_diagram_map,
)
from src.homology.chains import homology
from src.simplicial.operators import FormalSimplex
from src.simplicial.sset import constant_map, identity_map, make_map
from src.utils.errors import IndexMismatch, InvalidDiagram, NotCoequalizing, UnknownObject


def _swap(s0):
    return make_map(s0, s0, {"0": FormalSimplex("1", 0), "1": FormalSimplex("0", 0)})


class TestValidation:

    def test_mixed_span_is_valid(self, span_mixed):
        assert span_mixed.action["id_b"] == identity_map(span_mixed.value["b"])

    def test_functoriality_failure(self, square, s0):
        ident = identity_map(s0)
        values = {o: s0 for o in square.objects}
        action = {"f": ident, "g": ident, "h": ident, "k": ident, "e": _swap(s0)}
        with pytest.raises(InvalidDiagram, match="h ∘ f"):
            make_diagram(square, values, action)

    def test_missing_value(self, span, point):
        with pytest.raises(InvalidDiagram):
            make_diagram(span, {"a": point, "b": point}, {})

    def test_missing_action(self, span, point, s0):
        collapse = constant_map(s0, point, "0")
        with pytest.raises(InvalidDiagram, match="'g' sin accion"):
            make_diagram(span, {"a": point, "b": s0, "c": point}, {"f": collapse})

    def test_action_with_wrong_endpoints(self, span, point, s0):
        collapse = constant_map(s0, point, "0")
        with pytest.raises(InvalidDiagram):
            make_diagram(span, {"a": point, "b": s0, "c": s0}, {"f": collapse, "g": collapse})

    def test_equality_ignores_name(self, span, s0):
        assert constant_diagram(span, s0, name="uno") == constant_diagram(span, s0, name="otro")


class TestTransformations:

    def test_non_natural(self, interval, s0):
        X = constant_diagram(interval, s0)
        f = DiagramMap(X, X, {"a": identity_map(s0), "b": _swap(s0)})
        with pytest.raises(InvalidDiagram, match="'f'"):
            validate_diagram_map(f)

    def test_swap_everywhere_is_natural(self, interval, s0):
        X = constant_diagram(interval, s0)
        validate_diagram_map(DiagramMap(X, X, {"a": _swap(s0), "b": _swap(s0)}))

    def test_index_mismatch(self, span, interval, s0):
        f = DiagramMap(constant_diagram(span, s0), constant_diagram(interval, s0), {})
        with pytest.raises(IndexMismatch):
            validate_diagram_map(f)

    def test_objectwise_equivalence(self, span_mixed):
        check = is_objectwise_homology_equivalence(identity_diagram_map(span_mixed), ["a", "b"], 2)
        assert check.passed
        assert check.check_id == "objectwise-homology-equivalence"

    def test_objectwise_unknown_object(self, span_mixed):
        with pytest.raises(UnknownObject):
            is_objectwise_homology_equivalence(identity_diagram_map(span_mixed), ["z"], 2)


class TestRestrictReindex:

    def test_restrict(self, span_mixed):
        res = restrict(span_mixed, ["a", "c"])
        assert res.index.objects == ("a", "c")
        assert set(res.action) == {"id_a", "id_c"}

    def test_reindex_along_inclusion(self, span_mixed, span):
        sub, incl = full_subcategory(span, ["b", "a"])
        Y = reindex(span_mixed, incl)
        assert Y.value["b"] == span_mixed.value["b"]
        assert "f" in Y.action


class TestColimit:

    def test_mixed_span_collapses(self, span_mixed):
        result = colimit(span_mixed)
        assert result.sset.count(0) == 1
        assert result.sset.dimension == 0

    def test_constant_over_connected_index(self, span, s0):
        result = colimit(constant_diagram(span, s0))
        assert homology(result.sset, 1).betti == [2, 0]

    def test_constant_over_discrete_index(self, point):
        X = constant_diagram(discrete_category(["x", "y", "z"]), point)
        assert colimit(X).sset.count(0) == 3

    def test_factor_through_cocone(self, span_mixed, point):
        result = colimit(span_mixed)
        legs = {o: constant_map(span_mixed.value[o], point, "0") for o in span_mixed.index.objects}
        factor = colimit_factor(result, legs)
        assert factor.target == point

    def test_factor_rejects_non_cocone(self, interval, s0):
        X = constant_diagram(interval, s0)
        result = colimit(X)
        with pytest.raises(NotCoequalizing):
            colimit_factor(result, {"a": identity_map(s0), "b": _swap(s0)})
