"""Tests para hocolim, Lcolim y sus comparaciones."""

import pytest

from src.approx.hocolim import (
    Lcolim,
    compare_lcolim_hocolim,
    hocolim,
    hocolim_construction,
    hocolim_nat_variant_compare,
    hocolim_to_colim,
    under_category_diagram,
)
from src.diagrams.diagram import colimit, constant_diagram, make_diagram
from src.homology.chains import double_mapping_cylinder, homology, homology_from_complex
from src.simplicial.nerve import nerve
from src.simplicial.sset import constant_map, delta, identity_map
from src.utils.errors import SourceTargetMismatch


class TestUnderCategories:

    def test_values_contractible(self, span):
        under = under_category_diagram(span)
        for obj in span.objects:
            assert homology(under.value[obj], 2).betti == [1, 0, 0]
        assert under.value["b"].count(0) == 3


class TestHocolim:

    def test_point_gives_nerve(self, square):
        X = constant_diagram(square, delta(0), name="pt")
        assert homology(hocolim(X), 3) == homology(nerve(square), 3)

    def test_terminal_index(self, terminal, s0):
        X = constant_diagram(terminal, s0)
        assert homology(hocolim(X), 2).betti == [2, 0, 0]

    def test_mixed_span_is_circle(self, span_mixed):
        assert homology(hocolim(span_mixed), 3).betti == [1, 1, 0, 0]

    def test_mixed_span_against_double_cylinder(self, span_mixed):
        cylinder = double_mapping_cylinder(span_mixed.action["f"], span_mixed.action["g"], 3)
        assert homology_from_complex(cylinder, 3) == homology(hocolim(span_mixed), 3)

    def test_double_cylinder_requires_common_source(self, span_mixed, point):
        with pytest.raises(SourceTargetMismatch):
            double_mapping_cylinder(span_mixed.action["f"], identity_map(point), 1)

    def test_projection_to_colim(self, span_mixed):
        result = hocolim_construction(span_mixed)
        colim = colimit(span_mixed)
        projection = hocolim_to_colim(result, colim)
        assert projection.target == colim.sset
        # el colimite es un punto mientras hocolim es un circulo
        assert colim.sset.count(0) == 1

    def test_interval_mixed(self, interval, point, s0):
        X = make_diagram(interval, {"a": s0, "b": point}, {"f": constant_map(s0, point, "0")})
        assert homology(hocolim(X), 2).betti == [1, 0, 0]


class TestLcolim:

    def test_mixed_span_homology(self, span_mixed):
        assert homology(Lcolim(span_mixed), 3).betti == [1, 1, 0, 0]

    def test_comparison_is_iso(self, span_mixed):
        comparison = compare_lcolim_hocolim(span_mixed)
        assert comparison.check.passed, comparison.check.detail
        assert comparison.backward is not None
        assert comparison.check.check_id == "lcolim-hocolim[span; mixed]"

    def test_comparison_square_points(self, square, point):
        comparison = compare_lcolim_hocolim(constant_diagram(square, point, name="pt"))
        assert comparison.check.passed, comparison.check.detail
        assert comparison.backward is not None

    def test_comparison_constant(self, interval, s0):
        comparison = compare_lcolim_hocolim(constant_diagram(interval, s0, name="S0"))
        assert comparison.check.passed

    def test_natural_variant(self, span_mixed):
        check = hocolim_nat_variant_compare(span_mixed, up_to=2)
        assert check.passed
        assert check.witness["betti"] == [1, 1, 0]
