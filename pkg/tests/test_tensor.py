"""Tests para el producto tensorial sobre una categoria y el bi-tensor."""

import pytest

from src.approx.canonical import build_F, relative_pair
from src.categories.fincat import opposite
from src.diagrams.diagram import colimit, constant_diagram, make_diagram, restrict
from src.diagrams.tensor import adjunction_bijection_check, bi_tensor, point_diagram, tensor_over
from src.simplicial.search import iso_check
from src.simplicial.sset import constant_map, delta
from src.utils.errors import IndexMismatch


class TestTensorOver:

    def test_point_tensor_is_colimit(self, span, span_mixed):
        tensor = tensor_over(point_diagram(span), span_mixed)
        assert iso_check(tensor.result, colimit(span_mixed).sset) is not None

    def test_constant_s0(self, span, s0):
        tensor = tensor_over(point_diagram(span), constant_diagram(span, s0))
        assert tensor.result.count(0) == 2

    def test_requires_opposite_index(self, span_point, span_mixed):
        with pytest.raises(IndexMismatch):
            tensor_over(span_point, span_mixed)

    def test_summand_injections(self, span, span_mixed):
        tensor = tensor_over(point_diagram(span), span_mixed)
        assert set(tensor.summand_injections) == {"a", "b", "c"}
        assert tensor.summand_injections["b"].target == tensor.result

    def test_balancing_products_above_summands(self, interval, point):
        # los sumandos tienen dimension 4; X(b)×Y(a) tiene dimension 8
        big = delta(4)
        X = make_diagram(opposite(interval), {"a": point, "b": big}, {"f": constant_map(big, point, "0")})
        Y = make_diagram(interval, {"a": big, "b": point}, {"f": constant_map(big, point, "0")})
        tensor = tensor_over(X, Y)
        assert tensor.result.count(0) == 1
        assert tensor.products["a"].sset.dimension == 4


class TestBiTensor:

    def test_F_tensor_is_induction(self, span, span_mixed):
        pair = relative_pair(span, ["a", "c"])
        Y = restrict(span_mixed, pair.D_objs)
        result = bi_tensor(build_F(pair), Y)
        assert result.index == span
        assert result.value["b"].is_empty
        assert result.value["a"].count(0) == 1

    def test_F_tensor_full_pair(self, span, span_mixed):
        pair = relative_pair(span, span.objects)
        result = bi_tensor(build_F(pair), span_mixed)
        for obj in span.objects:
            assert iso_check(result.value[obj], span_mixed.value[obj]) is not None

    def test_missing_factors(self, span, span_mixed):
        with pytest.raises(IndexMismatch):
            bi_tensor(constant_diagram(span, span_mixed.value["a"]), span_mixed)


class TestTensorAdjunction:

    def test_terminal(self, terminal, point, s0):
        pair = relative_pair(terminal, terminal.objects)
        Y = constant_diagram(terminal, point, name="pt")
        Z = constant_diagram(terminal, s0, name="S0")
        check = adjunction_bijection_check(build_F(pair), Y, Z, q_max=1)
        assert check.passed
        assert check.witness["count"] == 2

    def test_interval(self, interval, point):
        pair = relative_pair(interval, interval.objects)
        Y = constant_diagram(interval, point, name="pt")
        assert adjunction_bijection_check(build_F(pair), Y, Y, q_max=1).passed
