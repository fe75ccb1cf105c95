"""Tests para los diagramas canonicos F, E y el mapa ϑ."""

import pytest

from src.approx.canonical import (
    build_E,
    build_F,
    build_theta,
    check_F_induction,
    comparison_transformation,
    relative_pair,
    verify_theta_we,
)
from src.homology.chains import homology
from src.utils.errors import InputError, UnknownObject


@pytest.fixture
def span_ac(span):
    return relative_pair(span, ["c", "a"])


@pytest.fixture
def span_full(span):
    return relative_pair(span, span.objects)


class TestRelativePair:

    def test_order_follows_category(self, span_ac):
        assert span_ac.D_objs == ("a", "c")
        assert len(span_ac.index.objects) == 6

    def test_empty_rejected(self, span):
        with pytest.raises(InputError):
            relative_pair(span, [])

    def test_empty_allowed(self, span):
        assert relative_pair(span, [], allow_empty=True).D_objs == ()

    def test_unknown(self, span):
        with pytest.raises(UnknownObject):
            relative_pair(span, ["a", "z"])

    def test_decode(self, span_full):
        assert span_full.decode("(f,id_a)") == ("f", "id_a")


class TestF:

    def test_values_are_hom_sets(self, span_ac):
        F = build_F(span_ac)
        assert F.value["(a,a)"].nd_at(0) == ("id_a",)
        assert F.value["(a,b)"].is_empty
        assert F.value["(c,a)"].is_empty

    def test_action_composes(self, span_full):
        F = build_F(span_full)
        # (f, id_a): (a, a) → (b, a) en D^op×C precompone con f
        image = F.action["(f,id_a)"].assignment["id_a"]
        assert image.base == "f"

    def test_factors(self, span_full, span):
        assert build_F(span_full).factors[1] == span


class TestE:

    def test_values_are_contractible_or_empty(self, span_full):
        E = build_E(span_full)
        assert E.value["(b,a)"].count(0) == 2
        assert homology(E.value["(b,a)"], 2).betti == [1, 0, 0]
        assert E.value["(a,b)"].is_empty

    def test_classifying_spaces_at_initial_and_terminal(self, square):
        E = build_E(relative_pair(square, square.objects))
        # a inicial: E(a, c) = B(C↘c); d terminal: E(c, d) = B(c↘C)
        for key in ("(a,c)", "(c,d)", "(a,d)"):
            assert homology(E.value[key], 2).betti == [1, 0, 0], key
        assert E.value["(a,c)"].count(0) == 2
        assert E.value["(c,d)"].count(0) == 2
        assert E.value["(a,d)"].count(0) == 4

    def test_natural_variant(self, span_full):
        assert build_E(span_full, "natural").name == "E♮"

    def test_unknown_variant(self, span_full):
        with pytest.raises(InputError):
            build_E(span_full, "covariante")


class TestTheta:

    def test_theta_is_natural(self, span_ac):
        bundle = build_theta(span_ac)
        assert set(bundle.theta.components) == set(span_ac.index.objects)

    @pytest.mark.parametrize("variant", ["op", "natural"])
    def test_weak_equivalences(self, span_full, variant):
        for d in span_full.D_objs:
            for c in span_full.C.objects:
                check = verify_theta_we(span_full, d, c, up_to=2, op_variant=variant)
                assert check.passed, check.detail

    def test_weak_equivalence_subcategory(self, span_ac):
        check = verify_theta_we(span_ac, "a", "a", up_to=2)
        assert check.passed
        assert check.check_id == "theta[span; a,a; op]"
        assert "(nivel homologia)" in check.detail

    def test_comparison_transformation(self, span_full):
        nu = comparison_transformation(span_full, "b", "a")
        assert nu.components["(id_b|b|f)"] == "[(id_b|b|f)~id_b~(id_b|b|f)]"

    def test_F_induction(self, span_ac, span_full):
        assert check_F_induction(span_ac).passed
        assert check_F_induction(span_full).passed
