"""Tests para categorias finitas, funtores y categorias coma."""

import pytest

from src.categories.comma import comma_coslice, comma_double, comma_slice
from src.categories.fincat import (
    CatFunctor,
    full_subcategory,
    is_loop_free,
    longest_chain,
    make_category,
    opposite,
    product,
    product_projections,
    switch_category,
    terminal_category,
    validate_functor,
)
from src.utils.errors import BadIdentifier, InvalidFunctor, MissingComposite, UnknownObject


class TestMakeCategory:

    def test_identities_inserted(self, span):
        assert span.id_of("a") == "id_a"
        assert len(span.morphisms) == 5

    def test_identity_compositions_inferred(self, span):
        assert span.comp("f", "id_b") == "f"
        assert span.comp("id_a", "f") == "f"

    def test_hom_sets(self, span):
        assert span.hom("b", "a") == ["f"]
        assert span.hom("a", "b") == []

    def test_missing_composite(self):
        spec = {
            "objects": ["a", "b", "c"],
            "morphisms": [
                {"id": "f", "src": "a", "tgt": "b"},
                {"id": "g", "src": "b", "tgt": "c"},
            ],
        }
        with pytest.raises(MissingComposite, match="g ∘ f"):
            make_category(spec)

    def test_reserved_characters(self):
        with pytest.raises(BadIdentifier):
            make_category({"objects": ["a;b"], "morphisms": []})

    def test_unknown_endpoint(self):
        with pytest.raises(UnknownObject):
            make_category({"objects": ["a"], "morphisms": [{"id": "f", "src": "a", "tgt": "z"}]})

    def test_square_composition(self, square):
        assert square.comp("h", "f") == "e"
        assert square.comp("k", "g") == "e"

    def test_equality_ignores_name(self):
        spec = {"objects": ["a"], "morphisms": []}
        assert make_category(spec, name="uno") == make_category(spec, name="otro")


class TestDerivedCategories:

    def test_opposite_reverses_composition(self, square):
        op = opposite(square)
        assert op.comp("f", "h") == "e"
        assert op.src("f") == "b"

    def test_product_counts(self, interval):
        prod = product(interval, interval)
        assert len(prod.objects) == 4
        assert len(prod.morphisms) == 9

    def test_projections_are_functors(self, interval, span):
        p1, p2 = product_projections(interval, span)
        validate_functor(p1)
        validate_functor(p2)
        assert p1("(a,c)") == "a"
        assert p2("(a,c)") == "c"

    def test_switch(self, interval, span):
        sw = switch_category(interval, span)
        assert sw("(b,c)") == "(c,b)"

    def test_full_subcategory(self, span):
        sub, incl = full_subcategory(span, ["a", "c"])
        assert sub.objects == ("a", "c")
        assert len(sub.morphisms) == 2
        assert incl("c") == "c"

    def test_full_subcategory_unknown(self, span):
        with pytest.raises(UnknownObject):
            full_subcategory(span, ["a", "z"])

    def test_terminal(self):
        cat = terminal_category()
        assert cat.objects == ("*",)
        assert len(cat.morphisms) == 1


class TestLoopFree:

    def test_square_is_loop_free(self, square):
        assert is_loop_free(square)
        assert longest_chain(square) == 2

    def test_idempotent_is_not_loop_free(self):
        cat = make_category({
            "objects": ["a"],
            "morphisms": [{"id": "e", "src": "a", "tgt": "a"}],
            "compose": [{"g": "e", "f": "e", "gf": "e"}],
        })
        assert not is_loop_free(cat)

    def test_terminal_chain(self):
        assert longest_chain(terminal_category()) == 0


class TestFunctors:

    def test_functor_not_preserving_identity(self, interval):
        bad = CatFunctor(interval, interval, {"a": "a", "b": "b"},
                         {"id_a": "f", "id_b": "id_b", "f": "f"})
        with pytest.raises(InvalidFunctor):
            validate_functor(bad)


class TestCommaCategories:

    def test_slice_over_a(self, span):
        comma, labels = comma_slice(span, ["a", "c"], "a")
        assert comma.objects == ("(a|id_a)",)
        assert labels.objects["(a|id_a)"] == ("a", "id_a")

    def test_slice_over_b_is_empty(self, span):
        comma, _ = comma_slice(span, ["a", "c"], "b")
        assert comma.objects == ()

    def test_coslice_under_b(self, span):
        comma, labels = comma_coslice(span, span.objects, "b")
        assert len(comma.objects) == 3
        assert len(comma.morphisms) == 5
        assert labels.morphisms["[(id_b|b)~f~(f|a)]"] == "f"

    def test_double_comma(self, span):
        comma, labels = comma_double(span, span.objects, "b", "a")
        assert comma.objects == ("(f|a|id_a)", "(id_b|b|f)")
        assert len(comma.morphisms) == 3

    def test_double_comma_requires_d_in_D(self, span):
        with pytest.raises(UnknownObject):
            comma_double(span, ["a", "c"], "b", "a")
