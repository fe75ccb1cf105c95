"""Tests para simplices formales, conjuntos simpliciales y mapas."""

import pytest

from src.simplicial.operators import (
    FormalSimplex,
    degeneracy,
    format_formal,
    parse_formal,
    surjection_to_word,
    word_to_surjection,
)
from src.simplicial.sset import (
    boundary_delta,
    build_sset,
    constant_map,
    constant_sset,
    coproduct,
    delta,
    empty_sset,
    identity_map,
    invert_if_iso,
    make_map,
    product_with_projections,
    skeleton,
)
from src.utils.errors import CapExceeded, InputError, InvalidMap, InvalidSimplicialSet, ParseError


def _v(x: str) -> FormalSimplex:
    return FormalSimplex(x, 0, ())


class TestFormalSimplex:

    def test_word_must_decrease(self):
        with pytest.raises(InvalidSimplicialSet):
            FormalSimplex("x", 1, (0, 1))

    def test_format(self):
        assert format_formal(FormalSimplex("x", 1, (2, 0))) == "s2 s0 | x"
        assert format_formal(_v("x")) == "x"

    def test_parse(self):
        assert parse_formal("s1 | e", {"e": 1}) == FormalSimplex("e", 1, (1,))
        assert parse_formal("v", {"v": 0}) == _v("v")

    def test_parse_unknown_base(self):
        with pytest.raises(ParseError):
            parse_formal("s0 | z", {"v": 0})

    def test_surjection_word(self):
        assert word_to_surjection((0,), 1) == (0, 0)
        assert word_to_surjection((1,), 2) == (0, 1, 1)
        assert surjection_to_word((0, 1, 1)) == (1,)

    def test_degeneracy_normal_form(self):
        # s0 s0 = s1 s0
        x = degeneracy(degeneracy(_v("v"), 0), 0)
        assert x == FormalSimplex("v", 0, (1, 0))


class TestSimplicialIdentities:

    def test_faces_of_degenerate_edge(self):
        d1 = delta(1)
        x = FormalSimplex("0,1", 1, (0,))
        assert d1.face(x, 0) == FormalSimplex("0,1", 1, ())
        assert d1.face(x, 1) == FormalSimplex("0,1", 1, ())
        assert d1.face(x, 2) == FormalSimplex("0", 0, (0,))

    def test_faces_of_delta2(self):
        d2 = delta(2)
        top = d2.gen("0,1,2")
        assert d2.face(top, 0) == FormalSimplex("1,2", 1, ())
        assert d2.face(top, 2) == FormalSimplex("0,1", 1, ())

    def test_broken_identity(self):
        faces = {
            "ab": (_v("b"), _v("a")),
            "bc": (_v("c"), _v("b")),
            "ac": (_v("c"), _v("a")),
            "s": (FormalSimplex("ab", 1), FormalSimplex("ac", 1), FormalSimplex("bc", 1)),
        }
        with pytest.raises(InvalidSimplicialSet, match="Identidad simplicial"):
            build_sset(3, {0: ["a", "b", "c"], 1: ["ab", "bc", "ac"], 2: ["s"]}, faces)

    def test_unregistered_face(self):
        with pytest.raises(InvalidSimplicialSet):
            build_sset(2, {0: ["a"], 1: ["e"]}, {"e": (_v("a"), _v("z"))})

    def test_generator_above_cap(self):
        with pytest.raises(CapExceeded):
            delta(3, dim_cap=2)


class TestStandardSets:

    def test_delta_counts(self):
        d2 = delta(2)
        assert [d2.count(n) for n in range(3)] == [3, 3, 1]
        assert d2.dimension == 2

    def test_boundary(self):
        bd = boundary_delta(2)
        assert [bd.count(n) for n in range(3)] == [3, 3, 0]

    def test_empty(self):
        assert empty_sset().is_empty
        assert empty_sset().dimension == -1

    def test_constant_sorted(self):
        assert constant_sset(["b", "a"]).nd_at(0) == ("a", "b")

    def test_equality_ignores_cap_and_name(self):
        assert delta(1, dim_cap=3) == delta(1, dim_cap=8)
        assert skeleton(delta(2), 1)[0] == boundary_delta(2)


class TestMaps:

    def test_invalid_map(self, s0):
        with pytest.raises(InvalidMap):
            make_map(delta(1), s0, {
                "0": _v("0"),
                "1": _v("1"),
                "0,1": FormalSimplex("0", 0, (0,)),
            })

    def test_constant_map_degenerate(self):
        f = constant_map(delta(2), delta(0), "0")
        assert f.assignment["0,1,2"] == FormalSimplex("0", 0, (1, 0))

    def test_invert_if_iso(self):
        assert invert_if_iso(identity_map(delta(1))) is not None
        assert invert_if_iso(constant_map(delta(1), delta(0), "0")) is None


class TestCoproductProduct:

    def test_coproduct_tags(self, point):
        coprod, (inj_x, inj_y) = coproduct([delta(1), point], tags=["x", "y"])
        assert coprod.nd_at(0) == ("x:0", "x:1", "y:0")
        assert inj_y.assignment["0"] == _v("y:0")

    def test_repeated_tags(self, point):
        with pytest.raises(InputError):
            coproduct([point, point], tags=["x", "x"])

    def test_square_prism(self):
        prod = product_with_projections(delta(1), delta(1))
        assert [prod.sset.count(n) for n in range(3)] == [4, 5, 2]
        assert "[0 * 1]" in prod.sset.nd_at(0)

    def test_product_cap(self):
        with pytest.raises(CapExceeded):
            product_with_projections(delta(2, dim_cap=3), delta(2, dim_cap=3), dim_cap=3)
