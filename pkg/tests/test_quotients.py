"""Tests para coecualizadores, pushouts y reconstruccion por esqueletos."""

import pytest

from src.categories.fincat import make_category
from src.homology.chains import homology
from src.simplicial.nerve import nerve
from src.simplicial.operators import FormalSimplex
from src.simplicial.quotients import coequalizer, coequalizer_factor, pushout, skeleton_pushout_check
from src.simplicial.sset import boundary_delta, build_sset, constant_map, delta, make_map
from src.utils.errors import NotCoequalizing, SourceTargetMismatch


def _endpoint(k: str):
    return make_map(delta(0), delta(1), {"0": FormalSimplex(k, 0, ())})


@pytest.fixture
def circle():
    v = FormalSimplex("v", 0, ())
    return build_sset(3, {0: ["v"], 1: ["e"]}, {"e": (v, v)}, name="circle")


class TestCoequalizer:

    def test_endpoints_give_circle(self):
        quotient, projection = coequalizer(_endpoint("0"), _endpoint("1"))
        assert quotient.nd == {0: ("0",), 1: ("0,1",)}
        assert projection.assignment["1"] == FormalSimplex("0", 0, ())
        assert homology(quotient, 1).betti == [1, 1]

    def test_not_parallel(self, s0):
        with pytest.raises(SourceTargetMismatch):
            coequalizer(_endpoint("0"), constant_map(delta(0), s0, "0"))

    def test_factor_requires_coequalizing(self):
        f, g = _endpoint("0"), _endpoint("1")
        _, projection = coequalizer(f, g)
        h = make_map(delta(1), delta(1), {
            "0": FormalSimplex("0", 0, ()),
            "1": FormalSimplex("1", 0, ()),
            "0,1": FormalSimplex("0,1", 1, ()),
        })
        with pytest.raises(NotCoequalizing):
            coequalizer_factor(h, f, g, projection)

    def test_factor_of_constant(self, point):
        f, g = _endpoint("0"), _endpoint("1")
        quotient, projection = coequalizer(f, g)
        h = constant_map(delta(1), point, "0")
        factor = coequalizer_factor(h, f, g, projection)
        assert factor.source == quotient


class TestPushout:

    def test_two_intervals_glued_at_ends(self, s0):
        to_interval = make_map(s0, delta(1), {"0": FormalSimplex("0", 0, ()), "1": FormalSimplex("1", 0, ())})
        result = pushout(to_interval, to_interval)
        assert result.sset.count(0) == 2
        assert result.sset.count(1) == 2
        assert homology(result.sset, 1).betti == [1, 1]

    def test_span_of_points(self, s0, point):
        collapse = constant_map(s0, point, "0")
        result = pushout(collapse, collapse)
        assert result.sset.count(0) == 1
        assert homology(result.sset, 1).betti == [1, 0]


class TestSkeleta:

    @pytest.mark.parametrize("n", [1, 2])
    def test_delta2(self, n):
        assert skeleton_pushout_check(delta(2), n).passed

    def test_boundary(self):
        assert skeleton_pushout_check(boundary_delta(2), 1).passed

    def test_circle(self, circle):
        check = skeleton_pushout_check(circle, 1)
        assert check.passed
        assert "circle" in check.check_id

    def test_nerve_of_square(self, square):
        K = nerve(square)
        assert all(skeleton_pushout_check(K, n).passed for n in (1, 2))

    def test_nerve_of_interval(self):
        cat = make_category({"objects": ["a", "b"], "morphisms": [{"id": "f", "src": "a", "tgt": "b"}]})
        assert skeleton_pushout_check(nerve(cat), 1).passed
