"""Tests para homologia entera, forma de Smith y equivalencias de homologia."""

import numpy as np
import pytest

from src.homology.chains import (
    chain_complex,
    euler_characteristic,
    homology,
    homology_equivalence_check,
    homology_from_complex,
    mapping_cone,
    normalize_invariants,
    pi0,
    reduced_homology_vanishes,
    smith_normal_form,
)
from src.simplicial.operators import FormalSimplex
from src.simplicial.sset import boundary_delta, build_sset, constant_map, delta, empty_sset, identity_map


@pytest.fixture
def projective_plane():
    """Un vertice, una arista y un 2-simplice con caras (e, s0 v, e)."""
    v = FormalSimplex("v", 0)
    e = FormalSimplex("e", 1)
    return build_sset(4, {0: ["v"], 1: ["e"], 2: ["t"]},
                      {"e": (v, v), "t": (e, FormalSimplex("v", 0, (0,)), e)}, name="RP2")


class TestSmith:

    def test_invariants(self):
        result = smith_normal_form([[2, 0], [0, 3]])
        assert result.invariants == [1, 6]

    def test_decomposition(self):
        m = np.array([[12, 6, 4], [3, 9, 6], [2, 16, 14]], dtype=object)
        result = smith_normal_form(m)
        assert np.array_equal(result.left.dot(m).dot(result.right), result.diagonal)

    def test_empty_matrix(self):
        assert smith_normal_form(np.zeros((0, 3), dtype=object)).invariants == []

    def test_normalize(self):
        assert normalize_invariants([4, 6, 0]) == [2, 12]


class TestHomology:

    def test_point(self):
        assert homology(delta(0), 2).betti == [1, 0, 0]

    def test_boundary_delta2(self):
        assert homology(boundary_delta(2), 2).betti == [1, 1, 0]

    def test_boundary_delta3(self):
        assert homology(boundary_delta(3), 3).betti == [1, 0, 1, 0]

    def test_torsion(self, projective_plane):
        result = homology(projective_plane, 2)
        assert result.betti == [1, 0, 0]
        assert result.torsion == [[], [2], []]

    def test_to_list(self, s0):
        rows = homology(s0, 1).to_list()
        assert rows[0] == {"degree": 0, "betti": 2, "torsion": []}

    def test_empty(self):
        assert homology(empty_sset(), 1).betti == [0, 0]

    def test_boundary_squares_to_zero(self):
        complex_ = chain_complex(delta(3))
        for n in range(2, 4):
            assert not np.any(complex_.boundary(n - 1).dot(complex_.boundary(n)) != 0)

    def test_pi0_and_euler(self, s0):
        assert pi0(s0) == [["0"], ["1"]]
        assert pi0(delta(2)) == [["0", "1", "2"]]
        assert euler_characteristic(boundary_delta(2)) == 0

    def test_reduced_homology(self, s0):
        assert reduced_homology_vanishes(delta(2), 2)
        assert not reduced_homology_vanishes(s0, 2)
        assert not reduced_homology_vanishes(empty_sset(), 2)


class TestEquivalences:

    def test_collapse_interval(self, point):
        check = homology_equivalence_check(constant_map(delta(1), point, "0"), 2)
        assert check.passed
        assert "(nivel homologia)" in check.detail

    def test_collapse_s0_fails_on_components(self, s0, point):
        check = homology_equivalence_check(constant_map(s0, point, "0"), 2)
        assert not check.passed
        assert check.witness["components_source"] == 2

    def test_circle_to_point_fails(self, point):
        bd = boundary_delta(2)
        check = homology_equivalence_check(constant_map(bd, point, "0"), 2)
        assert not check.passed
        assert check.witness["degree"] == 2

    def test_identity_cone_is_acyclic(self):
        cone = homology_from_complex(mapping_cone(identity_map(boundary_delta(2)), 2), 2)
        assert cone.betti == [0, 0, 0]
