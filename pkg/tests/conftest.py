"""Fixtures compartidas: categorias y diagramas pequenos."""

import pytest

from src.categories.fincat import make_category, terminal_category
from src.diagrams.diagram import constant_diagram, make_diagram
from src.simplicial.sset import constant_map, constant_sset, delta

SPAN = {
    "objects": ["a", "b", "c"],
    "morphisms": [
        {"id": "f", "src": "b", "tgt": "a"},
        {"id": "g", "src": "b", "tgt": "c"},
    ],
}

INTERVAL = {"objects": ["a", "b"], "morphisms": [{"id": "f", "src": "a", "tgt": "b"}]}

SQUARE = {
    "objects": ["a", "b", "c", "d"],
    "morphisms": [
        {"id": "f", "src": "a", "tgt": "b"},
        {"id": "g", "src": "a", "tgt": "c"},
        {"id": "h", "src": "b", "tgt": "d"},
        {"id": "k", "src": "c", "tgt": "d"},
        {"id": "e", "src": "a", "tgt": "d"},
    ],
    "compose": [
        {"g": "h", "f": "f", "gf": "e"},
        {"g": "k", "f": "g", "gf": "e"},
    ],
}


@pytest.fixture
def span():
    return make_category(SPAN, name="span")


@pytest.fixture
def interval():
    return make_category(INTERVAL, name="interval")


@pytest.fixture
def square():
    return make_category(SQUARE, name="square")


@pytest.fixture
def terminal():
    return terminal_category()


@pytest.fixture
def point():
    return delta(0)


@pytest.fixture
def s0():
    return constant_sset(["0", "1"], name="S0")


@pytest.fixture
def span_mixed(span, point, s0):
    """pt <- S0 -> pt."""
    collapse = constant_map(s0, point, "0")
    return make_diagram(span, {"a": point, "b": s0, "c": point}, {"f": collapse, "g": collapse},
                        name="mixed")


@pytest.fixture
def span_point(span, point):
    return constant_diagram(span, point, name="point")
