"""
Busquedas acotadas sobre conjuntos simpliciales: enumeracion de mapas,
deteccion de isomorfismos y espacios de mapas truncados.

Todas las busquedas cuentan nodos visitados contra un presupuesto y lanzan
SearchBudgetExceeded al agotarlo (resultado "desconocido", nunca incorrecto).
"""

import logging
from dataclasses import dataclass

import networkx as nx
from networkx.algorithms.isomorphism import DiGraphMatcher

from src.simplicial.operators import (
    FormalSimplex,
    degeneracy,
    degeneracy_operator,
    face_operator,
    format_formal,
    pull_surjection,
    word_to_surjection,
)
from src.simplicial.sset import (
    ProductResult,
    SSet,
    SSetMap,
    build_sset,
    compose,
    delta,
    delta_map,
    identity_map,
    product_map,
    product_with_projections,
    validate_map,
)
from src.utils.errors import SearchBudgetExceeded

logger = logging.getLogger(__name__)

DEFAULT_SEARCH_BUDGET = 200_000


# =============================================================================
# Enumeracion de mapas
# =============================================================================

def enumerate_maps(source: SSet, target: SSet, budget: int = DEFAULT_SEARCH_BUDGET) -> list[SSetMap]:
    """Todos los mapas simpliciales source → target en orden determinista.

    Backtracking por generadores ordenados por (dimension, declaracion); los
    candidatos de un n-generador son los n-simplices formales del target cuyas
    caras coinciden con las imagenes ya fijadas.

    Raises:
        SearchBudgetExceeded: si se visitan mas de ``budget`` nodos.
    """
    gens = list(source.generators())
    if len(gens) > budget:
        raise SearchBudgetExceeded(f"El source tiene {len(gens)} generadores, presupuesto {budget}")
    levels = {n: target.formal_simplices(n) for n in set(source.dim_of.values())}
    results: list[SSetMap] = []
    assignment: dict[str, FormalSimplex] = {}
    visited = 0

    def consistent(x: str, candidate: FormalSimplex) -> bool:
        n = source.dim_of[x]
        for i in range(n + 1 if n > 0 else 0):
            expected = _partial_image(assignment, source.faces[x][i])
            if target.face(candidate, i) != expected:
                return False
        return True

    def search(k: int):
        nonlocal visited
        if k == len(gens):
            results.append(SSetMap(source, target, dict(assignment)))
            return
        x = gens[k]
        for candidate in levels[source.dim_of[x]]:
            visited += 1
            if visited > budget:
                raise SearchBudgetExceeded(
                    f"enumerate_maps agoto el presupuesto de {budget} nodos en el generador '{x}'"
                )
            if consistent(x, candidate):
                assignment[x] = candidate
                search(k + 1)
                del assignment[x]

    search(0)
    logger.debug(f"enumerate_maps: {len(results)} mapas, {visited} nodos")
    return results


def _partial_image(assignment: dict[str, FormalSimplex], x: FormalSimplex) -> FormalSimplex:
    return pull_surjection(assignment[x.base], word_to_surjection(x.word, x.dim))


# =============================================================================
# Isomorfismos
# =============================================================================

class _BudgetedMatcher(DiGraphMatcher):
    """VF2 con conteo de nodos contra un presupuesto."""

    def __init__(self, G1, G2, budget: int, **kwargs):
        super().__init__(G1, G2, **kwargs)
        self.budget = budget
        self.nodes_visited = 0

    def semantic_feasibility(self, G1_node, G2_node):
        self.nodes_visited += 1
        if self.nodes_visited > self.budget:
            raise SearchBudgetExceeded(f"iso_check agoto el presupuesto de {self.budget} nodos")
        return super().semantic_feasibility(G1_node, G2_node)


def face_graph(sset: SSet) -> nx.DiGraph:
    """Grafo de generadores con aristas hacia la base de cada cara, etiquetadas por (i, palabra)."""
    graph = nx.DiGraph()
    for x in sset.generators():
        graph.add_node(x, dim=sset.dim_of[x])
    for x, faces in sset.faces.items():
        labels: dict[str, list] = {}
        for i, fc in enumerate(faces):
            labels.setdefault(fc.base, []).append((i, fc.word))
        for base, faces_to in labels.items():
            graph.add_edge(x, base, faces=tuple(sorted(faces_to)))
    return graph


def iso_check(left: SSet, right: SSet, budget: int = DEFAULT_SEARCH_BUDGET) -> tuple[SSetMap, SSetMap] | None:
    """Isomorfismo left ≅ right como par de mapas mutuamente inversos, o None.

    Raises:
        SearchBudgetExceeded: la busqueda no termino dentro del presupuesto.
    """
    dims = set(left.nd) | set(right.nd)
    if any(left.count(n) != right.count(n) for n in dims):
        return None
    matcher = _BudgetedMatcher(
        face_graph(left),
        face_graph(right),
        budget,
        node_match=lambda a, b: a["dim"] == b["dim"],
        edge_match=lambda a, b: a["faces"] == b["faces"],
    )
    mapping = next(matcher.isomorphisms_iter(), None)
    if mapping is None:
        return None
    forward = SSetMap(left, right, {x: right.gen(mapping[x]) for x in left.generators()})
    inverse = {y: x for x, y in mapping.items()}
    backward = SSetMap(right, left, {y: left.gen(inverse[y]) for y in right.generators()})
    validate_map(forward)
    validate_map(backward)
    return forward, backward


# =============================================================================
# Espacios de mapas
# =============================================================================

@dataclass(frozen=True)
class MappingSpace:
    """Map(K, L) truncado en grado q_max.

    ``maps[q]`` son todos los mapas K×Δ^q → L; ``lookup`` lleva la clave
    canonica de cada uno a su simplice formal en ``sset``; ``generators``
    recupera el mapa de cada generador no degenerado.
    """
    sset: SSet
    maps: dict[int, list[SSetMap]]
    products: dict[int, ProductResult]
    lookup: dict[tuple, FormalSimplex]
    generators: dict[str, SSetMap]

    def simplex_of(self, f: SSetMap) -> FormalSimplex:
        return self.lookup[map_key(f)]


def map_key(f: SSetMap) -> tuple:
    return tuple((x, format_formal(y)) for x, y in sorted(f.assignment.items()))


def mapping_space(source: SSet, target: SSet, q_max: int, budget: int = DEFAULT_SEARCH_BUDGET) -> MappingSpace:
    """Map(K, L)_q = mor(K×Δ^q, L) para q <= q_max.

    Caras y degeneraciones por precomposicion con id×δ_i e id×σ_j; un q-simplice
    x es degenerado si x = s_j d_j x para algun j.
    """
    cap = max(source.dim_cap, source.dimension + q_max + 1)
    deltas = {q: delta(q, max(cap, q)) for q in range(q_max + 1)}
    products = {q: product_with_projections(source, deltas[q], cap) for q in range(q_max + 1)}
    ident = identity_map(source)

    def precompose(f: SSetMap, theta: tuple[int, ...], p: int, q: int) -> SSetMap:
        """f∘(id×θ) para f: K×Δ^q → L y θ: [p] → [q]."""
        step = delta_map(theta, deltas[p], deltas[q])
        return compose(f, product_map(ident, step, products[p], products[q]))

    maps: dict[int, list[SSetMap]] = {}
    lookup: dict[tuple, FormalSimplex] = {}
    nd: dict[int, list[str]] = {}
    generators: dict[str, SSetMap] = {}
    faces: dict[str, tuple[FormalSimplex, ...]] = {}
    for q in range(q_max + 1):
        maps[q] = enumerate_maps(products[q].sset, target, budget)
        for f in maps[q]:
            key = map_key(f)
            if q > 0:
                degenerate = None
                for j in range(q):
                    lower = precompose(f, face_operator(q, j), q - 1, q)
                    again = precompose(lower, degeneracy_operator(q - 1, j), q, q - 1)
                    if map_key(again) == key:
                        degenerate = degeneracy(lookup[map_key(lower)], j)
                        break
                if degenerate is not None:
                    lookup[key] = degenerate
                    continue
            sid = f"m{q}.{len(nd.get(q, []))}"
            nd.setdefault(q, []).append(sid)
            lookup[key] = FormalSimplex(sid, q, ())
            generators[sid] = f
            if q > 0:
                faces[sid] = tuple(
                    lookup[map_key(precompose(f, face_operator(q, i), q - 1, q))] for i in range(q + 1)
                )

    sset = build_sset(q_max, nd, faces, truncated=True, name=f"Map({source.name},{target.name})")
    logger.debug(f"mapping_space: {[len(maps[q]) for q in maps]} mapas por grado")
    return MappingSpace(sset, maps, products, lookup, generators)
