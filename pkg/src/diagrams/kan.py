"""
Induccion (extension de Kan izquierda) a lo largo de una subcategoria plena
D ⊂ C, con su unidad y counidad.

(ind Y)(c) = colim_{(d, α: d → c) ∈ D↘c} Y(d)

Un morfismo u: c → c' lleva el sumando (d|α) al sumando (d|u∘α).
"""

import logging
from dataclasses import dataclass

from src.categories.comma import CommaLabels, comma_slice, slice_id
from src.categories.fincat import CatFunctor, FinCat, full_subcategory
from src.diagrams.diagram import (
    ColimitResult,
    Diagram,
    DiagramMap,
    colimit,
    colimit_factor,
    compose_diagram_maps,
    diagram_maps_equal,
    first_component_difference,
    identity_diagram_map,
    make_diagram,
    reindex,
    restrict,
)
from src.simplicial.search import DEFAULT_SEARCH_BUDGET, enumerate_maps, map_key
from src.simplicial.sset import compose, identity_map, map_equal
from src.utils.checks import CheckResult, failed, passed
from src.utils.errors import IndexMismatch, SearchBudgetExceeded

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Induction:
    """ind Y con los colimites sobre D↘c que lo definen, por objeto c."""
    diagram: Diagram
    source: Diagram
    colimits: dict[str, ColimitResult]
    labels: dict[str, CommaLabels]


def _check_full(Y: Diagram, C: FinCat) -> list[str]:
    objs = list(Y.index.objects)
    sub, _ = full_subcategory(C, objs)
    if sub != Y.index:
        raise IndexMismatch("El indice del diagrama no es la subcategoria plena de C sobre sus objetos")
    return objs


def induction(Y: Diagram, C: FinCat) -> Induction:
    """Calcula ind_D^C Y objeto a objeto.

    Raises:
        IndexMismatch: si el indice de Y no es una subcategoria plena de C.
    """
    d_objs = _check_full(Y, C)
    colimits: dict[str, ColimitResult] = {}
    labels: dict[str, CommaLabels] = {}
    for c in C.objects:
        comma, lab = comma_slice(C, d_objs, c)
        projection = CatFunctor(
            source=comma,
            target=Y.index,
            on_objects={o: lab.objects[o][0] for o in comma.objects},
            on_morphisms={m.id: lab.morphisms[m.id] for m in comma.morphisms},
        )
        colimits[c] = colimit(reindex(Y, projection), name=f"ind({c})")
        labels[c] = lab

    action = {}
    for u in C.morphisms:
        c, c2 = u.src, u.tgt
        legs = {
            o: colimits[c2].cocone[slice_id(d, C.comp(u.id, alpha))]
            for o, (d, alpha) in labels[c].objects.items()
        }
        action[u.id] = colimit_factor(colimits[c], legs, target=colimits[c2].sset)

    diagram = make_diagram(C, {c: colimits[c].sset for c in C.objects}, action,
                           name=f"ind {Y.name}".strip())
    logger.debug(f"Induccion de {Y.name or 'Y'} a {C.name or 'C'} ({len(d_objs)} objetos en D)")
    return Induction(diagram, Y, colimits, labels)


def induce(Y: Diagram, C: FinCat) -> Diagram:
    return induction(Y, C).diagram


def counit(X: Diagram, objs, induced: Induction | None = None) -> DiagramMap:
    """ε: ind res X → X; el sumando (d|α) va a X(c) por X(α)."""
    induced = induced or induction(restrict(X, objs), X.index)
    components = {}
    for c in X.index.objects:
        legs = {o: X.action[alpha] for o, (_, alpha) in induced.labels[c].objects.items()}
        components[c] = colimit_factor(induced.colimits[c], legs, target=X.value[c])
    return DiagramMap(induced.diagram, X, components)


def unit(Y: Diagram, C: FinCat, induced: Induction | None = None) -> DiagramMap:
    """η: Y → res ind Y, inclusion del sumando (d|id_d)."""
    induced = induced or induction(Y, C)
    target = restrict(induced.diagram, Y.index.objects)
    components = {
        d: induced.colimits[d].cocone[slice_id(d, C.id_of(d))] for d in Y.index.objects
    }
    return DiagramMap(Y, target, components)


def induce_map(f: DiagramMap, C: FinCat, source: Induction | None = None,
               target: Induction | None = None) -> DiagramMap:
    """ind f: ind Y → ind Y'."""
    source = source or induction(f.source, C)
    target = target or induction(f.target, C)
    components = {}
    for c in C.objects:
        legs = {
            o: compose(target.colimits[c].cocone[o], f.components[d])
            for o, (d, _) in source.labels[c].objects.items()
        }
        components[c] = colimit_factor(source.colimits[c], legs, target=target.colimits[c].sset)
    return DiagramMap(source.diagram, target.diagram, components)


# =============================================================================
# Enumeracion y adjuncion
# =============================================================================

def diagram_map_key(f: DiagramMap) -> tuple:
    return tuple((o, map_key(f.components[o])) for o in f.source.index.objects)


def enumerate_diagram_maps(X: Diagram, Y: Diagram, budget: int = DEFAULT_SEARCH_BUDGET) -> list[DiagramMap]:
    """Todas las transformaciones naturales X → Y.

    Enumera mapas objeto a objeto y poda con los cuadrados de naturalidad
    cuyos dos extremos ya estan elegidos.

    Raises:
        SearchBudgetExceeded: si la enumeracion supera el presupuesto.
    """
    if X.index != Y.index:
        raise IndexMismatch("enumerate_diagram_maps: indices distintos")
    objects = list(X.index.objects)
    candidates = {o: enumerate_maps(X.value[o], Y.value[o], budget) for o in objects}
    position = {o: k for k, o in enumerate(objects)}
    checks_at: dict[str, list] = {o: [] for o in objects}
    for m in X.index.nonidentity_morphisms:
        checks_at[max(m.src, m.tgt, key=position.get)].append(m)

    results: list[DiagramMap] = []
    chosen: dict = {}
    visited = 0

    def search(k: int):
        nonlocal visited
        if k == len(objects):
            results.append(DiagramMap(X, Y, dict(chosen)))
            return
        obj = objects[k]
        for f in candidates[obj]:
            visited += 1
            if visited > budget:
                raise SearchBudgetExceeded(
                    f"enumerate_diagram_maps agoto el presupuesto de {budget} nodos en '{obj}'"
                )
            chosen[obj] = f
            if all(
                map_equal(compose(Y.action[m.id], chosen[m.src]), compose(chosen[m.tgt], X.action[m.id]))
                for m in checks_at[obj]
            ):
                search(k + 1)
            del chosen[obj]

    search(0)
    logger.debug(f"enumerate_diagram_maps: {len(results)} transformaciones, {visited} nodos")
    return results


def induction_adjunction_check(Y: Diagram, Z: Diagram, budget: int = DEFAULT_SEARCH_BUDGET) -> CheckResult:
    """ind ⊣ res: g ↦ res(g)∘η biyecta mor(ind Y, Z) con mor(Y, res Z), y
    se cumplen las dos identidades triangulares."""
    C = Z.index
    d_objs = list(Y.index.objects)
    check_id = f"adjunction[ind⊣res, {Y.name or 'Y'}→{Z.name or 'Z'}]"

    ind_y = induction(Y, C)
    res_z = restrict(Z, d_objs)
    eta = unit(Y, C, ind_y)
    left = enumerate_diagram_maps(ind_y.diagram, Z, budget)
    right = enumerate_diagram_maps(Y, res_z, budget)
    if len(left) != len(right):
        return failed(check_id, f"|mor(ind Y, Z)| = {len(left)} != |mor(Y, res Z)| = {len(right)}",
                      left=len(left), right=len(right))

    right_keys = {diagram_map_key(f) for f in right}
    images = set()
    for k, g in enumerate(left):
        image = DiagramMap(Y, res_z, {d: compose(g.components[d], eta.components[d]) for d in d_objs})
        key = diagram_map_key(image)
        if key not in right_keys or key in images:
            return failed(check_id, "la correspondencia g ↦ res(g)∘η no es biyectiva",
                          map=k)
        images.add(key)

    # ε_{ind Y} ∘ ind(η) = id
    ind_res_ind = induction(restrict(ind_y.diagram, d_objs), C)
    first = compose_diagram_maps(counit(ind_y.diagram, d_objs, ind_res_ind),
                                 induce_map(eta, C, ind_y, ind_res_ind))
    if not diagram_maps_equal(first, identity_diagram_map(ind_y.diagram)):
        return failed(check_id, "identidad triangular ε∘ind(η) falla",
                      object=first_component_difference(first, identity_diagram_map(ind_y.diagram)))

    # res(ε_Z) ∘ η_{res Z} = id
    ind_res_z = induction(res_z, C)
    eps_z = counit(Z, d_objs, ind_res_z)
    eta_res = unit(res_z, C, ind_res_z)
    for d in d_objs:
        through = compose(eps_z.components[d], eta_res.components[d])
        if not map_equal(through, identity_map(res_z.value[d])):
            return failed(check_id, "identidad triangular res(ε)∘η falla", object=d)
    return passed(check_id, f"{len(left)} morfismos en biyeccion; identidades triangulares OK",
                  count=len(left))
