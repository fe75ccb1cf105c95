"""
Diagramas de conjuntos simpliciales indexados por una categoria finita,
transformaciones naturales entre ellos y colimites.

El colimite de X se calcula como el coecualizador de

    ⊔_{α: b → b'} X(b)  ⇉  ⊔_a X(a)

con los mapas X(α) hacia el sumando b' y la identidad hacia el sumando b.
Las identidades de la categoria indice se omiten en el coproducto de la
izquierda (sus dos mapas coinciden).
"""

import logging
from dataclasses import dataclass, field

from src.categories.fincat import CatFunctor, FinCat, full_subcategory
from src.homology.chains import homology_equivalence_check
from src.simplicial.quotients import coequalizer, coequalizer_factor
from src.simplicial.sset import (
    DEFAULT_DIM_CAP,
    SSet,
    SSetMap,
    compose,
    copair,
    coproduct,
    first_difference,
    identity_map,
    map_equal,
    validate_map,
)
from src.utils.checks import CheckResult, failed, passed
from src.utils.errors import IndexMismatch, InvalidDiagram, InvalidMap, UnknownObject

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Diagram:
    """Funtor index → sSets dado por tablas.

    ``factors`` guarda (A, C) cuando el indice es el producto A×C; lo usan el
    bi-tensor y los diagramas canonicos.
    """
    index: FinCat
    value: dict[str, SSet]
    action: dict[str, SSetMap]
    name: str = field(default="", compare=False)
    factors: tuple[FinCat, FinCat] | None = field(default=None, compare=False)


@dataclass(frozen=True)
class DiagramMap:
    """Transformacion natural source → target, una componente por objeto."""
    source: Diagram
    target: Diagram
    components: dict[str, SSetMap]


# =============================================================================
# Construccion y validacion
# =============================================================================

def make_diagram(index: FinCat, value: dict, action: dict, name: str = "",
                 factors=None, validate: bool = True) -> Diagram:
    """Ensambla un diagrama; las acciones de identidades ausentes se completan."""
    action = dict(action)
    for obj in index.objects:
        ident = index.identity[obj]
        if ident not in action and obj in value:
            action[ident] = identity_map(value[obj])
    diagram = Diagram(index=index, value=dict(value), action=action, name=name, factors=factors)
    if validate:
        validate_diagram(diagram)
    return diagram


def validate_diagram(diagram: Diagram) -> Diagram:
    """Verifica extremos, identidades y funtorialidad sobre todos los pares componibles.

    Raises:
        InvalidDiagram: nombrando el objeto o morfismo que falla.
    """
    index = diagram.index
    for obj in index.objects:
        if obj not in diagram.value:
            raise InvalidDiagram(f"Objeto '{obj}' sin valor en el diagrama {diagram.name}")
    for m in index.morphisms:
        f = diagram.action.get(m.id)
        if f is None:
            raise InvalidDiagram(f"Morfismo '{m.id}' sin accion")
        if f.source != diagram.value[m.src] or f.target != diagram.value[m.tgt]:
            raise InvalidDiagram(f"La accion de '{m.id}' no va de X({m.src}) a X({m.tgt})")
        try:
            validate_map(f)
        except InvalidMap as e:
            raise InvalidDiagram(f"La accion de '{m.id}' no es un mapa simplicial: {e}")
    for obj in index.objects:
        ident = index.identity[obj]
        if not map_equal(diagram.action[ident], identity_map(diagram.value[obj])):
            raise InvalidDiagram(f"La accion de la identidad '{ident}' no es la identidad")
    for (g, f), gf in index.compose.items():
        lhs = diagram.action[gf]
        rhs = compose(diagram.action[g], diagram.action[f])
        if not map_equal(lhs, rhs):
            raise InvalidDiagram(
                f"Funtorialidad falla en {g} ∘ {f}: difieren en '{first_difference(lhs, rhs)}'"
            )
    return diagram


def validate_diagram_map(f: DiagramMap) -> DiagramMap:
    """Verifica componentes y cuadrados de naturalidad para todo morfismo del indice.

    Raises:
        IndexMismatch: diagramas sobre indices distintos.
        InvalidDiagram: nombrando el morfismo cuyo cuadrado no conmuta.
    """
    src, tgt = f.source, f.target
    if src.index != tgt.index:
        raise IndexMismatch("La transformacion conecta diagramas sobre indices distintos")
    for obj in src.index.objects:
        comp = f.components.get(obj)
        if comp is None:
            raise InvalidDiagram(f"Falta la componente en '{obj}'")
        if comp.source != src.value[obj] or comp.target != tgt.value[obj]:
            raise InvalidDiagram(f"La componente en '{obj}' tiene extremos incorrectos")
        try:
            validate_map(comp)
        except InvalidMap as e:
            raise InvalidDiagram(f"La componente en '{obj}' no es un mapa simplicial: {e}")
    for m in src.index.nonidentity_morphisms:
        lhs = compose(tgt.action[m.id], f.components[m.src])
        rhs = compose(f.components[m.tgt], src.action[m.id])
        if not map_equal(lhs, rhs):
            raise InvalidDiagram(
                f"Naturalidad falla en el morfismo '{m.id}' (generador '{first_difference(lhs, rhs)}')"
            )
    return f


def is_natural(f: DiagramMap) -> bool:
    for m in f.source.index.nonidentity_morphisms:
        lhs = compose(f.target.action[m.id], f.components[m.src])
        rhs = compose(f.components[m.tgt], f.source.action[m.id])
        if not map_equal(lhs, rhs):
            return False
    return True


def constant_diagram(index: FinCat, sset: SSet, name: str = "") -> Diagram:
    ident = identity_map(sset)
    return Diagram(
        index=index,
        value={obj: sset for obj in index.objects},
        action={m.id: ident for m in index.morphisms},
        name=name or f"cst({sset.name})",
    )


def restrict(diagram: Diagram, objs) -> Diagram:
    """Restriccion a la subcategoria plena sobre ``objs``.

    Raises:
        UnknownObject: si algun objeto no pertenece al indice.
    """
    sub, _ = full_subcategory(diagram.index, objs)
    return Diagram(
        index=sub,
        value={o: diagram.value[o] for o in sub.objects},
        action={m.id: diagram.action[m.id] for m in sub.morphisms},
        name=diagram.name,
    )


def restrict_map(f: DiagramMap, objs) -> DiagramMap:
    source, target = restrict(f.source, objs), restrict(f.target, objs)
    return DiagramMap(source, target, {o: f.components[o] for o in source.index.objects})


def reindex(diagram: Diagram, functor: CatFunctor) -> Diagram:
    """Precomposicion X∘F para F: B → index."""
    if functor.target != diagram.index:
        raise IndexMismatch("reindex: el target del funtor no es el indice del diagrama")
    return Diagram(
        index=functor.source,
        value={o: diagram.value[functor.on_objects[o]] for o in functor.source.objects},
        action={m.id: diagram.action[functor.on_morphisms[m.id]] for m in functor.source.morphisms},
        name=diagram.name,
    )


def identity_diagram_map(diagram: Diagram) -> DiagramMap:
    return DiagramMap(diagram, diagram, {o: identity_map(diagram.value[o]) for o in diagram.index.objects})


def compose_diagram_maps(g: DiagramMap, f: DiagramMap) -> DiagramMap:
    """Retorna g∘f."""
    if f.target != g.source:
        raise IndexMismatch("compose_diagram_maps: el target de f no es el source de g")
    return DiagramMap(f.source, g.target, {
        o: compose(g.components[o], f.components[o]) for o in f.source.index.objects
    })


def diagram_maps_equal(f: DiagramMap, g: DiagramMap) -> bool:
    if f.source != g.source or f.target != g.target:
        return False
    return all(map_equal(f.components[o], g.components[o]) for o in f.source.index.objects)


def first_component_difference(f: DiagramMap, g: DiagramMap) -> str | None:
    for o in f.source.index.objects:
        if not map_equal(f.components[o], g.components[o]):
            return o
    return None


# =============================================================================
# Colimites
# =============================================================================

@dataclass(frozen=True)
class ColimitResult:
    """Colimite con su cocono y los datos del coecualizador que lo define."""
    sset: SSet
    cocone: dict[str, SSetMap]
    middle: SSet
    projection: SSetMap
    parallel: tuple[SSetMap, SSetMap]
    tags: tuple[str, ...]


def diagram_cap(diagram: Diagram) -> int:
    return max([DEFAULT_DIM_CAP] + [k.dim_cap for k in diagram.value.values()])


def colimit(diagram: Diagram, name: str = "") -> ColimitResult:
    """Colimite de un diagrama como coecualizador de coproductos."""
    index = diagram.index
    cap = diagram_cap(diagram)
    objects = list(index.objects)
    middle, injections = coproduct([diagram.value[a] for a in objects], tags=objects, dim_cap=cap)
    inj = dict(zip(objects, injections))

    arrows = index.nonidentity_morphisms
    tags = [m.id for m in arrows]
    domain, _ = coproduct([diagram.value[m.src] for m in arrows], tags=tags, dim_cap=cap)
    along = copair(domain, [compose(inj[m.tgt], diagram.action[m.id]) for m in arrows], tags, target=middle)
    stay = copair(domain, [inj[m.src] for m in arrows], tags, target=middle)

    sset, projection = coequalizer(along, stay, name=name or f"colim {diagram.name}".strip())
    cocone = {a: compose(projection, inj[a]) for a in objects}
    logger.debug(f"Colimite de {diagram.name or 'X'}: {sum(map(len, sset.nd.values()))} generadores")
    return ColimitResult(sset, cocone, middle, projection, (along, stay), tuple(objects))


def colim_diagram(diagram: Diagram) -> tuple[SSet, dict[str, SSetMap]]:
    result = colimit(diagram)
    return result.sset, result.cocone


def colimit_factor(result: ColimitResult, legs: dict[str, SSetMap], target: SSet | None = None) -> SSetMap:
    """Mapa inducido colim X → Z por un cocono ``legs``.

    Raises:
        NotCoequalizing: si ``legs`` no es un cocono.
    """
    if target is None and legs:
        target = next(iter(legs.values())).target
    h = copair(result.middle, [legs[a] for a in result.tags], result.tags, target=target)
    return coequalizer_factor(h, *result.parallel, result.projection)


def colim_map(f: DiagramMap, source: ColimitResult | None = None,
              target: ColimitResult | None = None) -> SSetMap:
    """colim f: colim X → colim Y."""
    source = source or colimit(f.source)
    target = target or colimit(f.target)
    legs = {a: compose(target.cocone[a], f.components[a]) for a in source.tags}
    return colimit_factor(source, legs, target=target.sset)


def is_objectwise_homology_equivalence(f: DiagramMap, objs, up_to: int) -> CheckResult:
    """Equivalencia de homologia en cada objeto de ``objs`` (proxy de D-equivalencia debil).

    El resultado es verdadero en contexto booleano; si falla, el testigo
    incluye el objeto.
    """
    unknown = sorted(set(objs) - set(f.source.index.objects))
    if unknown:
        raise UnknownObject(f"Objetos desconocidos: {unknown}")
    check_id = "objectwise-homology-equivalence"
    for obj in (o for o in f.source.index.objects if o in set(objs)):
        result = homology_equivalence_check(f.components[obj], up_to)
        if not result.passed:
            return failed(check_id, f"en '{obj}': {result.detail}", object=obj, **result.witness)
    return passed(check_id, f"equivalencia de homologia en {len(set(objs))} objetos (nivel homologia)")
