"""
Producto tensorial sobre una categoria A y bi-tensor sobre (C, A), para el
acoplamiento dado por el producto cartesiano de conjuntos simpliciales.

    X ⊗_A Y = coeq( ⊔_{α: b → b'} X(b')×Y(b)  ⇉  ⊔_a X(a)×Y(a) )

con los mapas X(α)×id hacia el sumando b e id×Y(α) hacia el sumando b'.
X es un diagrama sobre A^op: su accion en α va de X(b') a X(b).
"""

import logging
from dataclasses import dataclass

from src.categories.fincat import FinCat, opposite, pair_id, product as product_category
from src.diagrams.diagram import Diagram, DiagramMap, constant_diagram, diagram_cap, make_diagram
from src.diagrams.kan import diagram_map_key, enumerate_diagram_maps
from src.simplicial.quotients import coequalizer, coequalizer_factor
from src.simplicial.search import DEFAULT_SEARCH_BUDGET, MappingSpace, mapping_space
from src.simplicial.sset import (
    ProductResult,
    SSet,
    SSetMap,
    compose,
    copair,
    coproduct,
    delta,
    identity_map,
    pair_simplex,
    product_map,
    product_with_projections,
    simplex_operator,
)
from src.utils.checks import CheckResult, failed, passed
from src.utils.errors import IndexMismatch

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TensorResult:
    """X ⊗_A Y con los datos de su presentacion.

    ``summand_injections[a]`` es X(a)×Y(a) → resultado; ``quotient_map`` es la
    proyeccion desde el coproducto intermedio ``middle``.
    """
    result: SSet
    quotient_map: SSetMap
    summand_injections: dict[str, SSetMap]
    middle: SSet
    products: dict[str, ProductResult]
    parallel: tuple[SSetMap, SSetMap]
    tags: tuple[str, ...]


def _tensor_cap(X: Diagram, Y: Diagram, objects) -> int:
    dims = [X.value[a].dimension + Y.value[a].dimension for a in objects]
    # productos de balanceo X(b')×Y(b) para α: b → b'
    dims += [X.value[m.tgt].dimension + Y.value[m.src].dimension for m in Y.index.nonidentity_morphisms]
    return max([diagram_cap(X), diagram_cap(Y)] + dims)


def tensor_over(X: Diagram, Y: Diagram, name: str = "") -> TensorResult:
    """X ⊗_A Y para X sobre A^op e Y sobre A.

    Raises:
        IndexMismatch: si el indice de X no es el opuesto del de Y.
    """
    A = Y.index
    if X.index != opposite(A):
        raise IndexMismatch("tensor_over: el indice del factor izquierdo debe ser A^op")
    objects = list(A.objects)
    cap = _tensor_cap(X, Y, objects)
    products = {a: product_with_projections(X.value[a], Y.value[a], cap) for a in objects}
    middle, injections = coproduct([products[a].sset for a in objects], tags=objects, dim_cap=cap)
    inj = dict(zip(objects, injections))

    arrows = A.nonidentity_morphisms
    tags = [m.id for m in arrows]
    left_maps, right_maps, domains = [], [], []
    for m in arrows:
        b, b2 = m.src, m.tgt
        balance = product_with_projections(X.value[b2], Y.value[b], cap)
        domains.append(balance.sset)
        left_maps.append(compose(inj[b], product_map(X.action[m.id], identity_map(Y.value[b]),
                                                     balance, products[b])))
        right_maps.append(compose(inj[b2], product_map(identity_map(X.value[b2]), Y.action[m.id],
                                                       balance, products[b2])))
    domain, _ = coproduct(domains, tags=tags, dim_cap=cap)
    first = copair(domain, left_maps, tags, target=middle)
    second = copair(domain, right_maps, tags, target=middle)

    result, quotient = coequalizer(first, second, name=name)
    summands = {a: compose(quotient, inj[a]) for a in objects}
    logger.debug(
        f"Tensor {X.name or 'X'} ⊗ {Y.name or 'Y'}: {sum(map(len, result.nd.values()))} generadores"
    )
    return TensorResult(result, quotient, summands, middle, products, (first, second), tuple(objects))


def tensor_factor(tensor: TensorResult, legs: dict[str, SSetMap], target: SSet | None = None) -> SSetMap:
    """Mapa X ⊗_A Y → Z inducido por mapas X(a)×Y(a) → Z compatibles."""
    if target is None and legs:
        target = next(iter(legs.values())).target
    h = copair(tensor.middle, [legs[a] for a in tensor.tags], tensor.tags, target=target)
    return coequalizer_factor(h, *tensor.parallel, tensor.quotient_map)


def tensor_map(source: TensorResult, target: TensorResult, left_maps: dict[str, SSetMap],
               right_maps: dict[str, SSetMap]) -> SSetMap:
    """f ⊗ g inducido sumando a sumando por f(a)×g(a)."""
    legs = {
        a: compose(target.summand_injections[a],
                   product_map(left_maps[a], right_maps[a], source.products[a], target.products[a]))
        for a in source.tags
    }
    return tensor_factor(source, legs, target=target.result)


def point_diagram(A: FinCat) -> Diagram:
    """Diagrama constante Δ⁰ sobre A^op."""
    return constant_diagram(opposite(A), delta(0), name="pt")


# =============================================================================
# Bi-tensor
# =============================================================================

@dataclass(frozen=True)
class BiTensor:
    """(XX ⊗ Y)(c) = XX(−, c) ⊗_A Y, con el tensor de cada objeto c."""
    diagram: Diagram
    tensors: dict[str, TensorResult]
    A: FinCat
    C: FinCat


def _factors(XX: Diagram, Y: Diagram, C: FinCat | None) -> FinCat:
    A = Y.index
    if C is None:
        if XX.factors is None:
            raise IndexMismatch("bi_tensor: el diagrama no declara sus factores; pase C explicitamente")
        left, C = XX.factors
        if left != opposite(A):
            raise IndexMismatch("bi_tensor: el primer factor no es A^op")
    if XX.index != product_category(opposite(A), C):
        raise IndexMismatch("bi_tensor: el indice del diagrama no es A^op×C")
    return C


def slice_left(XX: Diagram, c: str, A: FinCat, C: FinCat) -> Diagram:
    """El diagrama XX(−, c) sobre A^op."""
    ident = C.id_of(c)
    op = opposite(A)
    return Diagram(
        index=op,
        value={a: XX.value[pair_id(a, c)] for a in op.objects},
        action={m.id: XX.action[pair_id(m.id, ident)] for m in op.morphisms},
        name=f"{XX.name}(−,{c})",
    )


def bi_tensor_full(XX: Diagram, Y: Diagram, C: FinCat | None = None) -> BiTensor:
    """Bi-tensor con sus tensores por objeto.

    Raises:
        IndexMismatch: si XX no esta indexado por A^op×C.
    """
    C = _factors(XX, Y, C)
    A = Y.index
    tensors = {c: tensor_over(slice_left(XX, c, A, C), Y, name=f"({XX.name}⊗{Y.name})({c})")
               for c in C.objects}
    right_ids = {a: identity_map(Y.value[a]) for a in A.objects}
    action = {}
    for u in C.morphisms:
        left = {a: XX.action[pair_id(A.id_of(a), u.id)] for a in A.objects}
        action[u.id] = tensor_map(tensors[u.src], tensors[u.tgt], left, right_ids)
    diagram = make_diagram(C, {c: tensors[c].result for c in C.objects}, action,
                           name=f"{XX.name}⊗{Y.name}")
    return BiTensor(diagram, tensors, A, C)


def bi_tensor(XX: Diagram, Y: Diagram, C: FinCat | None = None) -> Diagram:
    return bi_tensor_full(XX, Y, C).diagram


def bi_tensor_map(f: DiagramMap, Y: Diagram, source: BiTensor | None = None,
                  target: BiTensor | None = None) -> DiagramMap:
    """f ⊗ Y para f: XX → XX' sobre A^op×C."""
    source = source or bi_tensor_full(f.source, Y)
    target = target or bi_tensor_full(f.target, Y, source.C)
    right_ids = {a: identity_map(Y.value[a]) for a in source.A.objects}
    components = {}
    for c in source.C.objects:
        left = {a: f.components[pair_id(a, c)] for a in source.A.objects}
        components[c] = tensor_map(source.tensors[c], target.tensors[c], left, right_ids)
    return DiagramMap(source.diagram, target.diagram, components)


def bi_tensor_right_map(XX: Diagram, g: DiagramMap, source: BiTensor | None = None,
                        target: BiTensor | None = None) -> DiagramMap:
    """XX ⊗ g para g: Y → Y' sobre A."""
    source = source or bi_tensor_full(XX, g.source)
    target = target or bi_tensor_full(XX, g.target, source.C)
    components = {}
    for c in source.C.objects:
        left = {a: identity_map(XX.value[pair_id(a, c)]) for a in source.A.objects}
        components[c] = tensor_map(source.tensors[c], target.tensors[c], left, g.components)
    return DiagramMap(source.diagram, target.diagram, components)


# =============================================================================
# Funtor de mapas y adjuncion
# =============================================================================

@dataclass(frozen=True)
class MappingDiagram:
    """r(Y, Z)(a, c) = Map(Y(a), Z(c)) truncado, sobre A^op×C."""
    diagram: Diagram
    spaces: dict[str, MappingSpace]


def mapping_diagram(Y: Diagram, Z: Diagram, q_max: int,
                    budget: int = DEFAULT_SEARCH_BUDGET) -> MappingDiagram:
    """Diagrama de espacios de mapas; (α, u) actua por h ↦ Z(u)∘h∘(Y(α)×id)."""
    A, C = Y.index, Z.index
    op = opposite(A)
    index = product_category(op, C)
    spaces = {
        pair_id(a, c): mapping_space(Y.value[a], Z.value[c], q_max, budget)
        for a in op.objects for c in C.objects
    }
    action = {}
    for alpha in op.morphisms:
        for u in C.morphisms:
            src = spaces[pair_id(alpha.src, u.src)]
            tgt = spaces[pair_id(alpha.tgt, u.tgt)]
            assignment = {}
            for sid, h in src.generators.items():
                q = src.sset.dim_of[sid]
                before = product_map(Y.action[alpha.id], identity_map(tgt.products[q].pr_right.target),
                                     tgt.products[q], src.products[q])
                assignment[sid] = tgt.simplex_of(compose(Z.action[u.id], compose(h, before)))
            action[pair_id(alpha.id, u.id)] = SSetMap(src.sset, tgt.sset, assignment)
    diagram = make_diagram(index, {k: s.sset for k, s in spaces.items()}, action,
                           name=f"r({Y.name},{Z.name})", factors=(op, C))
    return MappingDiagram(diagram, spaces)


def curry(g: DiagramMap, XX: Diagram, bt: BiTensor, r: MappingDiagram) -> DiagramMap:
    """g: XX ⊗ Y → Z ↦ g♭: XX → r(Y, Z), x ↦ ((y, θ) ↦ g_c[θ*x, y])."""
    components = {}
    for a in bt.A.objects:
        for c in bt.C.objects:
            key = pair_id(a, c)
            space = r.spaces[key]
            value = XX.value[key]
            tensor = bt.tensors[c]
            assignment = {}
            for x in value.generators():
                n = value.dim_of[x]
                prod = space.products[n]
                adjoint = {}
                for pid, (y, t) in prod.components.items():
                    moved = value.apply(value.gen(x), simplex_operator(t))
                    inside = tensor.summand_injections[a](pair_simplex(moved, y))
                    adjoint[pid] = g.components[c](inside)
                assignment[x] = space.simplex_of(SSetMap(prod.sset, g.target.value[c], adjoint))
            components[key] = SSetMap(value, r.diagram.value[key], assignment)
    return DiagramMap(XX, r.diagram, components)


def adjunction_bijection_check(XX: Diagram, Y: Diagram, Z: Diagram, q_max: int,
                               budget: int = DEFAULT_SEARCH_BUDGET) -> CheckResult:
    """mor(XX ⊗ Y, Z) ≅ mor(XX, r(Y, Z)) por currificacion.

    Raises:
        SearchBudgetExceeded: si alguna enumeracion supera el presupuesto.
    """
    check_id = f"adjunction[⊗⊣r, {XX.name or 'XX'}, {Y.name or 'Y'}→{Z.name or 'Z'}]"
    bt = bi_tensor_full(XX, Y, Z.index)
    q_needed = max([0] + [k.dimension for k in XX.value.values()])
    r = mapping_diagram(Y, Z, max(q_max, q_needed), budget)
    left = enumerate_diagram_maps(bt.diagram, Z, budget)
    right = enumerate_diagram_maps(XX, r.diagram, budget)
    if len(left) != len(right):
        return failed(check_id, f"|mor(XX⊗Y, Z)| = {len(left)} != |mor(XX, r(Y,Z))| = {len(right)}",
                      left=len(left), right=len(right))
    right_keys = {diagram_map_key(f) for f in right}
    images = set()
    for k, g in enumerate(left):
        key = diagram_map_key(curry(g, XX, bt, r))
        if key not in right_keys or key in images:
            return failed(check_id, "la currificacion no es biyectiva", map=k)
        images.add(key)
    return passed(check_id, f"{len(left)} morfismos en biyeccion", count=len(left))
