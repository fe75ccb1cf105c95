"""
Diagramas canonicos de un par relativo D ⊂ C, indexados por D^op×C.

- F(d, c): el conjunto mor_C(d, c) como conjunto simplicial discreto.
- E(d, c): nervio de (d↘D↘c)^op (o de d↘D↘c en la variante "natural").
- ϑ: E → F, "componer todo": la cadena en la coma va al vertice γ∘α.

Un morfismo (δ, u): (d, c) → (d', c') de D^op×C, con δ: d' → d en C, actua
por φ ↦ u∘φ∘δ en F y por (α|d0|γ) ↦ (α∘δ|d0|u∘γ) en las comas.
"""

import logging
from dataclasses import dataclass
from functools import cached_property

from src.categories.comma import CommaLabels, comma_double, comma_morphism_id, double_id
from src.categories.fincat import (
    CatFunctor,
    CatNatTrans,
    FinCat,
    compose_functors,
    discrete_category,
    full_subcategory,
    identity_functor,
    opposite,
    opposite_functor,
    opposite_transformation,
    pair_id,
    product,
    product_projections,
    validate_functor,
    validate_transformation,
)
from src.diagrams.diagram import Diagram, DiagramMap, make_diagram, validate_diagram_map
from src.diagrams.kan import induction
from src.homology.chains import pi0, reduced_homology_vanishes
from src.simplicial.nerve import homotopy_from_nat_trans, nerve, nerve_of_functor
from src.simplicial.search import DEFAULT_SEARCH_BUDGET, iso_check
from src.simplicial.operators import FormalSimplex
from src.simplicial.sset import SSetMap, compose, constant_sset, identity_map, map_equal
from src.utils.checks import CheckResult, combine, failed, passed
from src.utils.errors import InputError, InvalidNatTrans, UnknownObject

logger = logging.getLogger(__name__)

OP_VARIANTS = ("op", "natural")


@dataclass(frozen=True)
class RelativePair:
    """Categoria C con una subcategoria plena D dada por sus objetos."""
    C: FinCat
    D_objs: tuple[str, ...]

    @cached_property
    def D(self) -> FinCat:
        return full_subcategory(self.C, self.D_objs)[0]

    @cached_property
    def index(self) -> FinCat:
        """D^op×C."""
        return product(opposite(self.D), self.C)

    @cached_property
    def projections(self) -> tuple[CatFunctor, CatFunctor]:
        return product_projections(opposite(self.D), self.C, self.index)

    def decode(self, mor_id: str) -> tuple[str, str]:
        """(δ, u) de un morfismo del indice."""
        left, right = self.projections
        return left.on_morphisms[mor_id], right.on_morphisms[mor_id]


def relative_pair(C: FinCat, D_objs, allow_empty: bool = False) -> RelativePair:
    """Valida y normaliza D ⊂ C (objetos de D en el orden de C).

    Raises:
        UnknownObject: si D no esta contenido en C.
        InputError: si D es vacio y no se permite.
    """
    chosen = set(D_objs)
    unknown = sorted(chosen - set(C.objects))
    if unknown:
        raise UnknownObject(f"Objetos de D fuera de C: {unknown}")
    if not chosen and not allow_empty:
        raise InputError("El par relativo requiere D no vacio")
    return RelativePair(C=C, D_objs=tuple(o for o in C.objects if o in chosen))


def _check_variant(op_variant: str):
    if op_variant not in OP_VARIANTS:
        raise InputError(f"Variante desconocida '{op_variant}', esperado una de {OP_VARIANTS}")


# =============================================================================
# F y E
# =============================================================================

def build_F(pair: RelativePair) -> Diagram:
    """F(d, c) = mor_C(d, c) discreto; (δ, u) actua por φ ↦ u∘φ∘δ."""
    C = pair.C
    value = {pair_id(d, c): constant_sset(C.hom(d, c), name=f"mor({d},{c})")
             for d in pair.D.objects for c in C.objects}
    action = {}
    for m in pair.index.morphisms:
        delta_, u = pair.decode(m.id)
        source, target = value[m.src], value[m.tgt]
        action[m.id] = SSetMap(source, target, {
            phi: FormalSimplex(C.comp(u, C.comp(phi, delta_)), 0, ()) for phi in source.nd_at(0)
        })
    return make_diagram(pair.index, value, action, name="F", factors=(opposite(pair.D), C))


def comma_at(pair: RelativePair, d: str, c: str) -> tuple[FinCat, CommaLabels]:
    return comma_double(pair.C, pair.D_objs, d, c)


def comma_functor(pair: RelativePair, mor_id: str, source: tuple[FinCat, CommaLabels],
                  target: tuple[FinCat, CommaLabels]) -> CatFunctor:
    """d↘D↘c → d'↘D↘c' inducido por (δ, u): (α|d0|γ) ↦ (α∘δ|d0|u∘γ)."""
    C = pair.C
    delta_, u = pair.decode(mor_id)
    src_cat, src_lab = source
    tgt_cat, _ = target

    def move(o: str) -> str:
        alpha, d0, gamma = src_lab.objects[o]
        return double_id(C.comp(alpha, delta_), d0, C.comp(u, gamma))

    on_objects = {o: move(o) for o in src_cat.objects}
    on_morphisms = {
        m.id: comma_morphism_id(move(m.src), src_lab.morphisms[m.id], move(m.tgt))
        for m in src_cat.morphisms
    }
    return validate_functor(CatFunctor(src_cat, tgt_cat, on_objects, on_morphisms))


def _variant(cat: FinCat, op_variant: str) -> FinCat:
    return opposite(cat) if op_variant == "op" else cat


def build_E(pair: RelativePair, op_variant: str = "op", dim_cap: int | None = None) -> Diagram:
    """E(d, c) = B(d↘D↘c)^op, o B(d↘D↘c) en la variante natural.

    Raises:
        TruncationRequired: si alguna coma tiene ciclos y no hay cap.
    """
    _check_variant(op_variant)
    commas = {pair_id(d, c): comma_at(pair, d, c) for d in pair.D.objects for c in pair.C.objects}
    value = {key: nerve(_variant(cat, op_variant), dim_cap) for key, (cat, _) in commas.items()}
    action = {}
    for m in pair.index.morphisms:
        functor = comma_functor(pair, m.id, commas[m.src], commas[m.tgt])
        if op_variant == "op":
            functor = opposite_functor(functor)
        action[m.id] = nerve_of_functor(functor, dim_cap, source=value[m.src], target=value[m.tgt])
    name = "E" if op_variant == "op" else "E♮"
    return make_diagram(pair.index, value, action, name=name, factors=(opposite(pair.D), pair.C))


# =============================================================================
# π, ι, ν y ϑ
# =============================================================================

def composition_functor(pair: RelativePair, d: str, c: str, comma=None) -> CatFunctor:
    """π: d↘D↘c → mor(d, c), (α|d0|γ) ↦ γ∘α."""
    cat, labels = comma or comma_at(pair, d, c)
    target = discrete_category(pair.C.hom(d, c))
    on_objects = {}
    for o in cat.objects:
        alpha, _, gamma = labels.objects[o]
        on_objects[o] = pair.C.comp(gamma, alpha)
    on_morphisms = {m.id: target.id_of(on_objects[m.src]) for m in cat.morphisms}
    return validate_functor(CatFunctor(cat, target, on_objects, on_morphisms))


def insert_identity_functor(pair: RelativePair, d: str, c: str, comma=None) -> CatFunctor:
    """ι: mor(d, c) → d↘D↘c, φ ↦ (id_d|d|φ)."""
    cat, _ = comma or comma_at(pair, d, c)
    source = discrete_category(pair.C.hom(d, c))
    ident = pair.C.id_of(d)
    on_objects = {phi: double_id(ident, d, phi) for phi in source.objects}
    on_morphisms = {source.id_of(phi): cat.id_of(on_objects[phi]) for phi in source.objects}
    return validate_functor(CatFunctor(source, cat, on_objects, on_morphisms))


def comparison_transformation(pair: RelativePair, d: str, c: str, comma=None) -> CatNatTrans:
    """ν: ι∘π ⇒ id, con componente α: (id_d|d|γ∘α) → (α|d0|γ)."""
    comma = comma or comma_at(pair, d, c)
    cat, labels = comma
    pi = composition_functor(pair, d, c, comma)
    iota = insert_identity_functor(pair, d, c, comma)
    components = {}
    for o in cat.objects:
        alpha = labels.objects[o][0]
        start = iota.on_objects[pi.on_objects[o]]
        components[o] = comma_morphism_id(start, alpha, o)
    return validate_transformation(CatNatTrans(compose_functors(iota, pi), identity_functor(cat), components))


@dataclass(frozen=True)
class ApproxBundle:
    """E, F y ϑ: E → F para un par relativo y una variante."""
    E: Diagram
    F: Diagram
    theta: DiagramMap
    op_variant: str
    pair: RelativePair


def build_theta(pair: RelativePair, op_variant: str = "op", dim_cap: int | None = None) -> ApproxBundle:
    """ϑ(d, c) = B(π): cada cadena va al vertice γ∘α, degenerado en grados altos."""
    E = build_E(pair, op_variant, dim_cap)
    F = build_F(pair)
    components = {}
    for d in pair.D.objects:
        for c in pair.C.objects:
            key = pair_id(d, c)
            pi = composition_functor(pair, d, c)
            if op_variant == "op":
                pi = opposite_functor(pi)
            components[key] = nerve_of_functor(pi, dim_cap, source=E.value[key], target=F.value[key])
    theta = validate_diagram_map(DiagramMap(E, F, components))
    logger.debug(f"ϑ construido para {len(components)} pares (d, c), variante {op_variant}")
    return ApproxBundle(E, F, theta, op_variant, pair)


# =============================================================================
# Verificaciones
# =============================================================================

def verify_theta_we(pair: RelativePair, d: str, c: str, up_to: int = 3,
                    op_variant: str = "op", dim_cap: int | None = None) -> CheckResult:
    """ϑ(d, c) es equivalencia debil (nivel homologia + homotopia explicita).

    (1) π0 de E(d, c) biyecta con mor(d, c) via ϑ; (2) cada fibra tiene
    homologia reducida nula hasta ``up_to``; (3) la homotopia prisma de ν
    tiene extremos B(ι∘π) y la identidad; (4) B(π)∘B(ι) = id.
    """
    _check_variant(op_variant)
    C = pair.C
    check_id = f"theta[{C.name or 'C'}; {d},{c}; {op_variant}]"
    comma = comma_at(pair, d, c)
    cat, labels = comma
    pi = composition_functor(pair, d, c, comma)
    iota = insert_identity_functor(pair, d, c, comma)
    nu = comparison_transformation(pair, d, c, comma)
    if op_variant == "op":
        pi, iota, nu = opposite_functor(pi), opposite_functor(iota), opposite_transformation(nu)

    e_value = nerve(_variant(cat, op_variant), dim_cap)
    f_value = constant_sset(C.hom(d, c))
    theta = nerve_of_functor(pi, dim_cap, source=e_value, target=f_value)
    results = []

    components = pi0(e_value)
    targets = sorted(theta.assignment[comp[0]].base for comp in components)
    if targets != sorted(C.hom(d, c)):
        results.append(failed("pi0", f"π0(E) → mor({d},{c}) no es biyectiva",
                              components=len(components), morphisms=len(C.hom(d, c))))
    else:
        results.append(passed("pi0", f"{len(components)} componentes ↔ mor({d},{c})"))

    fibers_ok = passed("fibers", "homologia reducida nula en cada fibra")
    for phi in C.hom(d, c):
        objs = [o for o in cat.objects if pi.on_objects[o] == phi]
        fiber, _ = full_subcategory(cat, objs)
        if not reduced_homology_vanishes(nerve(_variant(fiber, op_variant), dim_cap), up_to):
            fibers_ok = failed("fibers", f"la fibra sobre '{phi}' no es aciclica", morphism=phi)
            break
    results.append(fibers_ok)

    try:
        homotopy_from_nat_trans(nu, dim_cap)
        results.append(passed("homotopy", "homotopia de ν con extremos B(ι∘π) y B(id)"))
    except InvalidNatTrans as e:
        results.append(failed("homotopy", str(e)))

    section = compose(theta, nerve_of_functor(iota, dim_cap, source=f_value, target=e_value))
    if map_equal(section, identity_map(f_value)):
        results.append(passed("section", "B(π)∘B(ι) = id"))
    else:
        results.append(failed("section", "B(π)∘B(ι) != id"))

    result = combine(check_id, results)
    if result.passed:
        result.detail = f"ϑ({d},{c}) equivalencia debil (nivel homologia); {result.detail}"
    return result


def check_F_induction(pair: RelativePair, budget: int = DEFAULT_SEARCH_BUDGET) -> CheckResult:
    """ind_{D^op×D}^{D^op×C} F_{D,D} ≅ F_{D,C} objeto a objeto."""
    check_id = f"F-induction[{pair.C.name or 'C'}]"
    inner = relative_pair(pair.D, pair.D.objects)
    induced = induction(build_F(inner), pair.index).diagram
    target = build_F(pair)
    for obj in pair.index.objects:
        if iso_check(induced.value[obj], target.value[obj], budget) is None:
            return failed(check_id, f"ind F_DD y F_DC difieren en '{obj}'", object=obj)
    return passed(check_id, f"isomorfos en {len(pair.index.objects)} objetos")
