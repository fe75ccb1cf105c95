"""
Colimites homotopicos y L-colimites.

    hocolim X = B(?↘C)^op ⊗_C X
    Lcolim X  = colim Q̄X          (par relativo D = C)

Un morfismo u: a → a' de C induce a'↘C → a↘C por precomposicion,
(α'|x) ↦ (α'∘u|x); de ahi la variancia de B(?↘C)^op sobre C^op.
"""

import logging
from dataclasses import dataclass

from src.approx.bar import BarApproximation, bar_approx
from src.approx.canonical import comma_at, relative_pair
from src.categories.comma import comma_coslice, comma_morphism_id, coslice_id
from src.categories.fincat import CatFunctor, FinCat, opposite, opposite_functor, validate_functor
from src.diagrams.diagram import ColimitResult, Diagram, colim_map, colimit, colimit_factor, make_diagram
from src.diagrams.tensor import TensorResult, tensor_factor, tensor_over
from src.homology.chains import homology
from src.simplicial.nerve import nerve, nerve_of_functor
from src.simplicial.sset import (
    SSet,
    SSetMap,
    compose,
    first_difference,
    identity_map,
    invert_if_iso,
    map_equal,
    product_map,
)
from src.utils.checks import CheckResult, failed, passed

logger = logging.getLogger(__name__)


# =============================================================================
# hocolim
# =============================================================================

def under_category_diagram(C: FinCat, dim_cap: int | None = None) -> Diagram:
    """a ↦ B(a↘C)^op como diagrama sobre C^op."""
    commas = {a: comma_coslice(C, C.objects, a) for a in C.objects}
    value = {a: nerve(opposite(cat), dim_cap) for a, (cat, _) in commas.items()}
    action = {}
    for u in C.morphisms:
        a, a2 = u.src, u.tgt
        src_cat, src_lab = commas[a2]
        tgt_cat, _ = commas[a]

        def move(o: str) -> str:
            alpha, x = src_lab.objects[o]
            return coslice_id(C.comp(alpha, u.id), x)

        functor = validate_functor(CatFunctor(
            src_cat, tgt_cat,
            {o: move(o) for o in src_cat.objects},
            {m.id: comma_morphism_id(move(m.src), src_lab.morphisms[m.id], move(m.tgt))
             for m in src_cat.morphisms},
        ))
        action[u.id] = nerve_of_functor(opposite_functor(functor), dim_cap,
                                        source=value[a2], target=value[a])
    return make_diagram(opposite(C), value, action, name="B(?↘C)^op")


@dataclass(frozen=True)
class HocolimResult:
    sset: SSet
    tensor: TensorResult
    under: Diagram


def hocolim_construction(X: Diagram, dim_cap: int | None = None) -> HocolimResult:
    under = under_category_diagram(X.index, dim_cap)
    tensor = tensor_over(under, X, name=f"hocolim {X.name}".strip())
    logger.debug(f"hocolim de {X.name or 'X'}: {sum(map(len, tensor.result.nd.values()))} generadores")
    return HocolimResult(tensor.result, tensor, under)


def hocolim(X: Diagram, dim_cap: int | None = None) -> SSet:
    """Colimite homotopico de X.

    Raises:
        TruncationRequired: si alguna categoria coma tiene ciclos y no hay cap.
    """
    return hocolim_construction(X, dim_cap).sset


def hocolim_to_colim(result: HocolimResult, colim: ColimitResult) -> SSetMap:
    """Pr ⊗ X: hocolim X → colim X, proyectando cada sumando sobre X(a)."""
    legs = {
        a: compose(colim.cocone[a], result.tensor.products[a].pr_right)
        for a in result.tensor.tags
    }
    return tensor_factor(result.tensor, legs, target=colim.sset)


# =============================================================================
# Lcolim
# =============================================================================

@dataclass(frozen=True)
class LcolimResult:
    sset: SSet
    colimit: ColimitResult
    bar: BarApproximation


def lcolim_construction(X: Diagram, dim_cap: int | None = None, op_variant: str = "op") -> LcolimResult:
    pair = relative_pair(X.index, X.index.objects, allow_empty=True)
    bar = bar_approx(X, pair, op_variant, dim_cap=dim_cap)
    result = colimit(bar.qbar, name=f"Lcolim {X.name}".strip())
    return LcolimResult(result.sset, result, bar)


def Lcolim(X: Diagram, dim_cap: int | None = None, op_variant: str = "op") -> SSet:
    """L-colimite bar: colim Q̄X con D = C."""
    return lcolim_construction(X, dim_cap, op_variant).sset


# =============================================================================
# Comparacion Lcolim ≅ hocolim
# =============================================================================

@dataclass(frozen=True)
class LcolimComparison:
    """ψ: Lcolim X → hocolim X, su inversa (si es iso) y el reporte."""
    forward: SSetMap
    backward: SSetMap | None
    check: CheckResult
    lcolim: LcolimResult
    hocolim: HocolimResult


def _forget_target(C: FinCat, d: str, c: str, under: tuple) -> CatFunctor:
    """κ: d↘C↘c → d↘C, (α|d0|γ) ↦ (α|d0)."""
    pair = relative_pair(C, C.objects)
    cat, labels = comma_at(pair, d, c)
    under_cat, _ = under
    on_objects = {o: coslice_id(labels.objects[o][0], labels.objects[o][1]) for o in cat.objects}
    on_morphisms = {
        m.id: comma_morphism_id(on_objects[m.src], labels.morphisms[m.id], on_objects[m.tgt])
        for m in cat.morphisms
    }
    return validate_functor(CatFunctor(cat, under_cat, on_objects, on_morphisms))


def compare_lcolim_hocolim(X: Diagram, dim_cap: int | None = None) -> LcolimComparison:
    """Isomorfismo canonico Lcolim X → hocolim X y triangulo hacia colim X.

    En el sumando (c, d) el par (cadena en d↘C↘c, x ∈ X(d)) va a
    (cadena olvidando γ, x) en el sumando d de hocolim X. El mapa se
    factoriza por el tensor de cada c y luego por el colimite sobre c.
    """
    C = X.index
    check_id = f"lcolim-hocolim[{C.name or 'C'}; {X.name or 'X'}]"
    lcolim = lcolim_construction(X, dim_cap)
    hoc = hocolim_construction(X, dim_cap)
    unders = {a: comma_coslice(C, C.objects, a) for a in C.objects}

    per_c = {}
    for c in C.objects:
        tensor_c = lcolim.bar.qbar_tensor.tensors[c]
        legs = {}
        for d in C.objects:
            kappa = opposite_functor(_forget_target(C, d, c, unders[d]))
            forget = nerve_of_functor(kappa, dim_cap, source=tensor_c.products[d].pr_left.target,
                                      target=hoc.under.value[d])
            step = product_map(forget, identity_map(X.value[d]), tensor_c.products[d], hoc.tensor.products[d])
            legs[d] = compose(hoc.tensor.summand_injections[d], step)
        per_c[c] = tensor_factor(tensor_c, legs, target=hoc.sset)
    forward = colimit_factor(lcolim.colimit, per_c, target=hoc.sset)

    backward = invert_if_iso(forward)
    if backward is None:
        bad = [q for q in forward.source.generators() if forward.assignment[q].word]
        check = failed(check_id, "Lcolim → hocolim no es isomorfismo", generator=bad[0] if bad else None)
        return LcolimComparison(forward, None, check, lcolim, hoc)

    colim = colimit(X)
    through = compose(hocolim_to_colim(hoc, colim), forward)
    expected = colim_map(lcolim.bar.xi, source=lcolim.colimit, target=colim)
    if not map_equal(through, expected):
        check = failed(check_id, "el triangulo hacia colim X no conmuta",
                       generator=first_difference(through, expected))
    else:
        check = passed(check_id, f"isomorfismo con {sum(map(len, forward.source.nd.values()))} "
                                 "generadores; triangulo conmuta")
    return LcolimComparison(forward, backward, check, lcolim, hoc)


def hocolim_nat_variant_compare(X: Diagram, up_to: int = 3, dim_cap: int | None = None) -> CheckResult:
    """Compara la homologia del Lcolim con E♮ contra la de hocolim X (sin iso)."""
    check_id = f"nat-variant[{X.index.name or 'C'}; {X.name or 'X'}]"
    h_nat = homology(Lcolim(X, dim_cap, op_variant="natural"), up_to)
    h_hoc = homology(hocolim(X, dim_cap), up_to)
    for n in range(up_to + 1):
        if (h_nat.betti[n], h_nat.torsion[n]) != (h_hoc.betti[n], h_hoc.torsion[n]):
            return failed(check_id, f"homologia distinta en grado {n}", degree=n,
                          natural=h_nat.to_list()[n], hocolim=h_hoc.to_list()[n])
    return passed(check_id, f"homologia igual hasta grado {up_to} (nivel homologia)",
                  betti=h_hoc.betti)
