"""
Aproximacion cofibrante bar Q̄X = E ⊗ res X y su mapa ξ: Q̄X → X.

    ξ = ε ∘ λ ∘ (ϑ ⊗ res X)

con λ: F ⊗_D res X ≅ ind res X el colapso de co-Yoneda y ε la counidad.
Como todo conjunto simplicial es cofibrante, la aproximacion objeto a objeto
es la identidad salvo que se pase ``objectwise_approx``.
"""

import logging
from dataclasses import dataclass
from typing import Callable

from src.approx.canonical import ApproxBundle, RelativePair, build_F, build_theta
from src.categories.comma import slice_id
from src.diagrams.diagram import (
    Diagram,
    DiagramMap,
    colimit_factor,
    compose_diagram_maps,
    diagram_maps_equal,
    first_component_difference,
    identity_diagram_map,
    restrict,
    validate_diagram_map,
)
from src.diagrams.kan import Induction, counit, induction
from src.diagrams.tensor import BiTensor, bi_tensor_full, bi_tensor_map, tensor_factor
from src.simplicial.operators import FormalSimplex
from src.simplicial.sset import SSetMap, pair_simplex
from src.utils.checks import CheckResult, failed, passed
from src.utils.errors import IndexMismatch

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LambdaIso:
    """λ: F ⊗_D X → ind X y su inversa, con la verificacion de composiciones."""
    forward: DiagramMap
    backward: DiagramMap
    tensor: BiTensor
    induced: Induction
    check: CheckResult


def _constant(phi: str, n: int) -> FormalSimplex:
    return FormalSimplex(phi, 0, tuple(range(n - 1, -1, -1)))


def lambda_iso(pair: RelativePair, X: Diagram, tensor: BiTensor | None = None,
               induced: Induction | None = None) -> LambdaIso:
    """Isomorfismo canonico F_{D,C} ⊗_D X ≅ ind_D^C X.

    El sumando d de (F ⊗ X)(c) es mor(d, c)×X(d); el par (φ, x) va a x en el
    sumando (d|φ) del colimite que define ind X(c).

    Raises:
        IndexMismatch: si X no esta indexado por D.
    """
    if X.index != pair.D:
        raise IndexMismatch("lambda_iso: el diagrama debe estar indexado por D")
    C = pair.C
    tensor = tensor or bi_tensor_full(build_F(pair), X, C)
    induced = induced or induction(X, C)

    forward, backward = {}, {}
    for c in C.objects:
        t_c, colim_c = tensor.tensors[c], induced.colimits[c]
        legs = {}
        for d in pair.D.objects:
            prod = t_c.products[d]
            legs[d] = SSetMap(prod.sset, colim_c.sset, {
                pid: colim_c.cocone[slice_id(d, v.base)](x) for pid, (v, x) in prod.components.items()
            })
        forward[c] = tensor_factor(t_c, legs, target=colim_c.sset)

        back_legs = {}
        for o, (d, phi) in induced.labels[c].objects.items():
            value = X.value[d]
            back_legs[o] = SSetMap(value, t_c.result, {
                x: t_c.summand_injections[d](pair_simplex(_constant(phi, value.dim_of[x]), value.gen(x)))
                for x in value.generators()
            })
        backward[c] = colimit_factor(colim_c, back_legs, target=t_c.result)

    there = DiagramMap(tensor.diagram, induced.diagram, forward)
    back = DiagramMap(induced.diagram, tensor.diagram, backward)
    check_id = f"lambda[{C.name or 'C'}; {X.name or 'X'}]"
    round_trip = compose_diagram_maps(back, there)
    other_trip = compose_diagram_maps(there, back)
    if not diagram_maps_equal(round_trip, identity_diagram_map(tensor.diagram)):
        obj = first_component_difference(round_trip, identity_diagram_map(tensor.diagram))
        check = failed(check_id, f"λ⁻¹∘λ != id en '{obj}'", object=obj)
    elif not diagram_maps_equal(other_trip, identity_diagram_map(induced.diagram)):
        obj = first_component_difference(other_trip, identity_diagram_map(induced.diagram))
        check = failed(check_id, f"λ∘λ⁻¹ != id en '{obj}'", object=obj)
    else:
        check = passed(check_id, "λ y λ⁻¹ componen a identidades")
    return LambdaIso(there, back, tensor, induced, check)


@dataclass(frozen=True)
class BarApproximation:
    """Q̄X con ξ: Q̄X → X y los factores intermedios."""
    qbar: Diagram
    xi: DiagramMap
    bundle: ApproxBundle
    theta_part: DiagramMap
    lam: LambdaIso
    eps: DiagramMap
    qbar_tensor: BiTensor


def bar_approx(X: Diagram, pair: RelativePair, op_variant: str = "op",
               objectwise_approx: Callable[[Diagram], DiagramMap] | None = None,
               dim_cap: int | None = None) -> BarApproximation:
    """Q̄X = E ⊗ res X con ξ = ε∘λ∘(ϑ ⊗ res X) (precompuesto con q si se da).

    Raises:
        IndexMismatch: si X no esta indexado por C.
    """
    if X.index != pair.C:
        raise IndexMismatch("bar_approx: el diagrama debe estar indexado por C")
    q = objectwise_approx(X) if objectwise_approx else identity_diagram_map(X)
    qX = q.source
    res = restrict(qX, pair.D_objs)
    bundle = build_theta(pair, op_variant, dim_cap)

    qbar = bi_tensor_full(bundle.E, res, pair.C)
    fx = bi_tensor_full(bundle.F, res, pair.C)
    theta_part = bi_tensor_map(bundle.theta, res, qbar, fx)
    lam = lambda_iso(pair, res, tensor=fx)
    eps = counit(qX, pair.D_objs, lam.induced)

    xi = compose_diagram_maps(q, compose_diagram_maps(eps, compose_diagram_maps(lam.forward, theta_part)))
    validate_diagram_map(xi)
    logger.info(f"Aproximacion bar de {X.name or 'X'} sobre D={list(pair.D_objs)} ({op_variant})")
    return BarApproximation(qbar.diagram, xi, bundle, theta_part, lam, eps, qbar)
