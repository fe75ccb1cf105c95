"""
Cocientes de conjuntos simpliciales: coecualizadores, pushouts y la
reconstruccion de esqueletos por pushouts sucesivos.

El coecualizador se calcula nivel a nivel con union-find sobre los simplices
formales del target. Una clase es degenerada si contiene un simplice
degenerado; el representante de una clase no degenerada es el id menor
(orden lexicografico) entre sus generadores.
"""

import logging
from dataclasses import dataclass

from networkx.utils import UnionFind

from src.simplicial.operators import FormalSimplex, degeneracy
from src.simplicial.sset import (
    SSet,
    SSetMap,
    apply_map,
    build_sset,
    boundary_delta,
    compose,
    constant_sset,
    coproduct,
    copair,
    delta,
    first_difference,
    identity_map,
    invert_if_iso,
    make_map,
    map_equal,
    product_map,
    product_with_projections,
    simplex_operator,
    skeleton,
)
from src.utils.checks import CheckResult, failed, passed
from src.utils.errors import NotCoequalizing, SourceTargetMismatch

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PushoutResult:
    sset: SSet
    legs: tuple[SSetMap, SSetMap]
    coproduct: SSet
    projection: SSetMap
    parallel: tuple[SSetMap, SSetMap]


def coequalizer(f: SSetMap, g: SSetMap, name: str = "") -> tuple[SSet, SSetMap]:
    """Coecualizador de f, g: A ⇉ B y su proyeccion B → Q.

    Raises:
        SourceTargetMismatch: si f y g no son paralelos.
    """
    if f.source != g.source or f.target != g.target:
        raise SourceTargetMismatch("coequalizer: f y g deben compartir source y target")
    source, target = f.source, f.target

    projection_of: dict[FormalSimplex, FormalSimplex] = {}
    nd: dict[int, list[str]] = {}
    faces: dict[str, tuple[FormalSimplex, ...]] = {}

    for n in range(target.dimension + 1):
        simplices = target.formal_simplices(n)
        uf = UnionFind(simplices)
        for a in source.formal_simplices(n):
            uf.union(apply_map(f, a), apply_map(g, a))

        for members in sorted(uf.to_sets(), key=lambda s: min(m.base for m in s)):
            degenerate = sorted(m for m in members if m.word)
            if degenerate:
                # s_j π(w) para cualquier miembro degenerado s_j w
                m = degenerate[0]
                lower = FormalSimplex(m.base, m.base_dim, m.word[1:])
                image = degeneracy(projection_of[lower], m.word[0])
            else:
                rep = min(m.base for m in members)
                image = FormalSimplex(rep, n, ())
                nd.setdefault(n, []).append(rep)
            for m in members:
                projection_of[m] = image

        for rep in nd.get(n, []):
            if n > 0:
                faces[rep] = tuple(projection_of[fc] for fc in target.faces[rep])

    quotient = build_sset(target.dim_cap, nd, faces, truncated=target.truncated, name=name, sort=True)
    projection = SSetMap(target, quotient, {y: projection_of[target.gen(y)] for y in target.generators()})
    logger.debug(
        f"Coecualizador: {sum(map(len, target.nd.values()))} → {sum(map(len, quotient.nd.values()))} generadores"
    )
    return quotient, projection


def coequalizer_factor(h: SSetMap, f: SSetMap, g: SSetMap, projection: SSetMap) -> SSetMap:
    """Factorizacion unica de h: B → Z a traves de la proyeccion B → Q.

    Raises:
        NotCoequalizing: si h∘f != h∘g, nombrando el generador testigo.
    """
    hf, hg = compose(h, f), compose(h, g)
    if not map_equal(hf, hg):
        witness = first_difference(hf, hg)
        raise NotCoequalizing(f"h∘f y h∘g difieren en el generador '{witness}'")
    quotient = projection.target
    return SSetMap(quotient, h.target, {q: h.assignment[q] for q in quotient.generators()})


def pushout(f: SSetMap, g: SSetMap, name: str = "") -> PushoutResult:
    """Pushout de B ← A → C como coecualizador de A ⇉ B ⊔ C."""
    if f.source != g.source:
        raise SourceTargetMismatch("pushout: f y g deben compartir el source")
    coprod, (inj_b, inj_c) = coproduct([f.target, g.target])
    left, right = compose(inj_b, f), compose(inj_c, g)
    sset, projection = coequalizer(left, right, name=name)
    legs = (compose(projection, inj_b), compose(projection, inj_c))
    return PushoutResult(sset, legs, coprod, projection, (left, right))


def pushout_factor(result: PushoutResult, to_b: SSetMap, to_c: SSetMap) -> SSetMap:
    """Mapa inducido desde el pushout por un par compatible B → Z, C → Z."""
    h = copair(result.coproduct, [to_b, to_c])
    return coequalizer_factor(h, *result.parallel, result.projection)


def skeleton_pushout_check(sset: SSet, n: int) -> CheckResult:
    """Verifica que sk_n K es el pushout de

        sk_{n-1} K ← ∂Δ^n × nd_n(K) → Δ^n × nd_n(K)

    con los mapas de pegado y caracteristico, compatiblemente con los mapas
    estructurales.
    """
    check_id = f"skeleton[{sset.name or 'K'}, n={n}]"
    cap = max(sset.dim_cap, n)
    sk_prev, _ = skeleton(sset, n - 1)
    sk_n, _ = skeleton(sset, n)
    _, inc_into_n = skeleton(sk_n, n - 1)
    cells = constant_sset(sset.nd_at(n), dim_cap=cap)

    bd = product_with_projections(boundary_delta(n, cap), cells, cap)
    full = product_with_projections(delta(n, cap), cells, cap)
    boundary_inclusion = make_map(bd.pr_left.target, full.pr_left.target,
                                  {x: full.pr_left.target.gen(x) for x in bd.pr_left.target.generators()})
    cell_inclusion = product_map(boundary_inclusion, identity_map(cells), bd, full)

    def characteristic(prod, target: SSet) -> SSetMap:
        assignment = {}
        for pid, (t, x) in prod.components.items():
            top = FormalSimplex(x.base, n, ())
            assignment[pid] = sset.apply(top, simplex_operator(t))
        return make_map(prod.sset, target, assignment)

    attaching = characteristic(bd, sk_prev)
    glued = pushout(attaching, cell_inclusion, name=f"P{n}")
    comparison = pushout_factor(glued, inc_into_n, characteristic(full, sk_n))

    if invert_if_iso(comparison) is None:
        bad = [q for q in comparison.source.generators() if comparison.assignment[q].word]
        return failed(check_id, "el mapa comparacion pushout → sk_n no es isomorfismo",
                      generator=bad[0] if bad else None)
    for leg, expected, label in ((glued.legs[0], inc_into_n, "sk_{n-1}"),
                                 (glued.legs[1], characteristic(full, sk_n), "Δ^n×nd_n")):
        through = compose(comparison, leg)
        if not map_equal(through, expected):
            return failed(check_id, f"el triangulo por {label} no conmuta",
                          generator=first_difference(through, expected))
    return passed(check_id, f"sk_{n} reconstruido por pushout ({sset.count(n)} celdas)")
