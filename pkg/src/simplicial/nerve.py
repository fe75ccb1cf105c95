"""
Nervio de categorias finitas, funtores y homotopias inducidas por
transformaciones naturales.

Convencion (Segal): un n-simplice es una cadena x0 →m1 x1 → ... →mn xn.
d_0 descarta m1, d_n descarta mn y las caras internas d_i componen
m_{i+1}∘m_i. Los vertices tienen como id el objeto; las cadenas no
degeneradas "<m1;m2;...;mn>". Una identidad en la posicion k equivale a la
degeneracion s_{k-1}.
"""

import logging

from src.categories.fincat import CatFunctor, CatNatTrans, FinCat, is_loop_free, longest_chain, validate_transformation
from src.simplicial.operators import FormalSimplex, word_to_surjection
from src.simplicial.sset import (
    DEFAULT_DIM_CAP,
    SSet,
    SSetMap,
    build_sset,
    compose,
    cylinder_of,
    endpoint_inclusion,
    first_difference,
    map_equal,
)
from src.utils.checks import CheckResult, failed, passed
from src.utils.errors import CapExceeded, InvalidNatTrans, TruncationRequired

logger = logging.getLogger(__name__)


def chain_id(arrows) -> str:
    return "<" + ";".join(arrows) + ">"


def chain_simplex(cat: FinCat, start: str, arrows) -> FormalSimplex:
    """Forma normal de la cadena (start; m1, ..., mn), con identidades permitidas."""
    arrows = list(arrows)
    n = len(arrows)
    kept = [m for m in arrows if not cat.is_identity(m)]
    word = tuple(k - 1 for k in range(n, 0, -1) if cat.is_identity(arrows[k - 1]))
    if kept:
        return FormalSimplex(chain_id(kept), len(kept), word)
    return FormalSimplex(start, 0, word)


def expand_chain(cat: FinCat, x: FormalSimplex) -> tuple[list[str], list[str]]:
    """Objetos c_0..c_n y flechas f_1..f_n (con identidades) de un simplice formal del nervio."""
    if x.base_dim == 0:
        base_objects, base_arrows = [x.base], []
    else:
        base_arrows = x.base[1:-1].split(";")
        base_objects = [cat.src(base_arrows[0])] + [cat.tgt(m) for m in base_arrows]
    sigma = word_to_surjection(x.word, x.dim)
    objects = [base_objects[s] for s in sigma]
    arrows = []
    for k in range(1, x.dim + 1):
        if sigma[k - 1] == sigma[k]:
            arrows.append(cat.id_of(objects[k]))
        else:
            arrows.append(base_arrows[sigma[k] - 1])
    return objects, arrows


def _nerve_cap(cat: FinCat, dim_cap: int | None) -> tuple[int, bool]:
    if not is_loop_free(cat):
        if dim_cap is None:
            raise TruncationRequired(
                f"La categoria {cat.name or ''} tiene ciclos: el nervio requiere un dim_cap explicito"
            )
        return dim_cap, True
    length = longest_chain(cat)
    if dim_cap is None:
        return max(DEFAULT_DIM_CAP, length), False
    if length > dim_cap:
        raise CapExceeded(f"El nervio requiere dimension {length} y el cap es {dim_cap}", required=length)
    return dim_cap, False


def nerve(cat: FinCat, dim_cap: int | None = None) -> SSet:
    """Nervio de una categoria finita.

    Raises:
        TruncationRequired: categoria con ciclos y sin cap.
        CapExceeded: categoria sin ciclos con cadenas mas largas que el cap.
    """
    cap, truncated = _nerve_cap(cat, dim_cap)
    nonidentity = cat.nonidentity_morphisms
    outgoing: dict[str, list[str]] = {}
    for m in nonidentity:
        outgoing.setdefault(m.src, []).append(m.id)

    nd: dict[int, list[str]] = {0: list(cat.objects)}
    chains = [[m.id] for m in nonidentity]
    n = 1
    while chains and n <= cap:
        nd[n] = [chain_id(c) for c in chains]
        chains = [c + [m] for c in chains for m in outgoing.get(cat.tgt(c[-1]), [])]
        n += 1

    faces = {}
    for n, ids in nd.items():
        if n == 0:
            continue
        for cid in ids:
            arrows = cid[1:-1].split(";")
            objects = [cat.src(arrows[0])] + [cat.tgt(m) for m in arrows]
            fcs = [chain_simplex(cat, objects[1], arrows[1:])]
            for i in range(1, n):
                inner = arrows[:i - 1] + [cat.comp(arrows[i], arrows[i - 1])] + arrows[i + 1:]
                fcs.append(chain_simplex(cat, objects[0], inner))
            fcs.append(chain_simplex(cat, objects[0], arrows[:-1]))
            faces[cid] = tuple(fcs)

    result = build_sset(cap, nd, faces, truncated=truncated, name=f"B({cat.name})" if cat.name else "",
                        sort=True, validate=False)
    logger.debug(f"Nervio {result.name}: {[result.count(k) for k in range(result.dimension + 1)]}")
    return result


def chain_image(functor: CatFunctor, x: FormalSimplex) -> FormalSimplex:
    objects, arrows = expand_chain(functor.source, x)
    return chain_simplex(functor.target, functor.on_objects[objects[0]],
                         [functor.on_morphisms[m] for m in arrows])


def nerve_of_functor(functor: CatFunctor, dim_cap: int | None = None,
                     source: SSet | None = None, target: SSet | None = None) -> SSetMap:
    """Mapa inducido en nervios por un funtor."""
    source = source or nerve(functor.source, dim_cap)
    target = target or nerve(functor.target, dim_cap)
    return SSetMap(source, target, {
        x: chain_image(functor, source.gen(x)) for x in source.generators()
    })


def homotopy_from_nat_trans(trans: CatNatTrans, dim_cap: int | None = None) -> SSetMap:
    """Homotopia simplicial H: Δ¹×B(A) → B(B) con H|₀ = B(F) y H|₁ = B(G).

    Un simplice del prisma es un par (e, x) con e: [n] → [1] monotona; su imagen
    es la cadena que usa F antes del salto, G despues, y la componente de ν en
    el salto.

    Raises:
        InvalidNatTrans: si ν no es natural o los extremos no coinciden.
    """
    validate_transformation(trans)
    F, G = trans.source, trans.target
    source_cat, target_cat = F.source, F.target
    base = nerve(source_cat, dim_cap)
    cylinder = cylinder_of(base)

    assignment = {}
    for pid, (t, x) in cylinder.components.items():
        levels = word_to_surjection(t.word, t.dim)
        levels = [int(t.base.split(",")[s]) for s in levels]
        objects, arrows = expand_chain(source_cat, x)
        image_objects = [G.on_objects[c] if e else F.on_objects[c] for c, e in zip(objects, levels)]
        image_arrows = []
        for k, f in enumerate(arrows, start=1):
            before, after = levels[k - 1], levels[k]
            if before == after == 0:
                image_arrows.append(F.on_morphisms[f])
            elif before == after == 1:
                image_arrows.append(G.on_morphisms[f])
            else:
                image_arrows.append(target_cat.comp(trans.components[objects[k]], F.on_morphisms[f]))
        assignment[pid] = chain_simplex(target_cat, image_objects[0], image_arrows)

    target = nerve(target_cat, dim_cap)
    homotopy = SSetMap(cylinder.sset, target, assignment)
    check = homotopy_endpoints_check(trans, homotopy, dim_cap)
    if not check.passed:
        raise InvalidNatTrans(check.detail)
    return homotopy


def homotopy_endpoints_check(trans: CatNatTrans, homotopy: SSetMap, dim_cap: int | None = None) -> CheckResult:
    """Verifica H∘i₀ = B(F) y H∘i₁ = B(G) componiendo con las inclusiones de extremos."""
    base = nerve(trans.source.source, dim_cap)
    cylinder = cylinder_of(base)
    target = homotopy.target
    for endpoint, functor in ((0, trans.source), (1, trans.target)):
        restricted = compose(homotopy, endpoint_inclusion(base, endpoint, cylinder))
        expected = nerve_of_functor(functor, dim_cap, source=base, target=target)
        if not map_equal(restricted, expected):
            return failed("homotopy-endpoints", f"H|{endpoint} no coincide con el nervio del funtor",
                          endpoint=endpoint, generator=first_difference(restricted, expected))
    return passed("homotopy-endpoints", "H|0 = B(F), H|1 = B(G)")
