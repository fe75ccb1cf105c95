"""
Categorias coma relativas a una subcategoria plena D ⊂ C.

- comma_double(C, D, d, c): d↘D↘c, factorizaciones d → d₀ → c con d₀ ∈ D.
- comma_slice(C, D, c):    D↘c, pares (d′, α: d′ → c).
- comma_coslice(C, D, c):  c↘D, pares (α: c → d′, d′).

Los morfismos son flechas β de D que hacen conmutar los triangulos. Los ids de
objetos son "(α|d0|γ)", "(d|α)" y "(α|d)"; los de morfismos "[src~β~tgt]".
"""

import logging
from dataclasses import dataclass

from src.categories.fincat import FinCat, Morphism, build_category
from src.utils.errors import UnknownObject

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CommaLabels:
    """Etiquetas de una categoria coma.

    ``objects[id]`` es la terna (α, d0, γ) o el par correspondiente;
    ``morphisms[id]`` es la flecha subyacente β de D.
    """
    objects: dict[str, tuple[str, ...]]
    morphisms: dict[str, str]


def double_id(alpha: str, d0: str, gamma: str) -> str:
    return f"({alpha}|{d0}|{gamma})"


def slice_id(d: str, alpha: str) -> str:
    return f"({d}|{alpha})"


def coslice_id(alpha: str, d: str) -> str:
    return f"({alpha}|{d})"


def comma_morphism_id(src: str, beta: str, tgt: str) -> str:
    return f"[{src}~{beta}~{tgt}]"


def _check_objects(cat: FinCat, d_objs, *objs) -> list[str]:
    chosen = set(d_objs)
    unknown = sorted((chosen | set(objs)) - set(cat.objects))
    if unknown:
        raise UnknownObject(f"Objetos desconocidos en {cat.name or 'la categoria'}: {unknown}")
    return [o for o in cat.objects if o in chosen]


def _assemble(cat: FinCat, objects: dict[str, tuple[str, ...]], middle, commutes, name: str):
    """Construye la categoria coma a partir de sus objetos etiquetados.

    ``middle(label)`` da el objeto de D de cada etiqueta y ``commutes(l1, β, l2)``
    decide si β: middle(l1) → middle(l2) es un morfismo de la coma.
    """
    morphisms: list[Morphism] = []
    mor_labels: dict[str, str] = {}
    by_pair: dict[tuple[str, str, str], str] = {}
    for o1, l1 in objects.items():
        for o2, l2 in objects.items():
            for beta in cat.hom(middle(l1), middle(l2)):
                if not commutes(l1, beta, l2):
                    continue
                mid = comma_morphism_id(o1, beta, o2)
                morphisms.append(Morphism(mid, o1, o2))
                mor_labels[mid] = beta
                by_pair[(o1, beta, o2)] = mid

    identity = {
        o: by_pair[(o, cat.identity[middle(l)], o)] for o, l in objects.items()
    }
    compose = {}
    for f in morphisms:
        for g in morphisms:
            if f.tgt != g.src:
                continue
            beta = cat.comp(mor_labels[g.id], mor_labels[f.id])
            compose[(g.id, f.id)] = by_pair[(f.src, beta, g.tgt)]

    comma = build_category(objects.keys(), morphisms, identity, compose, name=name, sort=True)
    logger.debug(f"Coma {name}: {len(comma.objects)} objetos, {len(comma.morphisms)} morfismos")
    return comma, CommaLabels(objects=dict(objects), morphisms=mor_labels)


def comma_double(cat: FinCat, d_objs, d: str, c: str) -> tuple[FinCat, CommaLabels]:
    """Categoria doble coma d↘D↘c."""
    members = _check_objects(cat, d_objs, d, c)
    if d not in members:
        raise UnknownObject(f"El objeto '{d}' no pertenece a D")
    objects = {}
    for d0 in members:
        for alpha in cat.hom(d, d0):
            for gamma in cat.hom(d0, c):
                objects[double_id(alpha, d0, gamma)] = (alpha, d0, gamma)

    def commutes(l1, beta, l2):
        return cat.comp(beta, l1[0]) == l2[0] and cat.comp(l2[2], beta) == l1[2]

    return _assemble(cat, objects, lambda l: l[1], commutes, name=f"{d}↘D↘{c}")


def comma_slice(cat: FinCat, d_objs, c: str) -> tuple[FinCat, CommaLabels]:
    """Categoria D↘c de flechas de objetos de D hacia c."""
    members = _check_objects(cat, d_objs, c)
    objects = {}
    for d in members:
        for alpha in cat.hom(d, c):
            objects[slice_id(d, alpha)] = (d, alpha)

    def commutes(l1, beta, l2):
        return cat.comp(l2[1], beta) == l1[1]

    return _assemble(cat, objects, lambda l: l[0], commutes, name=f"D↘{c}")


def comma_coslice(cat: FinCat, d_objs, c: str) -> tuple[FinCat, CommaLabels]:
    """Categoria c↘D de flechas desde c hacia objetos de D."""
    members = _check_objects(cat, d_objs, c)
    objects = {}
    for d in members:
        for alpha in cat.hom(c, d):
            objects[coslice_id(alpha, d)] = (alpha, d)

    def commutes(l1, beta, l2):
        return cat.comp(beta, l1[0]) == l2[0]

    return _assemble(cat, objects, lambda l: l[1], commutes, name=f"{c}↘D")
