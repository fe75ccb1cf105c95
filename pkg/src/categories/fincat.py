"""
Categorias finitas dadas por tablas de composicion totales, funtores y
transformaciones naturales entre ellas, y las categorias derivadas
(opuesta, producto, subcategoria plena, discreta).

Convenciones de ids:
- Los ids de objetos y morfismos son strings; `<`, `>` y `;` estan reservados
  (los usa el nervio).
- Las identidades auto-insertadas se llaman ``id_<objeto>``.
- Las categorias derivadas generan ids deterministas a partir de sus
  constituyentes y ordenan lexicograficamente (salvo la opuesta, que conserva
  el orden para que op(op(C)) == C literalmente).
"""

import logging
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product as cartesian

import networkx as nx

from src.utils.errors import (
    BadIdentifier,
    BadIdentity,
    InputError,
    InvalidFunctor,
    InvalidNatTrans,
    MissingComposite,
    NonAssociative,
    UnknownObject,
)

logger = logging.getLogger(__name__)

RESERVED_CHARS = frozenset("<>;")


@dataclass(frozen=True)
class Morphism:
    """Flecha de una categoria finita."""
    id: str
    src: str
    tgt: str


@dataclass(frozen=True)
class FinCat:
    """Categoria finita: objetos, morfismos, identidades y composicion total.

    ``compose[(g, f)]`` es g∘f y esta definido exactamente cuando
    tgt(f) == src(g).
    """
    objects: tuple[str, ...]
    morphisms: tuple[Morphism, ...]
    identity: dict[str, str]
    compose: dict[tuple[str, str], str]
    name: str = field(default="", compare=False)

    @cached_property
    def _by_id(self) -> dict[str, Morphism]:
        return {m.id: m for m in self.morphisms}

    @cached_property
    def _homs(self) -> dict[tuple[str, str], list[str]]:
        homs: dict[tuple[str, str], list[str]] = {}
        for m in self.morphisms:
            homs.setdefault((m.src, m.tgt), []).append(m.id)
        return homs

    @cached_property
    def _identity_ids(self) -> frozenset[str]:
        return frozenset(self.identity.values())

    def morphism(self, mor_id: str) -> Morphism:
        try:
            return self._by_id[mor_id]
        except KeyError:
            raise UnknownObject(f"Morfismo desconocido '{mor_id}' en {self.name or 'categoria'}")

    def src(self, mor_id: str) -> str:
        return self.morphism(mor_id).src

    def tgt(self, mor_id: str) -> str:
        return self.morphism(mor_id).tgt

    def comp(self, g: str, f: str) -> str:
        """Retorna g∘f."""
        try:
            return self.compose[(g, f)]
        except KeyError:
            raise MissingComposite(f"Composicion no definida: {g} ∘ {f}")

    def hom(self, a: str, b: str) -> list[str]:
        """Morfismos a → b en orden de declaracion."""
        return list(self._homs.get((a, b), []))

    def id_of(self, obj: str) -> str:
        try:
            return self.identity[obj]
        except KeyError:
            raise UnknownObject(f"Objeto desconocido '{obj}' en {self.name or 'categoria'}")

    def is_identity(self, mor_id: str) -> bool:
        return mor_id in self._identity_ids

    def has_object(self, obj: str) -> bool:
        return obj in self.identity

    @property
    def nonidentity_morphisms(self) -> list[Morphism]:
        return [m for m in self.morphisms if not self.is_identity(m.id)]


@dataclass(frozen=True)
class CatFunctor:
    """Funtor entre categorias finitas, dado por tablas."""
    source: FinCat
    target: FinCat
    on_objects: dict[str, str]
    on_morphisms: dict[str, str]

    def __call__(self, x: str) -> str:
        if x in self.on_morphisms:
            return self.on_morphisms[x]
        return self.on_objects[x]


@dataclass(frozen=True)
class CatNatTrans:
    """Transformacion natural F ⇒ G; ``components[a]`` es un morfismo F(a) → G(a)."""
    source: CatFunctor
    target: CatFunctor
    components: dict[str, str]


# =============================================================================
# Construccion y validacion
# =============================================================================

def identity_name(obj: str) -> str:
    return f"id_{obj}"


def pair_id(x: str, y: str) -> str:
    """Id de un par en una categoria producto."""
    return f"({x},{y})"


def _check_identifier(kind: str, ident: str):
    if not isinstance(ident, str) or not ident:
        raise BadIdentifier(f"{kind} con id vacio o no string: {ident!r}")
    bad = RESERVED_CHARS.intersection(ident)
    if bad:
        raise BadIdentifier(f"{kind} '{ident}' usa caracteres reservados {sorted(bad)}")


def validate_category(cat: FinCat) -> FinCat:
    """Verifica exhaustivamente los axiomas de categoria.

    Raises:
        BadIdentity, MissingComposite, NonAssociative, InputError
    """
    objects = set(cat.objects)
    if len(objects) != len(cat.objects):
        raise InputError(f"Objetos duplicados en {cat.name or 'categoria'}")
    seen: set[str] = set()
    for m in cat.morphisms:
        if m.id in seen:
            raise InputError(f"Morfismo duplicado '{m.id}'")
        seen.add(m.id)
        if m.src not in objects or m.tgt not in objects:
            raise UnknownObject(f"Morfismo '{m.id}' con extremos desconocidos {m.src} → {m.tgt}")

    for obj in cat.objects:
        ident = cat.identity.get(obj)
        if ident is None or ident not in seen:
            raise BadIdentity(f"Objeto '{obj}' sin identidad registrada")
        mor = cat.morphism(ident)
        if mor.src != obj or mor.tgt != obj:
            raise BadIdentity(f"Identidad '{ident}' de '{obj}' no es endomorfismo de '{obj}'")

    # Totalidad y tipos
    for f in cat.morphisms:
        for g in cat.morphisms:
            if f.tgt != g.src:
                continue
            gf = cat.compose.get((g.id, f.id))
            if gf is None:
                raise MissingComposite(f"Falta la composicion {g.id} ∘ {f.id}")
            res = cat.morphism(gf)
            if res.src != f.src or res.tgt != g.tgt:
                raise InputError(
                    f"Composicion {g.id} ∘ {f.id} = {gf} tiene extremos {res.src} → {res.tgt}, "
                    f"esperado {f.src} → {g.tgt}"
                )
    for (g, f) in cat.compose:
        if cat.tgt(f) != cat.src(g):
            raise InputError(f"Entrada de composicion para par no componible: ({g}, {f})")

    # Unidades
    for f in cat.morphisms:
        if cat.comp(cat.identity[f.tgt], f.id) != f.id:
            raise BadIdentity(f"{cat.identity[f.tgt]} no es unidad izquierda para {f.id}")
        if cat.comp(f.id, cat.identity[f.src]) != f.id:
            raise BadIdentity(f"{cat.identity[f.src]} no es unidad derecha para {f.id}")

    # Asociatividad (exhaustiva sobre ternas componibles)
    outgoing: dict[str, list[Morphism]] = {}
    for m in cat.morphisms:
        outgoing.setdefault(m.src, []).append(m)
    for f in cat.morphisms:
        for g in outgoing.get(f.tgt, []):
            gf = cat.comp(g.id, f.id)
            for h in outgoing.get(g.tgt, []):
                if cat.comp(cat.comp(h.id, g.id), f.id) != cat.comp(h.id, gf):
                    raise NonAssociative(f"No asociativa en la terna ({h.id}, {g.id}, {f.id})")
    return cat


def build_category(
    objects, morphisms, identity, compose, name: str = "", sort: bool = False
) -> FinCat:
    """Ensambla y valida una categoria a partir de datos ya completos."""
    objs = sorted(objects) if sort else list(objects)
    mors = sorted(morphisms, key=lambda m: m.id) if sort else list(morphisms)
    cat = FinCat(
        objects=tuple(objs),
        morphisms=tuple(mors),
        identity=dict(identity),
        compose=dict(compose),
        name=name,
    )
    return validate_category(cat)


def make_category(spec: dict, name: str = "") -> FinCat:
    """Construye una FinCat validada desde su descripcion (formato JSON/YAML).

    Las identidades pueden omitirse (se insertan como ``id_<obj>``) y las
    composiciones con identidades se infieren.
    """
    objects = [str(o) for o in spec.get("objects", [])]
    for obj in objects:
        _check_identifier("Objeto", obj)

    identities = {str(k): str(v) for k, v in (spec.get("identities") or {}).items()}
    declared: list[Morphism] = []
    for raw in spec.get("morphisms", []):
        try:
            mor = Morphism(id=str(raw["id"]), src=str(raw["src"]), tgt=str(raw["tgt"]))
        except KeyError as e:
            raise InputError(f"Morfismo sin campo {e}: {raw}")
        _check_identifier("Morfismo", mor.id)
        declared.append(mor)
    declared_ids = {m.id for m in declared}

    auto: list[Morphism] = []
    for obj in objects:
        ident = identities.get(obj)
        if ident is None:
            ident = identity_name(obj)
            identities[obj] = ident
        if ident not in declared_ids:
            auto.append(Morphism(id=ident, src=obj, tgt=obj))
    morphisms = auto + declared

    compose: dict[tuple[str, str], str] = {}
    for raw in spec.get("compose", []):
        try:
            compose[(str(raw["g"]), str(raw["f"]))] = str(raw["gf"])
        except KeyError as e:
            raise InputError(f"Entrada de composicion sin campo {e}: {raw}")
    for m in morphisms:
        if m.tgt in identities:
            compose.setdefault((identities[m.tgt], m.id), m.id)
        if m.src in identities:
            compose.setdefault((m.id, identities[m.src]), m.id)

    cat = build_category(objects, morphisms, identities, compose, name=name)
    logger.debug(f"Categoria '{name}' validada: {len(cat.objects)} objetos, {len(cat.morphisms)} morfismos")
    return cat


# =============================================================================
# Categorias derivadas
# =============================================================================

def opposite(cat: FinCat) -> FinCat:
    """Categoria opuesta: mismos ids, extremos invertidos, composicion invertida."""
    return FinCat(
        objects=cat.objects,
        morphisms=tuple(Morphism(m.id, m.tgt, m.src) for m in cat.morphisms),
        identity=dict(cat.identity),
        compose={(f, g): gf for (g, f), gf in cat.compose.items()},
        name=f"{cat.name}^op" if cat.name else "",
    )


def product(left: FinCat, right: FinCat) -> FinCat:
    """Categoria producto con composicion componente a componente."""
    objects = [pair_id(a, b) for a, b in cartesian(left.objects, right.objects)]
    morphisms = [
        Morphism(pair_id(f.id, g.id), pair_id(f.src, g.src), pair_id(f.tgt, g.tgt))
        for f, g in cartesian(left.morphisms, right.morphisms)
    ]
    identity = {pair_id(a, b): pair_id(left.identity[a], right.identity[b])
                for a, b in cartesian(left.objects, right.objects)}
    compose = {}
    for (g1, f1), gf1 in left.compose.items():
        for (g2, f2), gf2 in right.compose.items():
            compose[(pair_id(g1, g2), pair_id(f1, f2))] = pair_id(gf1, gf2)
    name = f"{left.name}×{right.name}" if left.name and right.name else ""
    return build_category(objects, morphisms, identity, compose, name=name, sort=True)


def product_projections(left: FinCat, right: FinCat, prod: FinCat | None = None):
    """Proyecciones left×right → left y left×right → right."""
    prod = prod or product(left, right)
    p1_obj, p2_obj, p1_mor, p2_mor = {}, {}, {}, {}
    for a, b in cartesian(left.objects, right.objects):
        p1_obj[pair_id(a, b)] = a
        p2_obj[pair_id(a, b)] = b
    for f, g in cartesian(left.morphisms, right.morphisms):
        p1_mor[pair_id(f.id, g.id)] = f.id
        p2_mor[pair_id(f.id, g.id)] = g.id
    return (
        CatFunctor(prod, left, p1_obj, p1_mor),
        CatFunctor(prod, right, p2_obj, p2_mor),
    )


def switch_category(left: FinCat, right: FinCat) -> CatFunctor:
    """Funtor de intercambio left×right → right×left."""
    source = product(left, right)
    target = product(right, left)
    on_obj = {pair_id(a, b): pair_id(b, a) for a, b in cartesian(left.objects, right.objects)}
    on_mor = {pair_id(f.id, g.id): pair_id(g.id, f.id)
              for f, g in cartesian(left.morphisms, right.morphisms)}
    return validate_functor(CatFunctor(source, target, on_obj, on_mor))


def full_subcategory(cat: FinCat, objs) -> tuple[FinCat, CatFunctor]:
    """Subcategoria plena sobre ``objs`` y su inclusion."""
    chosen = set(objs)
    unknown = chosen - set(cat.objects)
    if unknown:
        raise UnknownObject(f"Objetos desconocidos para la subcategoria: {sorted(unknown)}")
    objects = [o for o in cat.objects if o in chosen]
    morphisms = [m for m in cat.morphisms if m.src in chosen and m.tgt in chosen]
    kept = {m.id for m in morphisms}
    compose = {k: v for k, v in cat.compose.items() if k[0] in kept and k[1] in kept}
    identity = {o: cat.identity[o] for o in objects}
    sub = build_category(objects, morphisms, identity, compose, name=cat.name)
    inclusion = CatFunctor(
        source=sub,
        target=cat,
        on_objects={o: o for o in objects},
        on_morphisms={m: m for m in kept},
    )
    return sub, inclusion


def discrete_category(elements, name: str = "") -> FinCat:
    """Conjunto visto como categoria discreta (solo identidades)."""
    objects = list(elements)
    morphisms = [Morphism(identity_name(s), s, s) for s in objects]
    identity = {s: identity_name(s) for s in objects}
    compose = {(identity_name(s), identity_name(s)): identity_name(s) for s in objects}
    return build_category(objects, morphisms, identity, compose, name=name)


def terminal_category() -> FinCat:
    return discrete_category(["*"], name="terminal")


def is_loop_free(cat: FinCat) -> bool:
    """True si los unicos endomorfismos son identidades y la relacion
    "existe flecha no identidad a → b" es aciclica."""
    graph = nx.DiGraph()
    graph.add_nodes_from(cat.objects)
    for m in cat.nonidentity_morphisms:
        if m.src == m.tgt:
            return False
        graph.add_edge(m.src, m.tgt)
    return nx.is_directed_acyclic_graph(graph)


def longest_chain(cat: FinCat) -> int:
    """Longitud maxima de una cadena de flechas no identidad (categoria sin ciclos)."""
    graph = nx.DiGraph()
    graph.add_nodes_from(cat.objects)
    graph.add_edges_from((m.src, m.tgt) for m in cat.nonidentity_morphisms)
    if graph.number_of_nodes() == 0:
        return 0
    return nx.dag_longest_path_length(graph)


# =============================================================================
# Funtores y transformaciones naturales
# =============================================================================

def validate_functor(functor: CatFunctor) -> CatFunctor:
    """Verifica exhaustivamente que el funtor preserva extremos, identidades y composicion."""
    src, tgt = functor.source, functor.target
    for obj in src.objects:
        image = functor.on_objects.get(obj)
        if image is None or not tgt.has_object(image):
            raise InvalidFunctor(f"Objeto '{obj}' sin imagen valida ({image})")
        if functor.on_morphisms.get(src.identity[obj]) != tgt.identity[image]:
            raise InvalidFunctor(f"No preserva la identidad de '{obj}'")
    for m in src.morphisms:
        image = functor.on_morphisms.get(m.id)
        if image is None:
            raise InvalidFunctor(f"Morfismo '{m.id}' sin imagen")
        fm = tgt.morphism(image)
        if fm.src != functor.on_objects[m.src] or fm.tgt != functor.on_objects[m.tgt]:
            raise InvalidFunctor(f"Imagen de '{m.id}' con extremos incorrectos")
    for (g, f), gf in src.compose.items():
        lhs = functor.on_morphisms[gf]
        rhs = tgt.comp(functor.on_morphisms[g], functor.on_morphisms[f])
        if lhs != rhs:
            raise InvalidFunctor(f"No preserva la composicion {g} ∘ {f}")
    return functor


def identity_functor(cat: FinCat) -> CatFunctor:
    return CatFunctor(
        source=cat,
        target=cat,
        on_objects={o: o for o in cat.objects},
        on_morphisms={m.id: m.id for m in cat.morphisms},
    )


def compose_functors(second: CatFunctor, first: CatFunctor) -> CatFunctor:
    """Retorna second∘first."""
    if first.target != second.source:
        raise InvalidFunctor("Funtores no componibles: el target del primero no es el source del segundo")
    return CatFunctor(
        source=first.source,
        target=second.target,
        on_objects={o: second.on_objects[v] for o, v in first.on_objects.items()},
        on_morphisms={m: second.on_morphisms[v] for m, v in first.on_morphisms.items()},
    )


def opposite_functor(functor: CatFunctor) -> CatFunctor:
    return CatFunctor(
        source=opposite(functor.source),
        target=opposite(functor.target),
        on_objects=dict(functor.on_objects),
        on_morphisms=dict(functor.on_morphisms),
    )


def functor_equal(first: CatFunctor, second: CatFunctor) -> bool:
    return (
        first.source == second.source
        and first.target == second.target
        and first.on_objects == second.on_objects
        and first.on_morphisms == second.on_morphisms
    )


def constant_functor(source: FinCat, target: FinCat, obj: str) -> CatFunctor:
    ident = target.id_of(obj)
    return CatFunctor(
        source=source,
        target=target,
        on_objects={o: obj for o in source.objects},
        on_morphisms={m.id: ident for m in source.morphisms},
    )


def validate_transformation(trans: CatNatTrans) -> CatNatTrans:
    """Verifica G(α)∘comp(a) = comp(b)∘F(α) para todo α: a → b."""
    F, G = trans.source, trans.target
    if F.source != G.source or F.target != G.target:
        raise InvalidNatTrans("Los funtores de la transformacion no son paralelos")
    tgt = F.target
    for obj in F.source.objects:
        comp = trans.components.get(obj)
        if comp is None:
            raise InvalidNatTrans(f"Falta la componente en '{obj}'")
        m = tgt.morphism(comp)
        if m.src != F.on_objects[obj] or m.tgt != G.on_objects[obj]:
            raise InvalidNatTrans(f"Componente en '{obj}' con extremos incorrectos")
    for m in F.source.morphisms:
        lhs = tgt.comp(G.on_morphisms[m.id], trans.components[m.src])
        rhs = tgt.comp(trans.components[m.tgt], F.on_morphisms[m.id])
        if lhs != rhs:
            raise InvalidNatTrans(f"Cuadrado de naturalidad no conmuta en el morfismo '{m.id}'")
    return trans


def identity_transformation(functor: CatFunctor) -> CatNatTrans:
    return CatNatTrans(
        source=functor,
        target=functor,
        components={o: functor.target.identity[functor.on_objects[o]] for o in functor.source.objects},
    )


def opposite_transformation(trans: CatNatTrans) -> CatNatTrans:
    """ν: F ⇒ G induce ν^op: G^op ⇒ F^op."""
    return CatNatTrans(
        source=opposite_functor(trans.target),
        target=opposite_functor(trans.source),
        components=dict(trans.components),
    )
