"""
Conjuntos simpliciales finitos en forma normal de Eilenberg–Zilber.

Un SSet guarda solo los generadores no degenerados por dimension y, para cada
generador de dimension n >= 1, sus n+1 caras como simplices formales. Los
simplices degenerados se representan con palabras de degeneracion (ver
``operators``). Los mapas simpliciales se dan por su valor en generadores.
"""

import logging
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations

from src.simplicial.operators import (
    FormalSimplex,
    all_words,
    apply_operator,
    face as face_of,
    format_formal,
    pull_surjection,
    surjection_to_word,
    word_to_surjection,
)
from src.utils.errors import CapExceeded, InputError, InvalidMap, InvalidSimplicialSet, SourceTargetMismatch

logger = logging.getLogger(__name__)

DEFAULT_DIM_CAP = 6


@dataclass(frozen=True)
class SSet:
    """Conjunto simplicial finito.

    Attributes:
        dim_cap: dimension maxima registrada.
        nd: dimension → ids de generadores no degenerados (solo dimensiones no vacias).
        faces: id → caras d_0..d_n (solo generadores de dimension >= 1).
        truncated: True si se omitieron generadores por encima de dim_cap.
    """
    dim_cap: int = field(compare=False)
    nd: dict[int, tuple[str, ...]]
    faces: dict[str, tuple[FormalSimplex, ...]]
    truncated: bool = False
    name: str = field(default="", compare=False)

    @cached_property
    def dim_of(self) -> dict[str, int]:
        return {x: n for n, ids in self.nd.items() for x in ids}

    @property
    def dimension(self) -> int:
        """Dimension del generador mas alto (-1 si es vacio)."""
        return max(self.nd, default=-1)

    @property
    def is_empty(self) -> bool:
        return not self.nd

    def nd_at(self, n: int) -> tuple[str, ...]:
        return self.nd.get(n, ())

    def count(self, n: int) -> int:
        return len(self.nd.get(n, ()))

    def generators(self):
        """Generadores en orden (dimension, declaracion)."""
        for n in sorted(self.nd):
            yield from self.nd[n]

    def gen(self, x: str) -> FormalSimplex:
        try:
            return FormalSimplex(x, self.dim_of[x], ())
        except KeyError:
            raise InvalidSimplicialSet(f"Simplice no registrado '{x}' en {self.name or 'SSet'}")

    def face(self, x: FormalSimplex, i: int) -> FormalSimplex:
        return face_of(self.faces, x, i)

    def apply(self, x: FormalSimplex, theta: tuple[int, ...]) -> FormalSimplex:
        return apply_operator(self.faces, x, theta)

    def formal_simplices(self, n: int) -> list[FormalSimplex]:
        """Todos los n-simplices (degenerados incluidos), en orden determinista."""
        out = []
        for m in range(0, n + 1):
            for base in self.nd.get(m, ()):
                for word in all_words(n, m):
                    out.append(FormalSimplex(base, m, word))
        return out


@dataclass(frozen=True)
class SSetMap:
    """Mapa simplicial: imagen de cada generador no degenerado de la fuente."""
    source: SSet
    target: SSet
    assignment: dict[str, FormalSimplex]

    def __call__(self, x: FormalSimplex) -> FormalSimplex:
        return apply_map(self, x)


def build_sset(dim_cap: int, nd, faces, truncated: bool = False, name: str = "",
               sort: bool = False, validate: bool = True) -> SSet:
    """Normaliza (descarta dimensiones vacias) y valida un SSet."""
    clean = {}
    for n in sorted(nd):
        ids = sorted(nd[n]) if sort else list(nd[n])
        if ids:
            clean[int(n)] = tuple(ids)
    sset = SSet(dim_cap=dim_cap, nd=clean, faces={k: tuple(v) for k, v in faces.items()},
                truncated=truncated, name=name)
    if validate:
        validate_sset(sset)
    return sset


def validate_sset(sset: SSet) -> SSet:
    """Verifica registro de caras, dimensiones y las identidades d_i d_j = d_{j-1} d_i (i < j).

    Raises:
        InvalidSimplicialSet: nombrando el simplice y los indices que fallan.
    """
    seen: set[str] = set()
    for n, ids in sset.nd.items():
        if n < 0 or n > sset.dim_cap:
            raise CapExceeded(f"Generadores en dimension {n} por encima del cap {sset.dim_cap}", required=n)
        for x in ids:
            if x in seen:
                raise InvalidSimplicialSet(f"Id de simplice duplicado '{x}'")
            seen.add(x)

    for n, ids in sset.nd.items():
        for x in ids:
            if n == 0:
                continue
            faces = sset.faces.get(x)
            if faces is None or len(faces) != n + 1:
                raise InvalidSimplicialSet(f"El simplice '{x}' de dimension {n} requiere {n + 1} caras")
            for i, fc in enumerate(faces):
                if fc.dim != n - 1:
                    raise InvalidSimplicialSet(f"Cara d{i} de '{x}' tiene dimension {fc.dim}, esperado {n - 1}")
                if sset.dim_of.get(fc.base) != fc.base_dim:
                    raise InvalidSimplicialSet(f"Cara d{i} de '{x}' referencia '{fc.base}' no registrado")

    for n, ids in sset.nd.items():
        if n < 2:
            continue
        for x in ids:
            gen = FormalSimplex(x, n, ())
            for j in range(n + 1):
                dj = sset.faces[x][j]
                for i in range(j):
                    lhs = sset.face(dj, i)
                    rhs = sset.face(sset.faces[x][i], j - 1)
                    if lhs != rhs:
                        raise InvalidSimplicialSet(
                            f"Identidad simplicial d{i} d{j} = d{j - 1} d{i} falla en '{gen.base}': "
                            f"{format_formal(lhs)} != {format_formal(rhs)}"
                        )
    return sset


# =============================================================================
# Constructores basicos
# =============================================================================

def empty_sset(dim_cap: int = DEFAULT_DIM_CAP) -> SSet:
    return build_sset(dim_cap, {}, {}, name="∅")


def simplex_id(vertices) -> str:
    return ",".join(str(v) for v in vertices)


def delta(n: int, dim_cap: int = DEFAULT_DIM_CAP) -> SSet:
    """Simplice estandar Δ^n; los k-simplices son subconjuntos de k+1 vertices."""
    if n < 0:
        raise InputError(f"Dimension negativa para delta: {n}")
    if n > dim_cap:
        raise CapExceeded(f"delta({n}) excede el cap {dim_cap}", required=n)
    return _delta_like(n, n, dim_cap, name=f"Δ^{n}")


def boundary_delta(n: int, dim_cap: int = DEFAULT_DIM_CAP) -> SSet:
    """Borde ∂Δ^n: Δ^n sin su simplice superior."""
    if n < 1:
        raise InputError(f"boundary_delta requiere n >= 1, recibido {n}")
    if n > dim_cap:
        raise CapExceeded(f"boundary_delta({n}) excede el cap {dim_cap}", required=n)
    return _delta_like(n, n - 1, dim_cap, name=f"∂Δ^{n}")


def _delta_like(n: int, top: int, dim_cap: int, name: str) -> SSet:
    nd, faces = {}, {}
    for k in range(top + 1):
        ids = []
        for subset in combinations(range(n + 1), k + 1):
            sid = simplex_id(subset)
            ids.append(sid)
            if k > 0:
                faces[sid] = tuple(
                    FormalSimplex(simplex_id(subset[:i] + subset[i + 1:]), k - 1, ())
                    for i in range(k + 1)
                )
        nd[k] = ids
    return build_sset(dim_cap, nd, faces, name=name, validate=False)


def constant_sset(elements, dim_cap: int = DEFAULT_DIM_CAP, name: str = "") -> SSet:
    """Conjunto simplicial discreto con conjunto de vertices ``elements`` (ordenados)."""
    vertices = sorted(str(s) for s in elements)
    return build_sset(dim_cap, {0: vertices}, {}, name=name)


def level_zero(sset: SSet) -> list[str]:
    """Conjunto de 0-simplices."""
    return list(sset.nd_at(0))


# =============================================================================
# Mapas
# =============================================================================

def apply_map(f: SSetMap, x: FormalSimplex) -> FormalSimplex:
    """f(s_w y) = s_w f(y)."""
    try:
        image = f.assignment[x.base]
    except KeyError:
        raise InvalidMap(f"El mapa no asigna imagen al generador '{x.base}'")
    return pull_surjection(image, word_to_surjection(x.word, x.dim))


def make_map(source: SSet, target: SSet, assignment, validate: bool = True) -> SSetMap:
    f = SSetMap(source=source, target=target, assignment=dict(assignment))
    if validate:
        validate_map(f)
    return f


def validate_map(f: SSetMap) -> SSetMap:
    """Verifica dimensiones, registro y f(d_i x) = d_i f(x) en todos los generadores."""
    src, tgt = f.source, f.target
    for x in src.generators():
        n = src.dim_of[x]
        image = f.assignment.get(x)
        if image is None:
            raise InvalidMap(f"Generador '{x}' sin imagen")
        if image.dim != n or tgt.dim_of.get(image.base) != image.base_dim:
            raise InvalidMap(f"Imagen de '{x}' invalida: {format_formal(image)}")
        for i in range(n + 1 if n > 0 else 0):
            lhs = apply_map(f, src.faces[x][i])
            rhs = tgt.face(image, i)
            if lhs != rhs:
                raise InvalidMap(
                    f"El mapa no conmuta con d{i} en '{x}': {format_formal(lhs)} != {format_formal(rhs)}"
                )
    return f


def identity_map(sset: SSet) -> SSetMap:
    return SSetMap(sset, sset, {x: sset.gen(x) for x in sset.generators()})


def compose(g: SSetMap, f: SSetMap) -> SSetMap:
    """Retorna g∘f."""
    if f.target != g.source:
        raise SourceTargetMismatch("compose: el target de f no coincide con el source de g")
    return SSetMap(f.source, g.target, {x: apply_map(g, y) for x, y in f.assignment.items()})


def map_equal(f: SSetMap, g: SSetMap) -> bool:
    return f.source == g.source and f.target == g.target and f.assignment == g.assignment


def first_difference(f: SSetMap, g: SSetMap) -> str | None:
    """Primer generador (en orden) donde f y g difieren, o None."""
    for x in f.source.generators():
        if f.assignment.get(x) != g.assignment.get(x):
            return x
    return None


def constant_map(source: SSet, target: SSet, vertex: str) -> SSetMap:
    """Mapa constante al vertice dado (degenerado en dimensiones altas)."""
    if vertex not in target.nd_at(0):
        raise InvalidMap(f"'{vertex}' no es un vertice del target")
    return SSetMap(source, target, {
        x: FormalSimplex(vertex, 0, tuple(range(source.dim_of[x] - 1, -1, -1)))
        for x in source.generators()
    })


def invert_if_iso(f: SSetMap) -> SSetMap | None:
    """Inversa de f si f es un isomorfismo, o None.

    f es iso si y solo si biyecta generadores no degenerados con generadores
    no degenerados de la misma dimension.
    """
    src, tgt = f.source, f.target
    inverse = {}
    for x in src.generators():
        image = f.assignment[x]
        if image.word or image.base in inverse:
            return None
        inverse[image.base] = src.gen(x)
    if len(inverse) != sum(len(v) for v in tgt.nd.values()):
        return None
    return SSetMap(tgt, src, {y: inverse[y] for y in tgt.generators()})


# =============================================================================
# Coproducto y producto
# =============================================================================

def tagged_id(tag: str, x: str) -> str:
    return f"{tag}:{x}"


def coproduct(ssets, tags=None, dim_cap: int | None = None) -> tuple[SSet, list[SSetMap]]:
    """Union disjunta con ids etiquetados "tag:id" y sus inyecciones."""
    ssets = list(ssets)
    tags = [str(t) for t in tags] if tags is not None else [str(i) for i in range(len(ssets))]
    if len(set(tags)) != len(tags):
        raise InputError(f"Etiquetas de coproducto repetidas: {tags}")
    cap = dim_cap if dim_cap is not None else max((k.dim_cap for k in ssets), default=DEFAULT_DIM_CAP)
    nd: dict[int, list[str]] = {}
    faces = {}
    for tag, k in zip(tags, ssets):
        for n, ids in k.nd.items():
            nd.setdefault(n, []).extend(tagged_id(tag, x) for x in ids)
        for x, fcs in k.faces.items():
            faces[tagged_id(tag, x)] = tuple(
                FormalSimplex(tagged_id(tag, fc.base), fc.base_dim, fc.word) for fc in fcs
            )
    result = build_sset(cap, nd, faces, truncated=any(k.truncated for k in ssets), validate=False)
    injections = [
        SSetMap(k, result, {x: FormalSimplex(tagged_id(tag, x), k.dim_of[x], ()) for x in k.generators()})
        for tag, k in zip(tags, ssets)
    ]
    return result, injections


def copair(coprod: SSet, maps: list[SSetMap], tags=None, target: SSet | None = None) -> SSetMap:
    """Mapa desde un coproducto definido por sus restricciones a cada sumando."""
    tags = [str(t) for t in tags] if tags is not None else [str(i) for i in range(len(maps))]
    if target is None:
        if not maps:
            raise InputError("copair sin sumandos requiere un target explicito")
        target = maps[0].target
    assignment = {}
    for tag, f in zip(tags, maps):
        if f.target != target:
            raise SourceTargetMismatch("copair: los mapas no comparten target")
        for x, image in f.assignment.items():
            assignment[tagged_id(tag, x)] = image
    return SSetMap(coprod, target, assignment)


def pair_id(x: FormalSimplex, y: FormalSimplex) -> str:
    return f"[{format_formal(x)} * {format_formal(y)}]"


def pair_simplex(x: FormalSimplex, y: FormalSimplex) -> FormalSimplex:
    """Forma normal del par (x, y) de n-simplices como simplice del producto.

    Las posiciones de repeticion comunes se factorizan como degeneracion del
    par no degenerado.
    """
    if x.dim != y.dim:
        raise InvalidSimplicialSet(f"Par de simplices de dimensiones distintas: {x.dim} y {y.dim}")
    n = x.dim
    sx = word_to_surjection(x.word, n)
    sy = word_to_surjection(y.word, n)
    common = tuple(t for t in range(n - 1, -1, -1) if sx[t] == sx[t + 1] and sy[t] == sy[t + 1])
    eps = word_to_surjection(common, n)
    first: dict[int, int] = {}
    for t, k in enumerate(eps):
        first.setdefault(k, t)
    r = n - len(common)
    x2 = FormalSimplex(x.base, x.base_dim, surjection_to_word(tuple(sx[first[k]] for k in range(r + 1))))
    y2 = FormalSimplex(y.base, y.base_dim, surjection_to_word(tuple(sy[first[k]] for k in range(r + 1))))
    return FormalSimplex(pair_id(x2, y2), r, common)


@dataclass(frozen=True)
class ProductResult:
    sset: SSet
    pr_left: SSetMap
    pr_right: SSetMap
    components: dict[str, tuple[FormalSimplex, FormalSimplex]]


def product_with_projections(left: SSet, right: SSet, dim_cap: int | None = None) -> ProductResult:
    """Producto cartesiano K×L con sus proyecciones.

    Un par (s_w a, s_v b) es no degenerado si y solo si w y v son disjuntas.

    Raises:
        CapExceeded: si el producto necesita celdas por encima del cap.
    """
    cap = dim_cap if dim_cap is not None else max(left.dim_cap, right.dim_cap)
    truncated = left.truncated or right.truncated
    top = left.dimension + right.dimension
    if top > cap and not truncated:
        raise CapExceeded(f"El producto requiere dimension {top} y el cap es {cap}", required=top)

    nd: dict[int, list[str]] = {}
    components: dict[str, tuple[FormalSimplex, FormalSimplex]] = {}
    for a in left.generators():
        p = left.dim_of[a]
        for b in right.generators():
            q = right.dim_of[b]
            for n in range(max(p, q), min(p + q, cap) + 1):
                for w in combinations(range(n), n - p):
                    rest = [t for t in range(n) if t not in w]
                    for v in combinations(rest, n - q):
                        x = FormalSimplex(a, p, tuple(reversed(w)))
                        y = FormalSimplex(b, q, tuple(reversed(v)))
                        pid = pair_id(x, y)
                        nd.setdefault(n, []).append(pid)
                        components[pid] = (x, y)

    faces = {}
    for pid, (x, y) in components.items():
        n = x.dim
        if n == 0:
            continue
        faces[pid] = tuple(pair_simplex(left.face(x, i), right.face(y, i)) for i in range(n + 1))

    name = f"{left.name}×{right.name}" if left.name and right.name else ""
    prod = build_sset(cap, nd, faces, truncated=truncated, name=name, sort=True, validate=False)
    pr_left = SSetMap(prod, left, {pid: xy[0] for pid, xy in components.items()})
    pr_right = SSetMap(prod, right, {pid: xy[1] for pid, xy in components.items()})
    logger.debug(f"Producto {name or 'K×L'}: {sum(map(len, nd.values()))} generadores")
    return ProductResult(prod, pr_left, pr_right, components)


def product(left: SSet, right: SSet, dim_cap: int | None = None) -> SSet:
    return product_with_projections(left, right, dim_cap).sset


def product_map(f: SSetMap, g: SSetMap, source: ProductResult, target: ProductResult) -> SSetMap:
    """f×g entre productos ya construidos."""
    assignment = {
        pid: pair_simplex(apply_map(f, x), apply_map(g, y))
        for pid, (x, y) in source.components.items()
    }
    return SSetMap(source.sset, target.sset, assignment)


def pairing(h: SSetMap, k: SSetMap, target: ProductResult) -> SSetMap:
    """(h, k): Z → K×L."""
    if h.source != k.source:
        raise SourceTargetMismatch("pairing: los mapas no comparten source")
    return SSetMap(h.source, target.sset, {
        x: pair_simplex(h.assignment[x], k.assignment[x]) for x in h.source.generators()
    })


def endpoint_inclusion(sset: SSet, endpoint: int, cylinder: ProductResult | None = None) -> SSetMap:
    """K ≅ Δ⁰×K → Δ¹×K en el vertice ``endpoint`` ∈ {0, 1}."""
    cylinder = cylinder or cylinder_of(sset)
    vertex = str(endpoint)
    assignment = {}
    for x in sset.generators():
        n = sset.dim_of[x]
        const = FormalSimplex(vertex, 0, tuple(range(n - 1, -1, -1)))
        assignment[x] = pair_simplex(const, sset.gen(x))
    return SSetMap(sset, cylinder.sset, assignment)


# =============================================================================
# Esqueletos
# =============================================================================

def skeleton(sset: SSet, n: int) -> tuple[SSet, SSetMap]:
    """Sub-conjunto simplicial generado por los generadores de dimension <= n."""
    if n < 0:
        raise InputError(f"El esqueleto requiere n >= 0, recibido {n}")
    nd = {k: ids for k, ids in sset.nd.items() if k <= n}
    faces = {x: fc for x, fc in sset.faces.items() if sset.dim_of[x] <= n}
    truncated = sset.truncated and n >= sset.dim_cap
    sk = build_sset(sset.dim_cap, nd, faces, truncated=truncated, name=sset.name, validate=False)
    inclusion = SSetMap(sk, sset, {x: sset.gen(x) for x in sk.generators()})
    return sk, inclusion


def simplex_operator(t: FormalSimplex) -> tuple[int, ...]:
    """Operador θ: [dim t] → [n] de un simplice t de Δ^n (vertices "0,2,..." con degeneraciones)."""
    vertices = [int(v) for v in t.base.split(",")]
    sigma = word_to_surjection(t.word, t.dim)
    return tuple(vertices[k] for k in sigma)


def delta_map(theta: tuple[int, ...], source: SSet, target: SSet) -> SSetMap:
    """Mapa Δ^p → Δ^q inducido por θ: [p] → [q] monotona."""
    assignment = {}
    for x in source.generators():
        image = [theta[int(v)] for v in x.split(",")]
        unique = sorted(set(image))
        position = {v: k for k, v in enumerate(unique)}
        word = surjection_to_word(tuple(position[v] for v in image))
        assignment[x] = FormalSimplex(simplex_id(unique), len(unique) - 1, word)
    return SSetMap(source, target, assignment)


def cylinder_of(sset: SSet) -> ProductResult:
    """Δ¹×K con cap suficiente para no truncar."""
    cap = max(sset.dim_cap, sset.dimension + 1, 1)
    return product_with_projections(delta(1, cap), sset, cap)
