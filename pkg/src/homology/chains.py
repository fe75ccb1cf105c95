"""
Homologia entera de conjuntos simpliciales finitos.

Complejo de cadenas normalizado (solo generadores no degenerados; las caras
degeneradas contribuyen cero), matrices de borde enteras en numpy con dtype
object (precision arbitraria) y forma normal de Smith via sympy.
"""

import logging
import math
from dataclasses import dataclass, field

import networkx as nx
import numpy as np
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import invariant_factors, smith_normal_decomp

from src.simplicial.sset import SSet, SSetMap, apply_map
from src.utils.checks import CheckResult, failed, passed
from src.utils.errors import CapExceeded, InvalidSimplicialSet, SourceTargetMismatch

logger = logging.getLogger(__name__)


@dataclass
class ChainComplex:
    """Complejo normalizado: ``boundaries[n]`` es ∂_n: C_n → C_{n-1} (filas C_{n-1})."""
    bases: dict[int, list[str]]
    boundaries: dict[int, np.ndarray] = field(default_factory=dict)

    def rank(self, n: int) -> int:
        return len(self.bases.get(n, []))

    def boundary(self, n: int) -> np.ndarray:
        if n in self.boundaries:
            return self.boundaries[n]
        return np.zeros((self.rank(n - 1), self.rank(n)), dtype=object)


@dataclass
class SmithResult:
    diagonal: np.ndarray
    left: np.ndarray
    right: np.ndarray
    invariants: list[int]


@dataclass
class HomologyResult:
    """Betti y coeficientes de torsion por grado."""
    betti: list[int]
    torsion: list[list[int]]

    def to_list(self) -> list[dict]:
        return [
            {"degree": n, "betti": b, "torsion": list(t)}
            for n, (b, t) in enumerate(zip(self.betti, self.torsion))
        ]

    def is_zero(self, degree: int) -> bool:
        return self.betti[degree] == 0 and not self.torsion[degree]


def _zeros(rows: int, cols: int) -> np.ndarray:
    return np.zeros((rows, cols), dtype=object)


def chain_complex(sset: SSet) -> ChainComplex:
    """Complejo de cadenas normalizado de K, con ∂∘∂ = 0 verificado."""
    bases = {n: list(ids) for n, ids in sset.nd.items()}
    index = {n: {x: k for k, x in enumerate(ids)} for n, ids in bases.items()}
    complex_ = ChainComplex(bases=bases)
    for n in range(1, sset.dimension + 1):
        matrix = _zeros(len(bases.get(n - 1, [])), len(bases.get(n, [])))
        for j, x in enumerate(bases.get(n, [])):
            for i, fc in enumerate(sset.faces[x]):
                if not fc.word:
                    matrix[index[n - 1][fc.base], j] += (-1) ** i
        complex_.boundaries[n] = matrix

    for n in range(2, sset.dimension + 1):
        product = complex_.boundary(n - 1).dot(complex_.boundary(n))
        nonzero = np.argwhere(product != 0)
        if len(nonzero):
            r, c = nonzero[0]
            raise InvalidSimplicialSet(
                f"∂{n - 1}∘∂{n} != 0 en la entrada ({bases[n - 2][r]}, {bases[n][c]})"
            )
    return complex_


def normalize_invariants(values) -> list[int]:
    """Factores invariantes canonicos d1 | d2 | ... a partir de una diagonal no nula."""
    values = sorted(abs(int(v)) for v in values if v)
    changed = True
    while changed:
        changed = False
        for i in range(len(values)):
            for j in range(i + 1, len(values)):
                a, b = values[i], values[j]
                g = math.gcd(a, b)
                if g != a:
                    values[i], values[j] = g, a * b // g
                    changed = True
        values.sort()
    return values


def smith_normal_form(matrix) -> SmithResult:
    """Forma normal de Smith D = U·M·V con U, V invertibles sobre Z (verificado)."""
    m = np.array(matrix, dtype=object)
    if m.ndim != 2:
        m = m.reshape((0, 0)) if m.size == 0 else m.reshape((1, -1))
    rows, cols = m.shape
    if rows == 0 or cols == 0:
        eye_r = np.identity(rows, dtype=int).astype(object)
        eye_c = np.identity(cols, dtype=int).astype(object)
        return SmithResult(_zeros(rows, cols), eye_r, eye_c, [])

    d, u, v = smith_normal_decomp(Matrix(m.tolist()), domain=ZZ)
    diagonal, left, right = _to_object(d), _to_object(u), _to_object(v)
    check = left.dot(m).dot(right)
    if not np.array_equal(check, diagonal):
        raise ArithmeticError("La descomposicion de Smith no satisface U·M·V = D")
    invariants = normalize_invariants(diagonal[k, k] for k in range(min(rows, cols)))
    return SmithResult(diagonal, left, right, invariants)


def _to_object(matrix: Matrix) -> np.ndarray:
    rows = [[int(e) for e in row] for row in matrix.tolist()]
    return np.array(rows, dtype=object).reshape(matrix.shape)


def _invariants(matrix: np.ndarray) -> list[int]:
    if 0 in matrix.shape:
        return []
    factors = invariant_factors(Matrix(matrix.tolist()), domain=ZZ)
    return normalize_invariants(int(f) for f in factors)


def homology_from_complex(complex_: ChainComplex, up_to: int) -> HomologyResult:
    ranks = {}
    invariants = {}
    for n in range(0, up_to + 2):
        inv = _invariants(complex_.boundary(n)) if n > 0 else []
        invariants[n] = inv
        ranks[n] = len(inv)
    betti, torsion = [], []
    for n in range(up_to + 1):
        betti.append(complex_.rank(n) - ranks[n] - ranks[n + 1])
        torsion.append([d for d in invariants[n + 1] if d > 1])
    return HomologyResult(betti=betti, torsion=torsion)


def _check_degrees(sset: SSet, up_to: int):
    if sset.truncated and up_to + 1 > sset.dim_cap:
        raise CapExceeded(
            f"H_{up_to} requiere simplices hasta dimension {up_to + 1}; el conjunto esta truncado en {sset.dim_cap}",
            required=up_to + 1,
        )


def homology(sset: SSet, up_to: int) -> HomologyResult:
    """H_n(K; Z) para n <= up_to.

    Raises:
        CapExceeded: si K esta truncado por debajo de up_to + 1.
    """
    _check_degrees(sset, up_to)
    result = homology_from_complex(chain_complex(sset), up_to)
    logger.debug(f"Homologia {sset.name or 'K'}: betti={result.betti} torsion={result.torsion}")
    return result


def pi0(sset: SSet) -> list[list[str]]:
    """Componentes conexas (clases de vertices por aristas), ordenadas."""
    graph = nx.Graph()
    graph.add_nodes_from(sset.nd_at(0))
    for x in sset.nd_at(1):
        d0, d1 = sset.faces[x]
        graph.add_edge(d0.base, d1.base)
    return sorted(sorted(c) for c in nx.connected_components(graph))


def euler_characteristic(sset: SSet) -> int:
    return sum((-1) ** n * len(ids) for n, ids in sset.nd.items())


def chain_map(f: SSetMap, up_to: int) -> dict[int, np.ndarray]:
    """Matrices del mapa inducido en cadenas normalizadas, grados 0..up_to."""
    src, tgt = f.source, f.target
    index = {n: {x: k for k, x in enumerate(tgt.nd_at(n))} for n in range(up_to + 1)}
    matrices = {}
    for n in range(up_to + 1):
        matrix = _zeros(tgt.count(n), src.count(n))
        for j, x in enumerate(src.nd_at(n)):
            image = apply_map(f, src.gen(x))
            if not image.word:
                matrix[index[n][image.base], j] += 1
        matrices[n] = matrix
    return matrices


def mapping_cone(f: SSetMap, up_to: int) -> ChainComplex:
    """Cono de f: Cone_n = C_{n-1}(K) ⊕ C_n(L), D(a, b) = (-∂a, f(a) + ∂b)."""
    source, target = chain_complex(f.source), chain_complex(f.target)
    fmat = chain_map(f, up_to + 1)
    bases = {}
    for n in range(up_to + 3):
        bases[n] = [f"K:{x}" for x in source.bases.get(n - 1, [])] + [f"L:{y}" for y in target.bases.get(n, [])]
    cone = ChainComplex(bases=bases)
    for n in range(1, up_to + 3):
        k_prev, l_cur = source.rank(n - 1), target.rank(n)
        k_prev2, l_prev = source.rank(n - 2), target.rank(n - 1)
        block = _zeros(k_prev2 + l_prev, k_prev + l_cur)
        if n >= 2 and k_prev:
            block[:k_prev2, :k_prev] = -source.boundary(n - 1)
        if k_prev and n - 1 in fmat:
            block[k_prev2:, :k_prev] = fmat[n - 1]
        if l_cur:
            block[k_prev2:, k_prev:] = target.boundary(n)
        cone.boundaries[n] = block
    return cone


def double_mapping_cylinder(f: SSetMap, g: SSetMap, up_to: int) -> ChainComplex:
    """Complejo del doble cilindro de A ←f− B −g→ C, armado a mano:

        D_n = C_n(A) ⊕ C_n(C) ⊕ C_{n-1}(B),  ∂(a, c, b) = (∂a + f b, ∂c - g b, -∂b)
    """
    if f.source != g.source:
        raise SourceTargetMismatch("double_mapping_cylinder: f y g deben tener la misma fuente")
    left, right, middle = chain_complex(f.target), chain_complex(g.target), chain_complex(f.source)
    fmat, gmat = chain_map(f, up_to + 1), chain_map(g, up_to + 1)
    bases = {
        n: [f"A:{x}" for x in left.bases.get(n, [])] + [f"C:{x}" for x in right.bases.get(n, [])]
        + [f"B:{x}" for x in middle.bases.get(n - 1, [])]
        for n in range(up_to + 3)
    }
    cylinder = ChainComplex(bases=bases)
    for n in range(1, up_to + 3):
        a_n, c_n, b_n = left.rank(n), right.rank(n), middle.rank(n - 1)
        a_p, c_p = left.rank(n - 1), right.rank(n - 1)
        block = _zeros(a_p + c_p + middle.rank(n - 2), a_n + c_n + b_n)
        block[:a_p, :a_n] = left.boundary(n)
        block[a_p:a_p + c_p, a_n:a_n + c_n] = right.boundary(n)
        if b_n:
            block[:a_p, a_n + c_n:] = fmat[n - 1]
            block[a_p:a_p + c_p, a_n + c_n:] = -gmat[n - 1]
            if n >= 2:
                block[a_p + c_p:, a_n + c_n:] = -middle.boundary(n - 1)
        cylinder.boundaries[n] = block
    return cylinder


def _component_map(f: SSetMap) -> tuple[dict[int, int], int, int]:
    src_components = pi0(f.source)
    tgt_components = pi0(f.target)
    where = {v: k for k, comp in enumerate(tgt_components) for v in comp}
    induced = {k: where[apply_map(f, f.source.gen(comp[0])).base] for k, comp in enumerate(src_components)}
    return induced, len(src_components), len(tgt_components)


def homology_equivalence_check(f: SSetMap, up_to: int, check_id: str = "homology-equivalence") -> CheckResult:
    """Decide si f induce biyeccion en π0 e isomorfismos en H_n, n <= up_to.

    (i) π0 biyectivo; (ii) H_n(cono f) = 0 para n <= up_to, luego f_* es
    sobreyectivo hasta up_to e inyectivo hasta up_to - 1; (iii) H_up_to de
    source y target isomorfos en abstracto, y un epimorfismo entre grupos
    abelianos finitamente generados isomorfos es isomorfismo.
    """
    _check_degrees(f.source, up_to)
    _check_degrees(f.target, up_to)
    induced, n_src, n_tgt = _component_map(f)
    if n_src != n_tgt or len(set(induced.values())) != n_tgt:
        return failed(check_id, f"π0 no biyectivo ({n_src} → {n_tgt} componentes)",
                      components_source=n_src, components_target=n_tgt)

    cone = homology_from_complex(mapping_cone(f, up_to), up_to)
    for n in range(up_to + 1):
        if not cone.is_zero(n):
            return failed(check_id, f"H_{n}(cono) != 0", degree=n,
                          betti=cone.betti[n], torsion=cone.torsion[n])

    h_src, h_tgt = homology(f.source, up_to), homology(f.target, up_to)
    if (h_src.betti[up_to], h_src.torsion[up_to]) != (h_tgt.betti[up_to], h_tgt.torsion[up_to]):
        return failed(check_id, f"H_{up_to} de source y target no son isomorfos", degree=up_to)
    return passed(check_id, f"equivalencia de homologia hasta grado {up_to} (nivel homologia)",
                  betti=h_tgt.betti)


def is_homology_equivalence(f: SSetMap, up_to: int) -> bool:
    return homology_equivalence_check(f, up_to).passed


def reduced_homology_vanishes(sset: SSet, up_to: int) -> bool:
    """True si K es no vacio, conexo y H_n(K) = 0 para 1 <= n <= up_to."""
    if sset.is_empty:
        return False
    result = homology(sset, up_to)
    return result.betti[0] == 1 and not result.torsion[0] and all(result.is_zero(n) for n in range(1, up_to + 1))
