"""
Simplices formales en forma normal de Eilenberg–Zilber y evaluacion de
operadores simpliciales.

Un simplice formal es s_{i1} ... s_{ik} y con i1 > ... > ik e y no degenerado.
La palabra de degeneracion equivale a la sobreyeccion monotona σ: [N] → [m]
cuyas repeticiones (σ(i) = σ(i+1)) estan exactamente en las posiciones de la
palabra. Un operador θ: [p] → [N] se representa como la tupla (θ(0), ..., θ(p)).
"""

import re
from dataclasses import dataclass
from itertools import combinations
from typing import Mapping

from src.utils.errors import InvalidSimplicialSet, ParseError

FacesTable = Mapping[str, tuple["FormalSimplex", ...]]

_FORMAL_RE = re.compile(r"^\s*((?:s\d+\s+)*s\d+)?\s*\|\s*(.+?)\s*$")


@dataclass(frozen=True, order=True)
class FormalSimplex:
    base: str
    base_dim: int
    word: tuple[int, ...] = ()

    def __post_init__(self):
        word = tuple(self.word)
        object.__setattr__(self, "word", word)
        if any(a <= b for a, b in zip(word, word[1:])):
            raise InvalidSimplicialSet(f"Palabra de degeneracion no estrictamente decreciente: {word}")
        if word and (word[-1] < 0 or word[0] > self.base_dim + len(word) - 1):
            raise InvalidSimplicialSet(f"Palabra {word} fuera de rango para base de dimension {self.base_dim}")

    @property
    def dim(self) -> int:
        return self.base_dim + len(self.word)

    @property
    def is_degenerate(self) -> bool:
        return bool(self.word)

    def __str__(self) -> str:
        return format_formal(self)


def nondegenerate(base: str, dim: int) -> FormalSimplex:
    return FormalSimplex(base, dim, ())


def format_formal(x: FormalSimplex) -> str:
    """Sintaxis de archivo: "s3 s1 | base", o solo "base" si la palabra es vacia."""
    if not x.word:
        return x.base
    return " ".join(f"s{i}" for i in x.word) + " | " + x.base


def parse_formal(text: str, dim_of: Mapping[str, int]) -> FormalSimplex:
    """Parsea "s3 s1 | base" (o "base", "| base") usando la dimension registrada de base."""
    match = _FORMAL_RE.match(text)
    if match:
        word_text, base = match.group(1), match.group(2)
        word = tuple(int(tok[1:]) for tok in word_text.split()) if word_text else ()
    else:
        base, word = text.strip(), ()
    if base not in dim_of:
        raise ParseError(f"Simplice formal '{text}' referencia una base no registrada '{base}'")
    return FormalSimplex(base, dim_of[base], word)


# =============================================================================
# Operadores
# =============================================================================

def word_to_surjection(word: tuple[int, ...], n: int) -> tuple[int, ...]:
    """Sobreyeccion [n] → [n - len(word)] con repeticiones en las posiciones de ``word``."""
    repeats = set(word)
    values = [0]
    for i in range(n):
        values.append(values[-1] + (0 if i in repeats else 1))
    return tuple(values)


def surjection_to_word(sigma: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(i for i in range(len(sigma) - 2, -1, -1) if sigma[i] == sigma[i + 1])


def face_operator(n: int, i: int) -> tuple[int, ...]:
    """δ_i: [n-1] → [n], omite i."""
    return tuple(t if t < i else t + 1 for t in range(n))


def degeneracy_operator(n: int, j: int) -> tuple[int, ...]:
    """σ_j: [n+1] → [n], repite j."""
    return tuple(t if t <= j else t - 1 for t in range(n + 2))


def compose_operators(outer: tuple[int, ...], inner: tuple[int, ...]) -> tuple[int, ...]:
    """outer∘inner."""
    return tuple(outer[t] for t in inner)


def is_monotone(theta: tuple[int, ...]) -> bool:
    return all(a <= b for a, b in zip(theta, theta[1:]))


def epi_mono(theta: tuple[int, ...]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Factoriza θ = μ∘ε con ε sobreyectiva y μ inyectiva."""
    image = sorted(set(theta))
    position = {v: k for k, v in enumerate(image)}
    return tuple(position[v] for v in theta), tuple(image)


def pull_surjection(x: FormalSimplex, eps: tuple[int, ...]) -> FormalSimplex:
    """ε^*(x) para una sobreyeccion ε: [p] → [dim x]."""
    sigma = word_to_surjection(x.word, x.dim)
    return FormalSimplex(x.base, x.base_dim, surjection_to_word(compose_operators(sigma, eps)))


def apply_operator(faces: FacesTable, x: FormalSimplex, theta: tuple[int, ...]) -> FormalSimplex:
    """θ^*(x) en forma normal, para θ: [p] → [dim x] monotona.

    Se factoriza σ_x∘θ = μ∘ε; μ se evalua con caras iteradas del generador
    (tabla ``faces``) y ε agrega degeneraciones.
    """
    if not theta or theta[-1] > x.dim or not is_monotone(theta):
        raise InvalidSimplicialSet(f"Operador {theta} invalido para un simplice de dimension {x.dim}")
    sigma = word_to_surjection(x.word, x.dim)
    eps, mu = epi_mono(compose_operators(sigma, theta))
    inner = _apply_mono(faces, x.base, x.base_dim, mu)
    return pull_surjection(inner, eps)


def _apply_mono(faces: FacesTable, base: str, m: int, mu: tuple[int, ...]) -> FormalSimplex:
    if len(mu) == m + 1:
        return FormalSimplex(base, m, ())
    missing = max(set(range(m + 1)) - set(mu))
    try:
        face = faces[base][missing]
    except (KeyError, IndexError):
        raise InvalidSimplicialSet(f"Falta la cara d{missing} del simplice '{base}'")
    rest = tuple(t if t < missing else t - 1 for t in mu)
    return apply_operator(faces, face, rest)


def face(faces: FacesTable, x: FormalSimplex, i: int) -> FormalSimplex:
    """d_i x."""
    if x.dim == 0 or not 0 <= i <= x.dim:
        raise InvalidSimplicialSet(f"Cara d{i} no definida en dimension {x.dim}")
    return apply_operator(faces, x, face_operator(x.dim, i))


def degeneracy(x: FormalSimplex, j: int) -> FormalSimplex:
    """s_j x."""
    if not 0 <= j <= x.dim:
        raise InvalidSimplicialSet(f"Degeneracion s{j} no definida en dimension {x.dim}")
    return pull_surjection(x, degeneracy_operator(x.dim, j))


def degenerate_by(x: FormalSimplex, word: tuple[int, ...]) -> FormalSimplex:
    """s_{w1} ... s_{wk} x para una palabra en forma normal."""
    return pull_surjection(x, word_to_surjection(word, x.dim + len(word)))


def all_words(n: int, m: int):
    """Palabras normales que llevan dimension m a dimension n, en orden lexicografico."""
    k = n - m
    if k < 0:
        return []
    return [tuple(sorted(c, reverse=True)) for c in combinations(range(n), k)]
