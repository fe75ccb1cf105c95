"""
Corpus de instancias predefinidas (config/corpus.yaml).
"""

import logging
from dataclasses import dataclass, field

from src.approx.canonical import RelativePair, relative_pair
from src.categories.fincat import FinCat
from src.diagrams.diagram import Diagram, restrict
from src.parsers.formats import parse_category, parse_diagram_over, parse_sset
from src.simplicial.sset import SSet
from src.utils.config_loader import load_corpus_config
from src.utils.errors import ParseError

logger = logging.getLogger(__name__)


@dataclass
class Corpus:
    categories: dict[str, FinCat]
    pairs: dict[str, RelativePair]
    ssets: dict[str, SSet]
    diagrams: dict[str, dict[str, Diagram]]
    suites: dict[str, dict] = field(default_factory=dict)

    def category(self, name: str) -> FinCat:
        try:
            return self.categories[name]
        except KeyError:
            raise ParseError(f"Categoria '{name}' no esta en el corpus. Opciones: {sorted(self.categories)}")

    def diagram(self, category: str, name: str) -> Diagram:
        try:
            return self.diagrams[category][name]
        except KeyError:
            raise ParseError(f"Diagrama '{name}' sobre '{category}' no esta en el corpus")

    def pair_diagrams(self, pair_name: str, names: list[str]) -> list[tuple[Diagram, Diagram]]:
        """(X sobre C, res X sobre D) para cada diagrama nombrado del par."""
        pair = self.pairs[pair_name]
        category = self.category_of_pair(pair_name)
        out = []
        for name in names:
            X = self.diagram(category, name)
            out.append((X, restrict(X, pair.D_objs)))
        return out

    def category_of_pair(self, pair_name: str) -> str:
        pair = self.pairs[pair_name]
        return next(name for name, cat in self.categories.items() if cat is pair.C)

    def suite(self, name: str) -> dict:
        return self.suites.get(name, {})


def build_corpus(raw: dict) -> Corpus:
    """Construye el corpus desde su documento (ya cargado)."""
    categories = {
        name: parse_category(spec, name=name) for name, spec in (raw.get("categories") or {}).items()
    }

    pairs = {}
    for name, spec in (raw.get("pairs") or {}).items():
        cat_name = spec.get("category")
        if cat_name not in categories:
            raise ParseError(f"Par '{name}': categoria desconocida '{cat_name}'")
        pairs[name] = relative_pair(categories[cat_name], spec.get("subcat", []))

    ssets = {name: parse_sset(spec, name=name) for name, spec in (raw.get("ssets") or {}).items()}

    diagrams: dict[str, dict[str, Diagram]] = {}
    for cat_name, entries in (raw.get("diagrams") or {}).items():
        if cat_name not in categories:
            raise ParseError(f"Diagramas sobre una categoria desconocida '{cat_name}'")
        diagrams[cat_name] = {
            name: parse_diagram_over(categories[cat_name], spec, name=f"{cat_name}/{name}")
            for name, spec in entries.items()
        }

    logger.info(
        f"Corpus: {len(categories)} categorias, {len(pairs)} pares, "
        f"{sum(map(len, diagrams.values()))} diagramas"
    )
    return Corpus(categories, pairs, ssets, diagrams, dict(raw.get("suites") or {}))


def load_corpus() -> Corpus:
    return build_corpus(load_corpus_config())
