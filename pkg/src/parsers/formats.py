"""
Lectura y escritura de archivos de entrada/salida (sintaxis JSON, YAML aceptado).

Formatos:
    categoria: {"objects", "morphisms": [{"id","src","tgt"}], "identities", "compose": [{"g","f","gf"}]}
    SSet:      {"dim_cap", "nd": {dim: [ids]}, "faces": {id: ["s1 s0 | base", ...]}}
               o un nombre predefinido: "point", "S0", "empty", "delta(n)", "boundary(n)"
    mapa:      {id_generador: "s.. | base"}
    diagrama:  {"category": <inline o archivo>, "values": {obj: <SSet>}, "action": {morid: <mapa>}}
               o {"category": ..., "constant": <SSet>}

Las referencias a archivos se resuelven relativas al archivo que las contiene.
"""

import json
import logging
import re
from pathlib import Path

import yaml

from src.categories.fincat import FinCat, make_category
from src.diagrams.diagram import Diagram, DiagramMap, constant_diagram, make_diagram
from src.homology.chains import HomologyResult
from src.simplicial.operators import format_formal, parse_formal
from src.simplicial.sset import (
    DEFAULT_DIM_CAP,
    SSet,
    SSetMap,
    boundary_delta,
    build_sset,
    constant_sset,
    delta,
    empty_sset,
    make_map,
)
from src.utils.checks import CheckResult
from src.utils.errors import ParseError

logger = logging.getLogger(__name__)

_BUILTIN_RE = re.compile(r"^(delta|boundary)\((\d+)\)$")
BUILTIN_SSETS = ("point", "S0", "empty", "delta(n)", "boundary(n)")


# =============================================================================
# Lectura
# =============================================================================

def load_document(path: str | Path) -> dict:
    """Lee un archivo JSON/YAML y retorna su contenido (debe ser un dict).

    Raises:
        ParseError: con la linea del error de sintaxis si la hay.
    """
    path = Path(path)
    if not path.exists():
        raise ParseError(f"Archivo no encontrado: {path}")
    try:
        with open(path, "r", encoding="utf-8") as f:
            data = yaml.safe_load(f)
    except yaml.YAMLError as e:
        mark = getattr(e, "problem_mark", None)
        where = f" (linea {mark.line + 1}, columna {mark.column + 1})" if mark else ""
        raise ParseError(f"{path}: sintaxis invalida{where}: {getattr(e, 'problem', e)}")
    if not isinstance(data, dict):
        raise ParseError(f"{path}: el documento debe ser un objeto, no {type(data).__name__}")
    return data


def _require(data: dict, key: str, where: str):
    if key not in data:
        raise ParseError(f"{where}: falta el campo '{key}'")
    return data[key]


def _resolve(ref, base_dir: Path | None, where: str) -> dict:
    """Un campo puede ser un objeto inline o la ruta a un archivo."""
    if isinstance(ref, dict):
        return ref
    if isinstance(ref, str):
        return load_document((base_dir or Path(".")) / ref)
    raise ParseError(f"{where}: se esperaba objeto o ruta, no {type(ref).__name__}")


def parse_category(data: dict, name: str = "") -> FinCat:
    """Construye y valida una categoria desde su documento.

    Raises:
        ParseError: si la forma del documento es invalida.
        InputError: si los datos violan los axiomas (MissingComposite, ...).
    """
    if not isinstance(data, dict):
        raise ParseError(f"categoria '{name}': se esperaba un objeto")
    for key in ("objects", "morphisms", "compose"):
        if key in data and not isinstance(data[key], list):
            raise ParseError(f"categoria '{name}': el campo '{key}' debe ser una lista")
    for k, raw in enumerate(data.get("morphisms", [])):
        if not isinstance(raw, dict):
            raise ParseError(f"categoria '{name}': morphisms[{k}] debe ser un objeto")
        for field in ("id", "src", "tgt"):
            _require(raw, field, f"categoria '{name}', morphisms[{k}]")
    for k, raw in enumerate(data.get("compose", [])):
        if not isinstance(raw, dict):
            raise ParseError(f"categoria '{name}': compose[{k}] debe ser un objeto")
        for field in ("g", "f", "gf"):
            _require(raw, field, f"categoria '{name}', compose[{k}]")
    return make_category(data, name=name or str(data.get("name", "")))


def builtin_sset(spec: str, dim_cap: int = DEFAULT_DIM_CAP) -> SSet:
    if spec == "point":
        return delta(0, dim_cap)
    if spec == "S0":
        return constant_sset(["0", "1"], dim_cap, name="S0")
    if spec == "empty":
        return empty_sset(dim_cap)
    match = _BUILTIN_RE.match(spec.replace(" ", ""))
    if not match:
        raise ParseError(f"SSet predefinido desconocido '{spec}'. Opciones: {BUILTIN_SSETS}")
    kind, n = match.group(1), int(match.group(2))
    cap = max(dim_cap, n)
    return delta(n, cap) if kind == "delta" else boundary_delta(n, cap)


def parse_sset(data, name: str = "", base_dir: Path | None = None) -> SSet:
    """SSet desde su documento, un nombre predefinido o la ruta a un archivo."""
    if isinstance(data, str):
        if data in BUILTIN_SSETS[:3] or _BUILTIN_RE.match(data.replace(" ", "")):
            return builtin_sset(data)
        data = _resolve(data, base_dir, f"SSet '{name}'")
    if not isinstance(data, dict):
        raise ParseError(f"SSet '{name}': se esperaba objeto o nombre predefinido")
    where = f"SSet '{name or data.get('name', '')}'"

    raw_nd = _require(data, "nd", where)
    if not isinstance(raw_nd, dict):
        raise ParseError(f"{where}: 'nd' debe ser un objeto dimension → ids")
    nd: dict[int, list[str]] = {}
    for dim, ids in raw_nd.items():
        try:
            n = int(dim)
        except (TypeError, ValueError):
            raise ParseError(f"{where}: dimension invalida '{dim}' en 'nd'")
        if n < 0 or not isinstance(ids, list):
            raise ParseError(f"{where}: nd[{dim}] debe ser una lista en dimension >= 0")
        nd[n] = [str(x) for x in ids]
    dim_of = {x: n for n, ids in nd.items() for x in ids}

    faces = {}
    for x, raw_faces in (data.get("faces") or {}).items():
        x = str(x)
        if x not in dim_of:
            raise ParseError(f"{where}: caras de un simplice no declarado '{x}'")
        if not isinstance(raw_faces, list) or len(raw_faces) != dim_of[x] + 1:
            raise ParseError(f"{where}: faces['{x}'] debe listar {dim_of[x] + 1} caras")
        faces[x] = [parse_formal(str(t), dim_of) for t in raw_faces]

    top = max(nd, default=0)
    dim_cap = int(data.get("dim_cap", max(top, DEFAULT_DIM_CAP)))
    return build_sset(dim_cap, nd, faces, truncated=bool(data.get("truncated", False)),
                      name=name or str(data.get("name", "")))


def parse_map(data, source: SSet, target: SSet, where: str = "mapa") -> SSetMap:
    """Mapa simplicial desde su tabla generador → simplice formal (validado)."""
    if not isinstance(data, dict):
        raise ParseError(f"{where}: se esperaba un objeto generador → simplice")
    unknown = sorted(set(map(str, data)) - set(source.dim_of))
    if unknown:
        raise ParseError(f"{where}: generadores desconocidos en la fuente: {unknown}")
    assignment = {str(x): parse_formal(str(t), target.dim_of) for x, t in data.items()}
    return make_map(source, target, assignment)


def parse_diagram(data: dict, name: str = "", base_dir: Path | None = None) -> Diagram:
    """Diagrama desde su documento; la categoria y los valores pueden ser archivos."""
    where = f"diagrama '{name}'"
    if not isinstance(data, dict):
        raise ParseError(f"{where}: se esperaba un objeto")
    index = parse_category(_resolve(_require(data, "category", where), base_dir, where))
    return parse_diagram_over(index, data, name or str(data.get("name", "")), base_dir)


def parse_diagram_over(index: FinCat, data: dict, name: str = "", base_dir: Path | None = None) -> Diagram:
    """Valores y acciones de un diagrama sobre una categoria ya construida."""
    where = f"diagrama '{name}'"

    if "constant" in data:
        return constant_diagram(index, parse_sset(data["constant"], base_dir=base_dir), name=name)

    raw_values = _require(data, "values", where)
    if not isinstance(raw_values, dict):
        raise ParseError(f"{where}: 'values' debe ser un objeto")
    missing = [o for o in index.objects if o not in raw_values]
    if missing:
        raise ParseError(f"{where}: objetos sin valor: {missing}")
    value = {o: parse_sset(raw_values[o], name=o, base_dir=base_dir) for o in index.objects}

    action = {}
    raw_action = data.get("action") or {}
    for mor_id, table in raw_action.items():
        mor_id = str(mor_id)
        if mor_id not in {m.id for m in index.morphisms}:
            raise ParseError(f"{where}: accion de un morfismo desconocido '{mor_id}'")
        m = index.morphism(mor_id)
        action[mor_id] = parse_map(table, value[m.src], value[m.tgt], where=f"{where}, action['{mor_id}']")
    for m in index.nonidentity_morphisms:
        if m.id not in action:
            raise ParseError(f"{where}: falta la accion del morfismo '{m.id}'")
    return make_diagram(index, value, action, name=name)


def load_category(path: str | Path) -> FinCat:
    path = Path(path)
    return parse_category(load_document(path), name=path.stem)


def load_sset(path: str | Path) -> SSet:
    path = Path(path)
    return parse_sset(load_document(path), name=path.stem, base_dir=path.parent)


def load_diagram(path: str | Path) -> Diagram:
    path = Path(path)
    diagram = parse_diagram(load_document(path), name=path.stem, base_dir=path.parent)
    logger.info(f"Diagrama '{diagram.name}' cargado: {len(diagram.index.objects)} objetos")
    return diagram


def detect_kind(data: dict) -> str:
    """Clasifica un documento: 'diagram', 'sset' o 'category'."""
    if "category" in data:
        return "diagram"
    if "nd" in data:
        return "sset"
    if "objects" in data:
        return "category"
    raise ParseError(f"Documento no reconocido (campos: {sorted(data)})")


# =============================================================================
# Escritura
# =============================================================================

def category_to_dict(cat: FinCat) -> dict:
    """Documento de categoria; omite identidades y composiciones con identidades."""
    idents = set(cat.identity.values())
    return {
        "name": cat.name,
        "objects": list(cat.objects),
        "morphisms": [{"id": m.id, "src": m.src, "tgt": m.tgt} for m in cat.nonidentity_morphisms],
        "identities": dict(cat.identity),
        "compose": [
            {"g": g, "f": f, "gf": gf}
            for (g, f), gf in sorted(cat.compose.items())
            if g not in idents and f not in idents
        ],
    }


def sset_to_dict(sset: SSet) -> dict:
    return {
        "name": sset.name,
        "dim_cap": sset.dim_cap,
        "truncated": sset.truncated,
        "nd": {str(n): list(ids) for n, ids in sset.nd.items()},
        "faces": {x: [format_formal(t) for t in sset.faces[x]] for x in sset.generators() if x in sset.faces},
    }


def map_to_dict(f: SSetMap) -> dict:
    return {x: format_formal(f.assignment[x]) for x in f.source.generators()}


def diagram_to_dict(diagram: Diagram) -> dict:
    idents = set(diagram.index.identity.values())
    return {
        "name": diagram.name,
        "category": category_to_dict(diagram.index),
        "values": {o: sset_to_dict(diagram.value[o]) for o in diagram.index.objects},
        "action": {
            m.id: map_to_dict(diagram.action[m.id]) for m in diagram.index.morphisms if m.id not in idents
        },
    }


def diagram_map_to_dict(f: DiagramMap) -> dict:
    return {o: map_to_dict(f.components[o]) for o in f.source.index.objects}


def homology_to_dict(result: HomologyResult, name: str = "") -> dict:
    return {"name": name, "degrees": result.to_list(), "betti": list(result.betti)}


def check_to_dict(check: CheckResult) -> dict:
    """CheckResult serializable (testigos convertidos a tipos JSON)."""
    data = check.to_dict()
    data["witness"] = json.loads(json.dumps(data["witness"], default=str))
    return data
