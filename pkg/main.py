"""
Entry point de la CLI: colimites homotopicos y aproximaciones cofibrantes bar.

Uso:
    python main.py validate cat.json diag.json            # Valida axiomas y funtorialidad
    python main.py hocolim --diagram diag.json            # hocolim X y su homologia
    python main.py hocolim --diagram diag.json --lcolim --thm62
    python main.py approx --diagram diag.json --subcat a,c [--nat]
    python main.py verify all --cap 6 --budget 200000     # Suites sobre el corpus
    python main.py homology --sset k.json                 # H_n(K; Z)
    python main.py --out resultados/ verify skeleton      # Directorio de salida

Codigos de salida: 0 ok, 1 chequeo fallido, 2 entrada invalida, 3 cap/presupuesto excedido.
"""

import sys
import logging
import argparse
from pathlib import Path

from pydantic import ValidationError

# Agregar raiz del proyecto al path
sys.path.insert(0, str(Path(__file__).parent))

from src.approx.bar import bar_approx
from src.approx.canonical import relative_pair
from src.approx.hocolim import compare_lcolim_hocolim, hocolim, lcolim_construction
from src.diagrams.diagram import is_objectwise_homology_equivalence
from src.homology.chains import homology
from src.parsers.formats import (
    check_to_dict,
    detect_kind,
    diagram_map_to_dict,
    diagram_to_dict,
    homology_to_dict,
    load_document,
    load_diagram,
    load_sset,
    parse_category,
    parse_diagram,
    parse_sset,
    sset_to_dict,
)
from src.pipelines.verification_pipeline import VerificationPipeline
from src.reports.result_writer import write_check_report, write_json
from src.utils.checks import CheckResult, failed, passed
from src.utils.config_loader import load_env, load_settings
from src.utils.config_schemas import SUITE_ALIASES, SUITES, RunConfig, build_run_config
from src.utils.errors import InputError, LimitError, ParseError

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_CHECK_FAILED, EXIT_INPUT_ERROR, EXIT_LIMIT = 0, 1, 2, 3


def setup_logging(settings: dict):
    """Configura logging segun settings."""
    log_config = settings.get("logging", {})
    log_file = log_config.get("file", "logs/hocolim.log")

    Path(log_file).parent.mkdir(parents=True, exist_ok=True)

    logging.basicConfig(
        level=getattr(logging, log_config.get("level", "INFO")),
        format=log_config.get("format", "%(asctime)s - %(name)s - %(levelname)s - %(message)s"),
        handlers=[
            logging.FileHandler(log_file, encoding="utf-8"),
            logging.StreamHandler(sys.stdout),
        ],
    )

    # Silenciar loggers ruidosos de terceros
    logging.getLogger("matplotlib").setLevel(logging.WARNING)
    logging.getLogger("networkx").setLevel(logging.WARNING)


# =============================================================================
# Comandos
# =============================================================================

def cmd_validate(files: list[str], config: RunConfig) -> int:
    """Parsea cada archivo y corre sus invariantes; un fallo de invariante es exit 1."""
    checks: list[CheckResult] = []
    for name in files:
        path = Path(name)
        data = load_document(path)
        kind = detect_kind(data)
        check_id = f"validate[{path.name}]"
        try:
            if kind == "category":
                parse_category(data, name=path.stem)
            elif kind == "sset":
                parse_sset(data, name=path.stem, base_dir=path.parent)
            else:
                parse_diagram(data, name=path.stem, base_dir=path.parent)
        except ParseError:
            raise
        except InputError as e:
            checks.append(failed(check_id, str(e), kind=kind, error=type(e).__name__))
            logger.error(f"{path}: {type(e).__name__}: {e}")
            continue
        checks.append(passed(check_id, f"{kind} valido"))
        logger.info(f"{path}: {kind} valido")

    write_check_report(checks, config.output_path, "validate", config.write_csv)
    return EXIT_OK if all(c.passed for c in checks) else EXIT_CHECK_FAILED


def cmd_hocolim(diagram_file: str, config: RunConfig, with_lcolim: bool = False,
                compare: bool = False) -> int:
    """Escribe hocolim X (y opcionalmente Lcolim X y la comparacion) con su homologia."""
    X = load_diagram(diagram_file)
    out = Path(config.output_path)
    stem = Path(diagram_file).stem

    hoc = hocolim(X, config.dim_cap)
    write_json(out / f"{stem}_hocolim.json", sset_to_dict(hoc))
    h = homology(hoc, config.up_to)
    write_json(out / f"{stem}_hocolim_homology.json", homology_to_dict(h, name=f"hocolim {stem}"))
    logger.info(f"hocolim {stem}: betti={h.betti}")

    code = EXIT_OK
    if with_lcolim:
        lcolim = lcolim_construction(X, config.dim_cap, config.op_variant).sset
        write_json(out / f"{stem}_lcolim.json", sset_to_dict(lcolim))
        h_l = homology(lcolim, config.up_to)
        write_json(out / f"{stem}_lcolim_homology.json", homology_to_dict(h_l, name=f"Lcolim {stem}"))
    if compare:
        comparison = compare_lcolim_hocolim(X, config.dim_cap)
        write_json(out / f"{stem}_lcolim_hocolim.json", check_to_dict(comparison.check))
        if not comparison.check.passed:
            logger.error(f"Comparacion Lcolim/hocolim fallida: {comparison.check.detail}")
            code = EXIT_CHECK_FAILED
    return code


def cmd_approx(diagram_file: str, subcat: list[str], config: RunConfig) -> int:
    """Escribe Q̄X, ξ y el reporte de equivalencias de homologia sobre D."""
    X = load_diagram(diagram_file)
    out = Path(config.output_path)
    stem = Path(diagram_file).stem

    pair = relative_pair(X.index, subcat)
    bar = bar_approx(X, pair, config.op_variant, dim_cap=config.dim_cap)
    write_json(out / f"{stem}_qbar.json", diagram_to_dict(bar.qbar))
    write_json(out / f"{stem}_xi.json", diagram_map_to_dict(bar.xi))

    report = is_objectwise_homology_equivalence(bar.xi, pair.D_objs, config.up_to)
    report.check_id = f"approx[{stem}; D={','.join(pair.D_objs)}; {config.op_variant}]"
    write_json(out / f"{stem}_approx_report.json", check_to_dict(report))
    logger.info(f"{report.check_id}: {report.detail}")
    return EXIT_OK if report.passed else EXIT_CHECK_FAILED


def cmd_verify(suite: str, config: RunConfig) -> int:
    """Corre una suite sobre el corpus; exit 0 si y solo si todo pasa."""
    results = VerificationPipeline(config).run(suite)
    write_check_report(results, config.output_path, f"verify_{SUITE_ALIASES.get(suite, suite)}",
                       config.write_csv)
    failures = [c for c in results if not c.passed]
    if not failures:
        return EXIT_OK
    if all("limit" in c.witness for c in failures):
        return EXIT_LIMIT
    return EXIT_CHECK_FAILED


def cmd_homology(sset_file: str, config: RunConfig) -> int:
    K = load_sset(sset_file)
    h = homology(K, config.up_to)
    stem = Path(sset_file).stem
    write_json(Path(config.output_path) / f"{stem}_homology.json", homology_to_dict(h, name=stem))
    for row in h.to_list():
        print(f"H_{row['degree']} = Z^{row['betti']} {' '.join(f'Z/{t}' for t in row['torsion'])}".rstrip())
    return EXIT_OK


# =============================================================================
# Parser
# =============================================================================

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description="hocolim-bar - colimites homotopicos y aproximaciones cofibrantes bar"
    )
    parser.add_argument("--out", type=str, default=None, help="Directorio de salida (default: settings)")

    limits = argparse.ArgumentParser(add_help=False)
    limits.add_argument("--cap", type=int, default=None, help="Dimension maxima de simplices")
    limits.add_argument("--budget", type=int, default=None, help="Presupuesto de busqueda")

    sub = parser.add_subparsers(dest="command", required=True)

    p_validate = sub.add_parser("validate", help="Validar archivos de categoria, SSet o diagrama")
    p_validate.add_argument("files", nargs="+")

    p_hocolim = sub.add_parser("hocolim", parents=[limits], help="Colimite homotopico de un diagrama")
    p_hocolim.add_argument("--diagram", required=True)
    p_hocolim.add_argument("--lcolim", action="store_true", help="Calcular tambien Lcolim X")
    p_hocolim.add_argument("--thm62", "--compare", dest="compare", action="store_true",
                           help="Verificar el isomorfismo Lcolim X ≅ hocolim X")

    p_approx = sub.add_parser("approx", parents=[limits], help="Aproximacion cofibrante bar")
    p_approx.add_argument("--diagram", required=True)
    p_approx.add_argument("--subcat", required=True, help="Objetos de D separados por coma")
    p_approx.add_argument("--nat", action="store_true", help="Usar la variante natural E♮")

    p_verify = sub.add_parser("verify", parents=[limits], help="Correr suites sobre el corpus")
    p_verify.add_argument("suite", choices=list(SUITES) + list(SUITE_ALIASES))

    p_homology = sub.add_parser("homology", parents=[limits], help="Homologia de un conjunto simplicial")
    p_homology.add_argument("--sset", required=True)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)

    load_env()
    settings = load_settings()
    setup_logging(settings)

    try:
        config = build_run_config(
            settings,
            dim_cap=getattr(args, "cap", None),
            search_budget=getattr(args, "budget", None),
            op_variant="natural" if getattr(args, "nat", False) else None,
            output_path=args.out,
            suite=getattr(args, "suite", None),
        )
    except ValidationError as e:
        logger.error(f"Configuracion invalida: {e}")
        return EXIT_INPUT_ERROR

    try:
        if args.command == "validate":
            return cmd_validate(args.files, config)
        if args.command == "hocolim":
            return cmd_hocolim(args.diagram, config, with_lcolim=args.lcolim, compare=args.compare)
        if args.command == "approx":
            subcat = [s.strip() for s in args.subcat.split(",") if s.strip()]
            return cmd_approx(args.diagram, subcat, config)
        if args.command == "verify":
            return cmd_verify(args.suite, config)
        return cmd_homology(args.sset, config)
    except InputError as e:
        logger.error(f"Entrada invalida ({type(e).__name__}): {e}")
        return EXIT_INPUT_ERROR
    except LimitError as e:
        required = getattr(e, "required", None)
        hint = f" (cap requerido: {required})" if required is not None else ""
        logger.error(f"Limite excedido ({type(e).__name__}): {e}{hint}")
        return EXIT_LIMIT


if __name__ == "__main__":
    sys.exit(main())
