"""
Escritura de resultados: JSON determinista para maquinas y CSV + resumen
de texto (pandas) para humanos. Sin marcas de tiempo: ejecuciones repetidas
producen archivos identicos byte a byte.
"""

import json
import logging
from pathlib import Path

import pandas as pd

from src.parsers.formats import check_to_dict
from src.utils.checks import CheckResult

logger = logging.getLogger(__name__)


def dumps(data) -> str:
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False, default=str) + "\n"


def write_json(path: str | Path, data) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(dumps(data))
    logger.info(f"Resultado JSON: {path}")
    return path


def sorted_checks(checks: list[CheckResult]) -> list[CheckResult]:
    return sorted(checks, key=lambda c: c.check_id)


def checks_dataframe(checks: list[CheckResult]) -> pd.DataFrame:
    """Una fila por chequeo, ordenadas por check_id."""
    rows = [
        {
            "check_id": c.check_id,
            "passed": c.passed,
            "detail": c.detail,
            "witness": json.dumps(check_to_dict(c)["witness"], sort_keys=True, ensure_ascii=False),
        }
        for c in sorted_checks(checks)
    ]
    return pd.DataFrame(rows, columns=["check_id", "passed", "detail", "witness"])


def summarize(checks: list[CheckResult], title: str = "") -> str:
    """Resumen legible: totales y lista de fallos con su testigo."""
    df = checks_dataframe(checks)
    total = len(df)
    ok = int(df["passed"].sum()) if total else 0
    lines = []
    if title:
        lines += [title, "=" * len(title)]
    lines.append(f"Chequeos: {total}  |  OK: {ok}  |  Fallidos: {total - ok}")
    failed = df[~df["passed"].astype(bool)] if total else df
    if len(failed):
        lines.append("")
        lines.append("Fallos:")
        for row in failed.itertuples(index=False):
            lines.append(f"  - {row.check_id}: {row.detail} {row.witness}")
    return "\n".join(lines) + "\n"


def write_check_report(checks: list[CheckResult], out_dir: str | Path, name: str,
                       write_csv: bool = True) -> dict[str, Path]:
    """Escribe ``<name>.json``, ``<name>.csv`` (opcional) y ``<name>_summary.txt``."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    ordered = sorted_checks(checks)
    paths = {
        "json": write_json(out_dir / f"{name}.json", {
            "suite": name,
            "passed": all(c.passed for c in ordered),
            "checks": [check_to_dict(c) for c in ordered],
        })
    }
    if write_csv:
        csv_path = out_dir / f"{name}.csv"
        checks_dataframe(ordered).to_csv(csv_path, index=False, encoding="utf-8", lineterminator="\n")
        logger.info(f"Reporte CSV: {csv_path}")
        paths["csv"] = csv_path
    summary_path = out_dir / f"{name}_summary.txt"
    summary_path.write_text(summarize(ordered, title=name), encoding="utf-8")
    paths["summary"] = summary_path
    return paths
