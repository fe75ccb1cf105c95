"""
Resultado uniforme de una verificacion.

Las verificaciones nunca lanzan excepciones por un chequeo fallido: retornan un
CheckResult con el testigo concreto (objeto, morfismo, simplice o entrada de
matriz) que explica el fallo.
"""

from dataclasses import asdict, dataclass, field
from typing import Any


@dataclass
class CheckResult:
    check_id: str
    passed: bool
    detail: str = ""
    witness: dict[str, Any] = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.passed

    def to_dict(self) -> dict:
        return asdict(self)


def passed(check_id: str, detail: str = "", **witness) -> CheckResult:
    return CheckResult(check_id=check_id, passed=True, detail=detail, witness=witness)


def failed(check_id: str, detail: str, **witness) -> CheckResult:
    return CheckResult(check_id=check_id, passed=False, detail=detail, witness=witness)


def combine(check_id: str, results: list[CheckResult]) -> CheckResult:
    """Agrega sub-chequeos: pasa si todos pasan; el testigo es el primer fallo."""
    for r in results:
        if not r.passed:
            return CheckResult(check_id, False, f"{r.check_id}: {r.detail}", dict(r.witness))
    return CheckResult(check_id, True, f"{len(results)} sub-chequeos OK")
