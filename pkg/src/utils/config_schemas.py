"""
Esquemas Pydantic para validacion de archivos de configuracion.
"""

from pydantic import BaseModel, field_validator, model_validator

OP_VARIANTS = {"op", "natural"}
SUITES = ("skeleton", "theta", "lambda", "bar", "adjunction", "lcolim-hocolim",
          "nat-variant", "oracle", "all")
SUITE_ALIASES = {"thm62": "lcolim-hocolim"}


def _check_relative(v: str) -> str:
    if ".." in v or v.startswith("/"):
        raise ValueError(f"Path no puede contener '..' ni ser absoluto: {v}")
    return v


class ComputationConfig(BaseModel):
    dim_cap: int = 6
    search_budget: int = 200_000
    op_variant: str = "op"
    mapping_q_max: int = 2

    @field_validator("dim_cap")
    @classmethod
    def validate_dim_cap(cls, v: int) -> int:
        if not 1 <= v <= 12:
            raise ValueError(f"dim_cap debe estar entre 1 y 12, got {v}")
        return v

    @field_validator("search_budget")
    @classmethod
    def validate_budget(cls, v: int) -> int:
        if v < 1:
            raise ValueError(f"search_budget debe ser >= 1, got {v}")
        return v

    @field_validator("op_variant")
    @classmethod
    def validate_variant(cls, v: str) -> str:
        if v not in OP_VARIANTS:
            raise ValueError(f"op_variant invalida: {v}. Opciones: {sorted(OP_VARIANTS)}")
        return v

    @field_validator("mapping_q_max")
    @classmethod
    def validate_q_max(cls, v: int) -> int:
        if not 0 <= v <= 6:
            raise ValueError(f"mapping_q_max debe estar entre 0 y 6, got {v}")
        return v


class HomologyConfig(BaseModel):
    up_to: int = 3

    @field_validator("up_to")
    @classmethod
    def validate_up_to(cls, v: int) -> int:
        if v < 0:
            raise ValueError(f"up_to debe ser >= 0, got {v}")
        return v


class OutputConfig(BaseModel):
    results_dir: str = "data/results"
    write_csv: bool = True

    @field_validator("results_dir")
    @classmethod
    def validate_no_traversal(cls, v: str) -> str:
        return _check_relative(v)


class LoggingConfig(BaseModel):
    level: str = "INFO"
    file: str = "logs/hocolim.log"
    format: str = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

    @field_validator("level")
    @classmethod
    def validate_level(cls, v: str) -> str:
        valid = {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}
        if v.upper() not in valid:
            raise ValueError(f"Nivel de log invalido: {v}. Opciones: {valid}")
        return v.upper()


class ProjectConfig(BaseModel):
    name: str = "hocolim-bar"
    version: str = "1.0.0"
    description: str = ""


class Settings(BaseModel):
    """Esquema completo de settings.yaml."""
    project: ProjectConfig = ProjectConfig()
    computation: ComputationConfig = ComputationConfig()
    homology: HomologyConfig = HomologyConfig()
    output: OutputConfig = OutputConfig()
    logging: LoggingConfig = LoggingConfig()

    @model_validator(mode="after")
    def validate_up_to_below_cap(self) -> "Settings":
        if self.homology.up_to >= self.computation.dim_cap:
            raise ValueError(
                f"homology.up_to ({self.homology.up_to}) debe ser menor que "
                f"computation.dim_cap ({self.computation.dim_cap})"
            )
        return self


class RunConfig(BaseModel):
    """Parametros efectivos de una ejecucion (settings + flags de la CLI)."""
    dim_cap: int
    search_budget: int
    op_variant: str = "op"
    up_to: int = 3
    mapping_q_max: int = 2
    output_path: str
    write_csv: bool = True
    suite: str | None = None

    @field_validator("dim_cap", "search_budget")
    @classmethod
    def validate_positive(cls, v: int) -> int:
        if v < 1:
            raise ValueError(f"dim_cap y search_budget deben ser positivos, got {v}")
        return v

    @field_validator("op_variant")
    @classmethod
    def validate_variant(cls, v: str) -> str:
        if v not in OP_VARIANTS:
            raise ValueError(f"op_variant invalida: {v}")
        return v

    @field_validator("suite")
    @classmethod
    def validate_suite(cls, v: str | None) -> str | None:
        if v is None:
            return v
        v = SUITE_ALIASES.get(v, v)
        if v not in SUITES:
            raise ValueError(f"Suite desconocida: {v}. Opciones: {list(SUITES)}")
        return v

    @model_validator(mode="after")
    def validate_up_to_below_cap(self) -> "RunConfig":
        if self.up_to >= self.dim_cap:
            raise ValueError(f"up_to ({self.up_to}) debe ser menor que dim_cap ({self.dim_cap})")
        return self


def validate_settings(raw: dict) -> Settings:
    """Valida y retorna configuracion tipada. Lanza ValidationError si es invalida."""
    return Settings(**raw)


def build_run_config(settings: dict, **overrides) -> RunConfig:
    """Combina settings validados con los flags de la CLI (None = no especificado)."""
    comp = settings["computation"]
    values = {
        "dim_cap": comp["dim_cap"],
        "search_budget": comp["search_budget"],
        "op_variant": comp["op_variant"],
        "mapping_q_max": comp["mapping_q_max"],
        "up_to": settings["homology"]["up_to"],
        "output_path": settings["output"]["results_dir"],
        "write_csv": settings["output"]["write_csv"],
    }
    values.update({k: v for k, v in overrides.items() if v is not None})
    if values["up_to"] >= values["dim_cap"]:
        values["up_to"] = max(values["dim_cap"] - 1, 0)
    return RunConfig(**values)
