"""Run configuration: command defaults <- ``--config`` file <- explicit flags."""

from __future__ import annotations

import logging
from enum import Enum
from pathlib import Path
from typing import Any, Mapping

from dotenv import dotenv_values
from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    FiniteFloat,
    ValidationInfo,
    field_validator,
    model_validator,
)

from pauli_duality.circuits.circuit import Boundary
from pauli_duality.config.settings import settings
from pauli_duality.core.exceptions import ParseError, SizeLimitError
from pauli_duality.models.base import Family

logger = logging.getLogger(__name__)

GRID_FIELDS = ("L", "N", "J", "B", "J1", "J2", "ratios")


class OutputFormat(str, Enum):
    CSV = "csv"
    JSON = "json"
    TEXT = "text"


class RunConfig(BaseModel):
    """Validated settings of one CLI run."""

    model_config = ConfigDict(extra="forbid")

    command: str
    family: Family | None = None
    boundary: Boundary = Boundary.OPEN
    L: list[int] = []
    N: list[int] = []
    J: list[FiniteFloat] = []
    B: list[FiniteFloat] = []
    J1: list[FiniteFloat] = []
    J2: list[FiniteFloat] = []
    ratios: list[FiniteFloat] = []
    tol: float = Field(default=1e-12, gt=0)
    site: int = Field(default=1, ge=1)
    out: Path | None = None
    format: OutputFormat = OutputFormat.CSV
    jobs: int = Field(default_factory=lambda: settings.jobs, ge=1)
    circuit: Path | None = None
    generators: Path | None = None
    self_dual: bool = False

    @field_validator(*GRID_FIELDS, mode="before")
    @classmethod
    def split_list(cls, value: Any) -> Any:
        if isinstance(value, str):
            return [part.strip() for part in value.split(",") if part.strip()]
        if isinstance(value, (int, float)):
            return [value]
        return value

    @field_validator("family", "boundary", "format", mode="before")
    @classmethod
    def lower_case(cls, value: Any) -> Any:
        return value.strip().lower().replace("-", "_") if isinstance(value, str) else value

    @model_validator(mode="after")
    def check_grids(self, info: ValidationInfo) -> "RunConfig":
        for name in (info.context or {}).get("required", ()):
            if not getattr(self, name):
                raise ValueError(f"grid {name!r} must not be empty")
        sizes = self.L + self.N
        if sizes and max(sizes) > settings.state_limit:
            raise SizeLimitError(
                f"L={max(sizes)} exceeds backend limit {settings.state_limit} (set PAULI_DUALITY_LMAX to change)"
            )
        return self


def read_config_file(path: Path | str) -> dict[str, str]:
    """Flat ``key=value`` file; comma-separated lists; ``#`` comments."""
    path = Path(path)
    if not path.is_file():
        raise ParseError(f"config file not found: {path}")
    values = {}
    for key, value in dotenv_values(path).items():
        if value is None:
            continue
        values[key.strip().replace("-", "_")] = value
    values.pop("command", None)
    logger.debug(f"Read {len(values)} keys from {path}")
    return values


def read_text_file(path: Path | str) -> str:
    path = Path(path)
    try:
        return path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}")


def load_run_config(
    command: str,
    defaults: Mapping[str, Any],
    explicit: Mapping[str, Any],
    config_file: Path | str | None = None,
    required: tuple[str, ...] = (),
) -> RunConfig:
    data: dict[str, Any] = {"command": command, **defaults}
    if config_file is not None:
        data.update(read_config_file(config_file))
    data.update(explicit)
    return RunConfig.model_validate(data, context={"required": required})
