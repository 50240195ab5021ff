"""Shared command plumbing: configuration layering and report output."""

from __future__ import annotations

import logging
from pathlib import Path
from typing import Any, ClassVar

from pydantic import BaseModel, ConfigDict, Field, PrivateAttr, ValidationError

from pauli_duality.cli.config import OutputFormat, RunConfig, load_run_config
from pauli_duality.cli.report import Report
from pauli_duality.core.exceptions import PauliDualityError

logger = logging.getLogger(__name__)

# Exit code for configuration that fails validation.
INVALID_CONFIG = 2


class BaseCommand(BaseModel):
    """A CLI subcommand.

    Subclasses declare their flags as optional fields, the defaults in
    ``defaults`` and the report columns in ``columns``, and implement
    :meth:`run`. Flags left unset fall back to the ``--config`` file, then to
    the defaults.
    """

    model_config = ConfigDict(populate_by_name=True)

    name: ClassVar[str]
    columns: ClassVar[tuple[str, ...]] = ()
    defaults: ClassVar[dict[str, Any]] = {}
    required: ClassVar[tuple[str, ...]] = ()

    out: Path | None = Field(default=None, description="Report path (stdout when omitted)")
    format: OutputFormat | None = Field(default=None, description="Report format")
    config_file: Path | None = Field(
        default=None, alias="config", description="key=value file with defaults for any flag"
    )

    _exit_code: int = PrivateAttr(default=0)

    @property
    def exit_code(self) -> int:
        return self._exit_code

    def explicit_values(self) -> dict[str, Any]:
        """Flags given on the command line."""
        fields = self.model_fields_set - {"config_file"}
        return self.model_dump(include=fields, exclude_none=True)

    def cli_cmd(self) -> None:
        self._exit_code = self.execute()

    def execute(self) -> int:
        try:
            config = load_run_config(
                self.name, self.defaults, self.explicit_values(), self.config_file, self.required
            )
        except ValidationError as exc:
            logger.error(f"{self.name}: invalid configuration: {exc}")
            return INVALID_CONFIG
        except PauliDualityError as exc:
            logger.error(f"{self.name}: {exc.detail}")
            return exc.exit_code

        report = Report(self.name, self.columns)
        logger.info(f"Running {self.name}")
        try:
            passed = self.run(config, report)
        except PauliDualityError as exc:
            logger.error(f"{self.name} failed: {exc.detail}")
            report.fail(exc.detail)
            report.write(config.out, config.format)
            return exc.exit_code
        report.note(passed=passed)
        report.write(config.out, config.format)
        logger.info(f"{self.name} finished: {'pass' if passed else 'FAIL'}")
        return 0 if passed else 1

    def run(self, config: RunConfig, report: Report) -> bool:
        """Fill ``report`` and return whether every check passed."""
        raise NotImplementedError
