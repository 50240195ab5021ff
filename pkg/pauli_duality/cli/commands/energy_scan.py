"""energy-scan: finite-size convergence of E(J) = J E(1/J) for the Ising chain."""

from __future__ import annotations

from typing import ClassVar

from pydantic import Field

from pauli_duality.cli.base import BaseCommand
from pauli_duality.cli.config import RunConfig
from pauli_duality.cli.report import Report
from pauli_duality.scans.energy import duality_energy_scan


class EnergyScanCommand(BaseCommand):
    """Per (J, L): energy density, duality mismatch delta and gap."""

    name: ClassVar[str] = "energy-scan"
    columns: ClassVar[tuple[str, ...]] = ("L", "J", "e", "e_dual", "delta", "gap", "gap_formula")
    defaults: ClassVar[dict] = {"L": "4,6,8,10", "J": "1.5,2,3"}
    required: ClassVar[tuple[str, ...]] = ("L", "J")

    L: str | None = Field(default=None, description="Chain lengths, comma-separated")
    J: str | None = Field(default=None, description="Couplings (J=0 is rejected)")
    jobs: int | None = Field(default=None, description="Worker threads")

    def run(self, config: RunConfig, report: Report) -> bool:
        scan = duality_energy_scan(config.J, config.L, config.jobs)
        for row in scan.rows:
            report.add_row(**row.model_dump())
        for J, ok in scan.non_increasing().items():
            report.note(**{f"non_increasing_J{J:g}": ok})
        return scan.passed
