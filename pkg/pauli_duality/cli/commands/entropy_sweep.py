"""entropy-sweep: single-site entropy of the ZXZ ground state versus B/J."""

from __future__ import annotations

from typing import ClassVar

from pydantic import Field

from pauli_duality.cli.base import BaseCommand
from pauli_duality.cli.config import RunConfig
from pauli_duality.cli.report import Report
from pauli_duality.core.exceptions import ModelError
from pauli_duality.scans.entropy import entropy_sweep


class EntropySweepCommand(BaseCommand):
    """Sweep B/J at fixed N and J; entropies in bits."""

    name: ClassVar[str] = "entropy-sweep"
    columns: ClassVar[tuple[str, ...]] = ("B_over_J", "lambda", "single_site_entropy_bits")
    defaults: ClassVar[dict] = {"N": "8", "J": "1"}
    required: ClassVar[tuple[str, ...]] = ("N", "J")

    N: str | None = Field(default=None, description="Ring size")
    J: str | None = Field(default=None, description="Three-body coupling")
    ratios: str | None = Field(default=None, description="B/J values (default: 0 and 49 log-spaced points)")
    site: int | None = Field(default=None, description="Site whose entropy is reported (1-based)")
    jobs: int | None = Field(default=None, description="Worker threads")

    def run(self, config: RunConfig, report: Report) -> bool:
        if len(config.N) != 1 or len(config.J) != 1:
            raise ModelError("entropy-sweep takes a single N and a single J")
        N, J = config.N[0], config.J[0]
        if config.site > N:
            raise ModelError(f"site {config.site} outside ring of {N} sites")
        sweep = entropy_sweep(N, config.ratios or None, J, config.site - 1, config.jobs)
        for row in sweep.rows:
            report.add_row(B_over_J=row.B_over_J, **{"lambda": row.lam}, single_site_entropy_bits=row.entropy)
        values = sweep.entropies
        report.note(
            N=N,
            J=J,
            first_entropy=values[0],
            last_entropy=values[-1],
            strictly_decreasing=sweep.strictly_decreasing,
            within_bounds=sweep.within_bounds,
        )
        return sweep.within_bounds and sweep.strictly_decreasing
