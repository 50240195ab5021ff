"""fixed-state: joint +1 eigenstate of a generator file."""

from __future__ import annotations

import logging
from pathlib import Path
from typing import ClassVar

import numpy as np
from pydantic import Field

from pauli_duality.cli.base import BaseCommand
from pauli_duality.cli.config import RunConfig, read_text_file
from pauli_duality.cli.report import Report
from pauli_duality.core.exceptions import ParseError
from pauli_duality.stabilizer.fixed_point import eigen_residuals, fixed_state
from pauli_duality.stabilizer.generators import GeneratorSet

logger = logging.getLogger(__name__)

# Amplitudes at or below this magnitude are left out of the report.
AMPLITUDE_CUTOFF = 1e-12


class FixedStateCommand(BaseCommand):
    """Solve g_k|psi> = |psi> for a generator set, one operator string per line."""

    name: ClassVar[str] = "fixed-state"
    columns: ClassVar[tuple[str, ...]] = ("basis", "re", "im", "probability")
    defaults: ClassVar[dict] = {"tol": 1e-10}

    generators: Path | None = Field(default=None, description="Generator file")
    tol: float | None = Field(default=None, description="Bound on ||g psi - psi|| (default 1e-10)")

    def run(self, config: RunConfig, report: Report) -> bool:
        if config.generators is None:
            raise ParseError("fixed-state needs --generators")
        gens = GeneratorSet.from_text(read_text_file(config.generators), label=config.generators.name)
        commuting = gens.commuting()
        independent = gens.independent()
        chain = gens.chain()
        report.note(L=gens.L, commuting=commuting, independent=independent, fixed_space_chain=chain)
        state = fixed_state(gens)
        for index, amplitude in enumerate(state.vector):
            if abs(amplitude) > AMPLITUDE_CUTOFF:
                report.add_row(
                    basis=format(index, f"0{gens.L}b"),
                    re=float(amplitude.real),
                    im=float(amplitude.imag),
                    probability=float(abs(amplitude) ** 2),
                )
        residual = max(eigen_residuals(gens, state))
        report.note(max_eigen_residual=residual)
        if not (commuting and independent):
            logger.warning(f"{gens.label}: commuting={commuting} independent={independent}")
        return commuting and independent and residual <= config.tol
