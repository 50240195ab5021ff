"""solve-zxz: the non-Hermitian generator solution of the ZXZ chain."""

from __future__ import annotations

import logging
from itertools import product
from typing import ClassVar

from pydantic import Field

from pauli_duality.cli.base import BaseCommand
from pauli_duality.cli.config import RunConfig
from pauli_duality.cli.report import Report
from pauli_duality.core.pool import run_grid
from pauli_duality.stabilizer.lemma1 import Lemma1Params, Lemma1Report, verify_lemma1

logger = logging.getLogger(__name__)

CHECKS = ("conjugation", "plus_eigenstate", "ground_energy", "eigen_equations", "fixed_state", "remark_state")


class SolveZXZCommand(BaseCommand):
    """Verify the exact ground state of the periodic ZXZ chain on a grid."""

    name: ClassVar[str] = "solve-zxz"
    columns: ClassVar[tuple[str, ...]] = (
        "N", "J", "B", "lambda", "other_root", "e0_analytic", "e0_numeric", "gap",
        *CHECKS, "passed",
    )
    defaults: ClassVar[dict] = {"N": "4", "J": "1", "B": "1", "tol": 1e-9}
    required: ClassVar[tuple[str, ...]] = ("N", "J", "B")

    N: str | None = Field(default=None, description="Ring sizes, comma-separated")
    J: str | None = Field(default=None, description="Three-body couplings (J=0 points are skipped)")
    B: str | None = Field(default=None, description="Field values")
    tol: float | None = Field(default=None, description="Check tolerance (default 1e-9)")
    jobs: int | None = Field(default=None, description="Worker threads")

    def run(self, config: RunConfig, report: Report) -> bool:
        points = []
        skipped = 0
        for N, J, B in product(config.N, config.J, config.B):
            if J == 0:
                logger.warning(f"skipping N={N} J=0 B={B:g}: the closed form needs J != 0")
                skipped += 1
                continue
            points.append(Lemma1Params.of(N, J, B))

        results: list[Lemma1Report] = run_grid(lambda p: verify_lemma1(p, config.tol), points, config.jobs)
        for result in results:
            report.add_row(
                N=result.N,
                J=result.J,
                B=result.B,
                **{"lambda": result.lam},
                other_root=result.other_root,
                e0_analytic=result.e0_analytic,
                e0_numeric=result.e0_numeric,
                gap=result.gap,
                **{check.name: check.residual for check in result.checks},
                passed=result.passed,
            )
            if not result.passed:
                failing = [c.name for c in result.checks if not c.passed]
                logger.error(f"failing point: N={result.N} J={result.J:g} B={result.B:g} ({', '.join(failing)})")
        failed = sum(not r.passed for r in results)
        report.note(points=len(results), skipped=skipped, failed=failed)
        return failed == 0
