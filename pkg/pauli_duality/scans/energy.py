"""Finite-size convergence of the Ising energy relation E(J) = J E(1/J)."""

from __future__ import annotations

import logging
import math
from itertools import groupby
from typing import Iterable, Sequence

from pydantic import BaseModel

from pauli_duality.backend.dense import ground
from pauli_duality.core.exceptions import DegenerateParameterError
from pauli_duality.core.pool import run_grid
from pauli_duality.models.ising import ising

logger = logging.getLogger(__name__)

# Slack allowed when asserting delta is non-increasing in L.
MONOTONE_SLACK = 1e-12


class EnergyRow(BaseModel):
    L: int
    J: float
    e: float
    e_dual: float
    delta: float
    gap: float | None
    gap_formula: float


class EnergyScan(BaseModel):
    rows: list[EnergyRow]

    def deltas(self, J: float) -> list[float]:
        return [row.delta for row in self.rows if row.J == J]

    def non_increasing(self) -> dict[float, bool]:
        """Per J: delta(J, L) never grows with L."""
        verdict = {}
        for J, rows in groupby(sorted(self.rows, key=lambda r: (r.J, r.L)), key=lambda r: r.J):
            deltas = [row.delta for row in rows]
            verdict[J] = all(b <= a + MONOTONE_SLACK for a, b in zip(deltas, deltas[1:]))
        return verdict

    @property
    def passed(self) -> bool:
        return all(self.non_increasing().values())


def _check_coupling(J: float) -> None:
    if J == 0 or not math.isfinite(J) or not math.isfinite(1 / J):
        raise DegenerateParameterError(
            f"J={J} rejected: the energy relation does not hold in the extreme cases J=0 and J=infinity"
        )


def _point(L: int, J: float) -> EnergyRow:
    spectrum, _ = ground(ising(L, J))
    dual, _ = ground(ising(L, 1 / J))
    e = spectrum.ground_energy
    delta = abs(e - J * dual.ground_energy) / L
    logger.debug(f"Energy scan L={L} J={J:g}: delta={delta:.3e}")
    return EnergyRow(
        L=L,
        J=J,
        e=e / L,
        e_dual=dual.ground_energy / L,
        delta=delta,
        gap=spectrum.gap,
        gap_formula=2 * abs(1 - 1 / J),
    )


def duality_energy_scan(
    J_grid: Iterable[float], L_grid: Iterable[int], jobs: int = 1
) -> EnergyScan:
    """e(J, L) = E0(H(J))/L and delta(J, L) = |E0(H(J)) - J E0(H(1/J))| / L, rows sorted by L."""
    J_values: Sequence[float] = list(J_grid)
    for J in J_values:
        _check_coupling(J)
    points = [(L, J) for L in sorted(set(L_grid)) for J in J_values]
    logger.info(f"Energy scan over {len(points)} points with {jobs} worker(s)")
    rows = run_grid(lambda point: _point(*point), points, jobs)
    scan = EnergyScan(rows=rows)
    for J, ok in scan.non_increasing().items():
        if not ok:
            logger.warning(f"delta not monotone in L at J={J:g}: {scan.deltas(J)}")
    return scan
