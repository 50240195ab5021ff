"""Single-site entanglement of the ZXZ ground state across B/J."""

from __future__ import annotations

import logging
from typing import Iterable

import numpy as np
from pydantic import BaseModel

from pauli_duality.backend.dense import local_entropy
from pauli_duality.core.pool import run_grid
from pauli_duality.stabilizer.lemma1 import Lemma1Params, remark1_state

logger = logging.getLogger(__name__)

# Rounding slack on the [0, 1] bound for a single-qubit entropy in bits.
BOUND_SLACK = 1e-12


def default_ratios(points: int = 50, low: float = 1e-2, high: float = 1e2) -> list[float]:
    """B/J = 0 followed by a geometric grid."""
    return [0.0, *np.geomspace(low, high, points - 1).tolist()]


class EntropyRow(BaseModel):
    B_over_J: float
    lam: float
    entropy: float


class EntropySweep(BaseModel):
    N: int
    J: float
    rows: list[EntropyRow]

    @property
    def entropies(self) -> list[float]:
        return [row.entropy for row in self.rows]

    @property
    def strictly_decreasing(self) -> bool:
        values = self.entropies
        return all(b < a for a, b in zip(values, values[1:]))

    @property
    def within_bounds(self) -> bool:
        return all(-BOUND_SLACK <= value <= 1.0 + BOUND_SLACK for value in self.entropies)


def _point(N: int, J: float, ratio: float, site: int) -> EntropyRow:
    p = Lemma1Params.of(N, J, ratio * J)
    entropy = local_entropy(remark1_state(p), [site])
    return EntropyRow(B_over_J=ratio, lam=p.lam, entropy=entropy)


def entropy_sweep(
    N: int,
    ratios: Iterable[float] | None = None,
    J: float = 1.0,
    site: int = 0,
    jobs: int = 1,
) -> EntropySweep:
    """Entropy in bits of one site of the ground state, one row per B/J value.

    The ground state is taken as R|1...1>; it equals the normalized T|+...+>
    and stays well conditioned when lam is small.
    """
    ratios = default_ratios() if ratios is None else list(ratios)
    logger.info(f"Entropy sweep N={N} over {len(ratios)} ratios")
    rows = run_grid(lambda r: _point(N, J, r, site), ratios, jobs)
    sweep = EntropySweep(N=N, J=J, rows=rows)
    if not sweep.strictly_decreasing:
        logger.warning("entropy column is not strictly decreasing on this grid")
    return sweep
