"""Joint +1 eigenstate of a generator set."""

from __future__ import annotations

import logging

import numpy as np

from pauli_duality.backend.dense import DenseState, apply_operator
from pauli_duality.core.exceptions import FixedPointError
from pauli_duality.core.local_ops import joint_fixed_space
from pauli_duality.stabilizer.generators import GeneratorSet

logger = logging.getLogger(__name__)


def fixed_state(g: GeneratorSet, tol: float | None = None) -> DenseState:
    """Normalized |psi> with g_k|psi> = |psi> for all k.

    The state is the kernel of sum_k (g_k - 1)^dagger (g_k - 1); its global
    phase is fixed by making the largest amplitude real and positive.
    """
    basis = joint_fixed_space(g.generators, g.L, tol)
    dim = basis.shape[1]
    if dim == 0:
        raise FixedPointError(f"no joint +1 eigenvector for {g.label or 'generator set'}")
    if dim > 1:
        raise FixedPointError(f"fixed point not unique: joint +1 eigenspace has dimension {dim}")
    vector = basis[:, 0]
    pivot = vector[np.argmax(np.abs(vector))]
    vector = vector * (abs(pivot) / pivot)
    logger.debug(f"Fixed state of {g.L}-site set {g.label!r} found")
    return DenseState(vector / np.linalg.norm(vector), normalized=True)


def eigen_residuals(g: GeneratorSet, state: DenseState) -> list[float]:
    """||g_k psi - psi|| for every generator."""
    return [
        float(np.linalg.norm(apply_operator(op, state).vector - state.vector))
        for op in g.generators
    ]
