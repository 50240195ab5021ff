"""Generalized stabilizer descriptions from local linear maps.

Any pure two-qubit state is (A (x) B) applied to a maximally entangled state,
so conjugating that state's stabilizers by A (x) B gives its generators. The
same construction on GHZ stabilizers covers the three-qubit GHZ class.
"""

from __future__ import annotations

import logging
from typing import Sequence

import numpy as np
import scipy.linalg

from pauli_duality.backend.dense import DenseState
from pauli_duality.core.exceptions import DimensionError
from pauli_duality.core.local_ops import LocalOp, OperatorString
from pauli_duality.stabilizer.generators import GeneratorSet

logger = logging.getLogger(__name__)

# Second Schmidt value at or below this counts as a product state.
SCHMIDT_TOL = 1e-8

BELL_REFERENCE = "(|00>+|11>)/sqrt2"
BELL_STABILIZERS = ("XX", "ZZ")
GHZ_STABILIZERS = ("XXX", "ZZI", "IZZ")


def local_conjugation(stabilizers: GeneratorSet, maps: Sequence[LocalOp]) -> GeneratorSet:
    """Conjugate every generator by the invertible product of ``maps`` (one per site)."""
    if len(maps) != stabilizers.L:
        raise DimensionError(f"{len(maps)} local maps for {stabilizers.L} sites")
    M = OperatorString(stabilizers.L, dict(enumerate(maps)))
    return stabilizers.conjugated_by(M)


def _reflection(vector: np.ndarray) -> LocalOp:
    """2|a><a| - 1: +1 on ``vector``, -1 on its orthogonal complement."""
    a = vector / np.linalg.norm(vector)
    return LocalOp(2 * np.outer(a, a.conj()) - np.eye(2))


def two_qubit_genstab(state: DenseState) -> GeneratorSet:
    """Generators whose joint +1 eigenstate is the given two-qubit state.

    Schmidt rank 2: psi = (A (x) B)(|00> + |11>)/sqrt2 with A = sqrt2 U diag(s),
    B = Vh^T from the SVD of the amplitude matrix, and generators
    (A X A^-1)(B X B^-1), (A Z A^-1)(B Z B^-1). Schmidt rank 1: one reflection
    per site that fixes the local factor.
    """
    if state.L != 2:
        raise DimensionError(f"two-qubit state required, got L={state.L}")
    state.require_normalized()
    amplitudes = state.vector.reshape(2, 2)
    U, s, Vh = scipy.linalg.svd(amplitudes)
    if s[1] <= SCHMIDT_TOL:
        logger.debug("Product input: using local reflections")
        ops = (
            OperatorString(2, {0: _reflection(U[:, 0])}),
            OperatorString(2, {1: _reflection(Vh[0, :])}),
        )
        return GeneratorSet(2, ops, label="product")
    A = LocalOp(np.sqrt(2) * U @ np.diag(s))
    B = LocalOp(Vh.T)
    reference = GeneratorSet.from_paulis(BELL_STABILIZERS, label=BELL_REFERENCE)
    return local_conjugation(reference, [A, B])


def ghz_class_generators(A: LocalOp, B: LocalOp, C: LocalOp) -> GeneratorSet:
    """Generators of (A (x) B (x) C)(|000> + |111>)/sqrt2."""
    reference = GeneratorSet.from_paulis(GHZ_STABILIZERS, label="ghz")
    return local_conjugation(reference, [A, B, C])
