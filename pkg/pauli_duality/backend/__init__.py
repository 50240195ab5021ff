"""Dense oracle backend."""

from pauli_duality.backend.dense import (
    DenseOperator,
    DenseState,
    SpectrumResult,
    apply,
    apply_operator,
    expectation,
    ground,
    local_entropy,
    pauli_sum_sparse,
    spectrum,
    to_dense,
)

__all__ = [
    "DenseOperator",
    "DenseState",
    "SpectrumResult",
    "apply",
    "apply_operator",
    "expectation",
    "ground",
    "local_entropy",
    "pauli_sum_sparse",
    "spectrum",
    "to_dense",
]
