"""Core algebra: Pauli strings and sums, local operators, errors."""

from pauli_duality.core.exceptions import PauliDualityError
from pauli_duality.core.local_ops import (
    LocalOp,
    OperatorString,
    commutator_is_zero,
    expand,
    independence_check,
)
from pauli_duality.core.pauli import (
    PauliOp,
    PauliString,
    PauliSum,
    equal,
    mul,
    sum_add,
    sum_mul,
    sum_scale,
)

__all__ = [
    "PauliDualityError",
    "LocalOp",
    "OperatorString",
    "commutator_is_zero",
    "expand",
    "independence_check",
    "PauliOp",
    "PauliString",
    "PauliSum",
    "equal",
    "mul",
    "sum_add",
    "sum_mul",
    "sum_scale",
]
