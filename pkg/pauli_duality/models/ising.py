"""Transverse-field Ising chain."""

from pauli_duality.circuits.circuit import Boundary
from pauli_duality.core.pauli import PauliSum
from pauli_duality.models.base import bonds, onsite, pair_sum


def ising(L: int, J: float, B: float = 1.0, boundary: Boundary = Boundary.OPEN) -> PauliSum:
    """sum_k J X_k X_{k+1} + sum_k B Z_k."""
    return pair_sum(L, ("X", "X"), J, bonds(L, boundary)) + onsite(L, "Z", B)
