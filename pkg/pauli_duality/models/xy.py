"""Anisotropic XY chain in a transverse field."""

from pauli_duality.circuits.circuit import Boundary
from pauli_duality.core.pauli import PauliSum
from pauli_duality.models.base import bonds, onsite, pair_sum


def xy_field(
    L: int, J1: float, J2: float, B: float, boundary: Boundary = Boundary.OPEN
) -> PauliSum:
    """sum_k [B X_k X_{k+1} - J1 Y_k Y_{k+1}] + sum_k J2 Z_k.

    This is the bulk form the cluster and cluster+Ising chains are mapped onto;
    J2 = 0 gives the plain anisotropic XY chain.
    """
    pairs = list(bonds(L, boundary))
    return (
        pair_sum(L, ("X", "X"), B, pairs)
        + pair_sum(L, ("Y", "Y"), -J1, pairs)
        + onsite(L, "Z", J2)
    )
