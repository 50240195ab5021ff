"""Cluster Hamiltonian, with and without an Ising coupling."""

from pauli_duality.circuits.circuit import Boundary
from pauli_duality.core.pauli import PauliSum
from pauli_duality.models.base import bonds, onsite, pair_sum, triple_sum, triples


def cluster(L: int, J: float, B: float, boundary: Boundary = Boundary.OPEN) -> PauliSum:
    """sum_k J X_{k-1} Z_k X_{k+1} + sum_k B Z_k.

    Open chains carry the three-body term on sites 2..L-1 only.
    """
    return triple_sum(L, ("X", "Z", "X"), J, triples(L, boundary)) + onsite(L, "Z", B)


def cluster_ising(
    L: int, J1: float, J2: float, B: float, boundary: Boundary = Boundary.OPEN
) -> PauliSum:
    """Cluster Hamiltonian (coupling J1) plus sum_k J2 X_k X_{k+1}."""
    return cluster(L, J1, B, boundary) + pair_sum(L, ("X", "X"), J2, bonds(L, boundary))
