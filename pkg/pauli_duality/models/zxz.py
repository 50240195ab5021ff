"""ZXZ chain: sum_k [-J Z_{k-1} X_k Z_{k+1} + B Z_k]."""

from pauli_duality.circuits.circuit import Boundary
from pauli_duality.core.pauli import PauliSum
from pauli_duality.models.base import onsite, triple_sum, triples


def zxz(N: int, J: float, B: float, boundary: Boundary = Boundary.PERIODIC) -> PauliSum:
    # -J on the three-body term, +B on the field; opposite sign to the cluster model
    return triple_sum(N, ("Z", "X", "Z"), -J, triples(N, boundary)) + onsite(N, "Z", B)
