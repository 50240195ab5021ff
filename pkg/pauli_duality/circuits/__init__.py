"""Gate layers, circuits and canned duality sequences."""

from pauli_duality.circuits.circuit import Boundary, Circuit, conjugate
from pauli_duality.circuits.gates import Gate, GateKind
from pauli_duality.circuits.library import (
    cluster_self_dual,
    cz_layer,
    fig2_staircase,
    hadamard_layer,
    lemma1_T,
    remark1_R,
    remark1_unitary,
)

__all__ = [
    "Boundary",
    "Circuit",
    "conjugate",
    "Gate",
    "GateKind",
    "cluster_self_dual",
    "cz_layer",
    "fig2_staircase",
    "hadamard_layer",
    "lemma1_T",
    "remark1_R",
    "remark1_unitary",
]
