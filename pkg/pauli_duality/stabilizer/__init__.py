"""Generalized stabilizer states and the exactly solvable ZXZ chain."""

from pauli_duality.stabilizer.fixed_point import eigen_residuals, fixed_state
from pauli_duality.stabilizer.generators import GeneratorSet
from pauli_duality.stabilizer.lemma1 import (
    Lemma1Params,
    Lemma1Report,
    lemma1_generators,
    lemma1_state,
    remark1_state,
    verify_lemma1,
)
from pauli_duality.stabilizer.spectrum import zxz_spectrum
from pauli_duality.stabilizer.two_qubit import (
    ghz_class_generators,
    local_conjugation,
    two_qubit_genstab,
)

__all__ = [
    "eigen_residuals",
    "fixed_state",
    "GeneratorSet",
    "Lemma1Params",
    "Lemma1Report",
    "lemma1_generators",
    "lemma1_state",
    "remark1_state",
    "verify_lemma1",
    "zxz_spectrum",
    "ghz_class_generators",
    "local_conjugation",
    "two_qubit_genstab",
]
