"""pauli-duality: Pauli-sum algebra, duality circuits and generalized stabilizer states."""

__version__ = "0.1.0"
