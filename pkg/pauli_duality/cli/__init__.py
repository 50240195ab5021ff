"""Command-line driver."""

from pauli_duality.cli.router import PauliDualityApp

__all__ = ["PauliDualityApp"]
