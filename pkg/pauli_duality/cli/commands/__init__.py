"""One module per subcommand."""

from pauli_duality.cli.commands.energy_scan import EnergyScanCommand
from pauli_duality.cli.commands.entropy_sweep import EntropySweepCommand
from pauli_duality.cli.commands.fixed_state import FixedStateCommand
from pauli_duality.cli.commands.solve_zxz import SolveZXZCommand
from pauli_duality.cli.commands.verify_duality import VerifyDualityCommand

__all__ = ["EnergyScanCommand", "EntropySweepCommand", "FixedStateCommand", "SolveZXZCommand", "VerifyDualityCommand"]
