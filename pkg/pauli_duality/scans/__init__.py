"""Parameter scans over the dense backend."""

from pauli_duality.scans.energy import EnergyRow, EnergyScan, duality_energy_scan
from pauli_duality.scans.entropy import EntropyRow, EntropySweep, default_ratios, entropy_sweep

__all__ = [
    "EnergyRow",
    "EnergyScan",
    "duality_energy_scan",
    "EntropyRow",
    "EntropySweep",
    "default_ratios",
    "entropy_sweep",
]
