"""Hamiltonian families, builders and duality checks."""

from pauli_duality.models.base import Family, ModelSpec
from pauli_duality.models.cluster import cluster, cluster_ising
from pauli_duality.models.duality import (
    DualityCheck,
    check_duality,
    cluster_dual_degeneracy,
    cluster_dual_target,
    cluster_ising_dual_target,
    duality_residual,
    ising_dual_target,
    ising_self_dual_form,
    self_duality_residual,
)
from pauli_duality.models.ising import ising
from pauli_duality.models.registry import build, get_builder
from pauli_duality.models.xy import xy_field
from pauli_duality.models.zxz import zxz

__all__ = [
    "Family",
    "ModelSpec",
    "cluster",
    "cluster_ising",
    "DualityCheck",
    "check_duality",
    "cluster_dual_degeneracy",
    "cluster_dual_target",
    "cluster_ising_dual_target",
    "duality_residual",
    "ising_dual_target",
    "ising_self_dual_form",
    "self_duality_residual",
    "ising",
    "build",
    "get_builder",
    "xy_field",
    "zxz",
]
