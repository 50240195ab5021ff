"""Family -> builder dispatch."""

from __future__ import annotations

import logging
from typing import Callable

from pauli_duality.core.pauli import PauliSum
from pauli_duality.models.base import Family, ModelSpec
from pauli_duality.models.cluster import cluster, cluster_ising
from pauli_duality.models.ising import ising
from pauli_duality.models.xy import xy_field
from pauli_duality.models.zxz import zxz

logger = logging.getLogger(__name__)

Builder = Callable[[ModelSpec], PauliSum]

BUILDERS: dict[Family, Builder] = {
    Family.ISING: lambda s: ising(s.L, s.J, s.B, s.boundary),
    Family.CLUSTER: lambda s: cluster(s.L, s.J, s.B, s.boundary),
    Family.CLUSTER_ISING: lambda s: cluster_ising(s.L, s.J1, s.J2, s.B, s.boundary),
    Family.ZXZ: lambda s: zxz(s.L, s.J, s.B, s.boundary),
    Family.XY_FIELD: lambda s: xy_field(s.L, s.J1, s.J2, s.B, s.boundary),
}


def get_builder(family: Family | str) -> Builder:
    return BUILDERS[Family(family)]


def build(spec: ModelSpec) -> PauliSum:
    """Canonical Pauli sum of the Hamiltonian described by ``spec``."""
    h = get_builder(spec.family)(spec)
    logger.debug(f"Built {spec.family.value} L={spec.L} ({len(h)} terms)")
    return h
