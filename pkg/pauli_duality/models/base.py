"""Model families, parameter records and chain helpers."""

from __future__ import annotations

from enum import Enum
from typing import Any, Iterator, Mapping

from pydantic import BaseModel, ConfigDict, FiniteFloat, Field, ValidationError, model_validator

from pauli_duality.circuits.circuit import Boundary
from pauli_duality.core.exceptions import ModelError
from pauli_duality.core.pauli import PauliOp, PauliString, PauliSum


class Family(str, Enum):
    ISING = "ising"
    CLUSTER = "cluster"
    CLUSTER_ISING = "cluster_ising"
    ZXZ = "zxz"
    XY_FIELD = "xy_field"

    @property
    def min_sites(self) -> int:
        return 3 if self in (Family.CLUSTER, Family.CLUSTER_ISING, Family.ZXZ) else 2

    @property
    def default_boundary(self) -> Boundary:
        return Boundary.PERIODIC if self is Family.ZXZ else Boundary.OPEN

    @property
    def couplings(self) -> tuple[str, ...]:
        """Coupling names the family actually reads."""
        return _COUPLINGS[self]


_COUPLINGS = {
    Family.ISING: ("J", "B"),
    Family.CLUSTER: ("J", "B"),
    Family.CLUSTER_ISING: ("J1", "J2", "B"),
    Family.ZXZ: ("J", "B"),
    Family.XY_FIELD: ("J1", "J2", "B"),
}


class ModelSpec(BaseModel):
    """Family, chain length, couplings and boundary of one Hamiltonian."""

    model_config = ConfigDict(frozen=True)

    family: Family
    L: int = Field(ge=1)
    J: FiniteFloat = 1.0
    B: FiniteFloat = 1.0
    J1: FiniteFloat = 1.0
    J2: FiniteFloat = 1.0
    boundary: Boundary

    @model_validator(mode="before")
    @classmethod
    def fill_boundary(cls, data: Any) -> Any:
        if isinstance(data, Mapping) and data.get("boundary") is None and "family" in data:
            data = dict(data)
            data["boundary"] = Family(data["family"]).default_boundary
        return data

    @model_validator(mode="after")
    def check_size(self) -> "ModelSpec":
        minimum = self.family.min_sites
        if self.boundary is Boundary.PERIODIC:
            minimum = max(minimum, 3)
        if self.L < minimum:
            raise ValueError(
                f"{self.family.value} with {self.boundary.value} boundary needs L >= {minimum}, got {self.L}"
            )
        return self

    @classmethod
    def of(cls, family: Family | str, L: int, **fields: Any) -> "ModelSpec":
        """Validate a spec, reporting problems as :class:`ModelError`."""
        try:
            return cls(family=family, L=L, **fields)
        except ValidationError as exc:
            raise ModelError(f"invalid model: {exc.errors()[0]['msg']}")

    def couplings(self) -> dict[str, float]:
        return {name: getattr(self, name) for name in self.family.couplings}


# --- chain helpers (0-based sites) ---------------------------------------------


def bonds(L: int, boundary: Boundary) -> Iterator[tuple[int, int]]:
    """Neighbouring pairs (k, k+1); the wrap pair only for periodic chains."""
    last = L if Boundary(boundary) is Boundary.PERIODIC else L - 1
    for k in range(last):
        yield k, (k + 1) % L


def triples(L: int, boundary: Boundary) -> Iterator[tuple[int, int, int]]:
    """Centred triples (k-1, k, k+1); open chains skip the two end sites."""
    if Boundary(boundary) is Boundary.PERIODIC:
        for k in range(L):
            yield (k - 1) % L, k, (k + 1) % L
    else:
        for k in range(1, L - 1):
            yield k - 1, k, k + 1


def term(L: int, ops: Mapping[int, PauliOp | str]) -> PauliString:
    return PauliString.from_sites(L, ops)


def onsite(L: int, op: PauliOp | str, coeff: float, sites: range | None = None) -> PauliSum:
    """``coeff * sum_k op_k`` over ``sites`` (all sites by default)."""
    sites = range(L) if sites is None else sites
    return PauliSum.from_terms(L, ((coeff, term(L, {k: op})) for k in sites))


def pair_sum(L: int, ops: tuple[str, str], coeff: float, pairs) -> PauliSum:
    a, b = ops
    return PauliSum.from_terms(L, ((coeff, term(L, {i: a, j: b})) for i, j in pairs))


def triple_sum(L: int, ops: tuple[str, str, str], coeff: float, centred) -> PauliSum:
    a, b, c = ops
    return PauliSum.from_terms(
        L, ((coeff, term(L, {i: a, j: b, k: c})) for i, j, k in centred)
    )
