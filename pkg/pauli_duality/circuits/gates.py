"""Gates and their Heisenberg-picture action on Pauli strings."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property

import numpy as np

from pauli_duality.core.exceptions import DimensionError, ParseError, SingularityError
from pauli_duality.core.local_ops import INVERSE_TOL, LocalOp
from pauli_duality.core.pauli import PauliOp, PauliString

_SQRT2_INV = 1 / np.sqrt(2)

HADAMARD = np.array([[1, 1], [1, -1]], dtype=complex) * _SQRT2_INV
CNOT = np.array(
    [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex
)
CZ = np.diag([1, 1, 1, -1]).astype(complex)


class GateKind(str, Enum):
    CNOT = "CNOT"
    H = "H"
    CZ = "CZ"
    LOCAL = "LOCAL"

    @property
    def arity(self) -> int:
        return 2 if self in (GateKind.CNOT, GateKind.CZ) else 1


@dataclass(frozen=True, eq=False)
class Gate:
    """One- or two-qubit gate.

    Clifford gates (CNOT, H, CZ) are self-inverse and rewrite Pauli strings
    exactly. LOCAL gates carry an arbitrary invertible 2x2 operator together
    with its explicit inverse.
    """

    kind: GateKind
    sites: tuple[int, ...]
    op: LocalOp | None = None
    inverse_op: LocalOp | None = None

    def __post_init__(self) -> None:
        kind = GateKind(self.kind)
        object.__setattr__(self, "kind", kind)
        sites = tuple(int(s) for s in self.sites)
        if len(sites) != kind.arity:
            raise DimensionError(f"{kind.value} acts on {kind.arity} site(s), got {sites}")
        if len(set(sites)) != len(sites):
            raise DimensionError(f"{kind.value} needs distinct sites, got {sites}")
        if kind is GateKind.CZ:
            sites = tuple(sorted(sites))
        object.__setattr__(self, "sites", sites)
        if kind is GateKind.LOCAL:
            if self.op is None:
                raise SingularityError("LOCAL gate needs an operator")
            inverse = self.inverse_op if self.inverse_op is not None else self.op.inverse()
            if not np.allclose(self.op.matrix @ inverse.matrix, np.eye(2), atol=INVERSE_TOL, rtol=0):
                raise SingularityError("LOCAL gate inverse does not satisfy M @ M^-1 = I")
            object.__setattr__(self, "inverse_op", inverse)

    # constructors -------------------------------------------------------------

    @classmethod
    def cnot(cls, control: int, target: int) -> "Gate":
        return cls(GateKind.CNOT, (control, target))

    @classmethod
    def hadamard(cls, site: int) -> "Gate":
        return cls(GateKind.H, (site,))

    @classmethod
    def cz(cls, a: int, b: int) -> "Gate":
        return cls(GateKind.CZ, (a, b))

    @classmethod
    def local(cls, site: int, op: LocalOp, inverse: LocalOp | None = None) -> "Gate":
        return cls(GateKind.LOCAL, (site,), op, inverse)

    # properties ---------------------------------------------------------------

    @property
    def is_clifford(self) -> bool:
        return self.kind is not GateKind.LOCAL

    @property
    def unitary(self) -> bool:
        return self.is_clifford or self.op.is_unitary()

    @property
    def matrix(self) -> np.ndarray:
        """Gate matrix in the order of ``sites`` (control first for CNOT)."""
        if self.kind is GateKind.H:
            return HADAMARD
        if self.kind is GateKind.CNOT:
            return CNOT
        if self.kind is GateKind.CZ:
            return CZ
        return self.op.matrix

    def inverse(self) -> "Gate":
        if self.is_clifford:
            return self
        return Gate.local(self.sites[0], self.inverse_op, self.op)

    def check_sites(self, L: int) -> None:
        for site in self.sites:
            if not 0 <= site < L:
                raise DimensionError(f"{self.kind.value} site {site + 1} outside chain of length {L}")

    # conjugation --------------------------------------------------------------

    def _clifford_images(self, L: int) -> dict[int, tuple[PauliString, PauliString]]:
        """Images of (X_k, Z_k) under P -> G P G for each gate site k."""
        x = lambda k: PauliString.single(L, k, PauliOp.X)  # noqa: E731
        z = lambda k: PauliString.single(L, k, PauliOp.Z)  # noqa: E731
        if self.kind is GateKind.H:
            (k,) = self.sites
            return {k: (z(k), x(k))}
        if self.kind is GateKind.CNOT:
            c, t = self.sites
            return {
                c: (x(c) * x(t), z(c)),
                t: (x(t), z(c) * z(t)),
            }
        a, b = self.sites
        return {
            a: (x(a) * z(b), z(a)),
            b: (z(a) * x(b), z(b)),
        }

    @cached_property
    def _local_images(self) -> dict[PauliOp, dict[PauliOp, complex]]:
        """Pauli coefficients of M^-1 P M for each single-site Pauli P."""
        images = {}
        for pauli in PauliOp:
            conjugated = self.inverse_op @ LocalOp.from_pauli(pauli) @ self.op
            images[pauli] = {
                p: c for p, c in conjugated.pauli_coefficients().items() if c != 0
            }
        return images

    def conjugate_string(self, string: PauliString) -> list[tuple[complex, PauliString]]:
        """Expand ``G^-1 string G`` as (coefficient, Pauli string) pairs."""
        L = string.L
        self.check_sites(L)
        mask = 0
        for site in self.sites:
            mask |= 1 << site
        rest = PauliString(L, string.x & ~mask, string.z & ~mask, string.phase)

        if self.is_clifford:
            images = self._clifford_images(L)
            result = rest
            for site in self.sites:
                bx, bz = (string.x >> site) & 1, (string.z >> site) & 1
                factor = PauliString(L, 0, 0, bx & bz)
                if bx:
                    factor = factor * images[site][0]
                if bz:
                    factor = factor * images[site][1]
                result = result * factor
            return [(1.0, result)]

        (site,) = self.sites
        pauli = string.op(site)
        return [
            (coeff, rest * PauliString.single(L, site, image))
            for image, coeff in self._local_images[pauli].items()
        ]

    # text form ----------------------------------------------------------------

    def to_text(self) -> str:
        """One line, 1-based sites (``LOCAL k`` followed by re/im of a, b, c, d)."""
        sites = " ".join(str(s + 1) for s in self.sites)
        if self.is_clifford:
            return f"{self.kind.value} {sites}"
        numbers = " ".join(f"{v.real!r} {v.imag!r}" for v in self.op.entries)
        return f"{self.kind.value} {sites} {numbers}"

    @classmethod
    def from_text(cls, line: str) -> "Gate":
        parts = line.split()
        if not parts:
            raise ParseError("empty gate line")
        try:
            kind = GateKind(parts[0].upper())
        except ValueError:
            raise ParseError(f"unknown gate {parts[0]!r}")
        expected = 1 + kind.arity + (8 if kind is GateKind.LOCAL else 0)
        if len(parts) != expected:
            raise ParseError(f"{kind.value} expects {expected - 1} fields, got {line!r}")
        try:
            sites = tuple(int(p) - 1 for p in parts[1:1 + kind.arity])
            numbers = [float(p) for p in parts[1 + kind.arity:]]
        except ValueError:
            raise ParseError(f"bad number in gate line {line!r}")
        if any(s < 0 for s in sites):
            raise ParseError(f"sites are 1-based, got {line!r}")
        if kind is GateKind.LOCAL:
            entries = [complex(numbers[i], numbers[i + 1]) for i in range(0, 8, 2)]
            return cls.local(sites[0], LocalOp.from_entries(*entries))
        return cls(kind, sites)

    def __repr__(self) -> str:
        return f"Gate({self.to_text()})"
