"""Arbitrary 2x2 local operators, their tensor-product strings and Pauli expansion.

Generalized stabilizer generators are tensor products of possibly
non-Hermitian, possibly non-unitary single-site operators, so commutation and
independence are decided numerically (Pauli-sum algebra or dense matrices),
never through a finite group structure.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from functools import reduce
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

import numpy as np
import scipy.linalg

from pauli_duality.config.settings import settings
from pauli_duality.core.exceptions import (
    DimensionError,
    ParseError,
    SingularityError,
    SizeLimitError,
)
from pauli_duality.core.pauli import PauliOp, PauliString, PauliSum

logger = logging.getLogger(__name__)

PAULI_MATRICES: Mapping[PauliOp, np.ndarray] = MappingProxyType(
    {
        PauliOp.I: np.eye(2, dtype=complex),
        PauliOp.X: np.array([[0, 1], [1, 0]], dtype=complex),
        PauliOp.Y: np.array([[0, -1j], [1j, 0]], dtype=complex),
        PauliOp.Z: np.array([[1, 0], [0, -1]], dtype=complex),
    }
)

# Tolerance for invertibility and for M @ M^-1 == I of LOCAL gates.
INVERSE_TOL = 1e-12


def _frozen(matrix: np.ndarray) -> np.ndarray:
    out = np.array(matrix, dtype=complex, copy=True)
    out.setflags(write=False)
    return out


@dataclass(frozen=True, eq=False)
class LocalOp:
    """Complex 2x2 operator (row-major)."""

    matrix: np.ndarray

    def __post_init__(self) -> None:
        matrix = np.asarray(self.matrix, dtype=complex)
        if matrix.shape != (2, 2):
            raise DimensionError(f"Local operator must be 2x2, got shape {matrix.shape}")
        object.__setattr__(self, "matrix", _frozen(matrix))

    @classmethod
    def from_entries(cls, a: complex, b: complex, c: complex, d: complex) -> "LocalOp":
        return cls(np.array([[a, b], [c, d]], dtype=complex))

    @classmethod
    def from_pauli(cls, op: PauliOp | str) -> "LocalOp":
        return cls(PAULI_MATRICES[PauliOp(op)])

    @classmethod
    def identity(cls) -> "LocalOp":
        return cls(PAULI_MATRICES[PauliOp.I])

    @property
    def entries(self) -> tuple[complex, complex, complex, complex]:
        return tuple(complex(v) for v in self.matrix.ravel())  # type: ignore[return-value]

    @property
    def determinant(self) -> complex:
        a, b, c, d = self.entries
        return a * d - b * c

    def is_invertible(self, tol: float = INVERSE_TOL) -> bool:
        return abs(self.determinant) > tol * max(1.0, float(np.abs(self.matrix).max()) ** 2)

    def inverse(self) -> "LocalOp":
        if not self.is_invertible():
            raise SingularityError(f"Local operator is singular (det={self.determinant:g})")
        a, b, c, d = self.entries
        det = self.determinant
        return LocalOp.from_entries(d / det, -b / det, -c / det, a / det)

    def adjoint(self) -> "LocalOp":
        return LocalOp(self.matrix.conj().T)

    def is_hermitian(self, tol: float = 1e-12) -> bool:
        return bool(np.allclose(self.matrix, self.matrix.conj().T, atol=tol, rtol=0))

    def is_unitary(self, tol: float = 1e-12) -> bool:
        return bool(
            np.allclose(self.matrix @ self.matrix.conj().T, np.eye(2), atol=tol, rtol=0)
        )

    def is_identity(self, tol: float = 0.0) -> bool:
        return bool(np.allclose(self.matrix, np.eye(2), atol=tol, rtol=0))

    def allclose(self, other: "LocalOp", tol: float = 1e-12) -> bool:
        return bool(np.allclose(self.matrix, other.matrix, atol=tol, rtol=0))

    def pauli_coefficients(self) -> dict[PauliOp, complex]:
        """Coefficients with M = cI*I + cX*X + cY*Y + cZ*Z."""
        a, b, c, d = self.entries
        return {
            PauliOp.I: (a + d) / 2,
            PauliOp.X: (b + c) / 2,
            PauliOp.Y: 1j * (b - c) / 2,
            PauliOp.Z: (a - d) / 2,
        }

    def as_pauli(self, tol: float = 0.0) -> PauliOp | None:
        """The named Pauli equal to this operator, if any."""
        for op, matrix in PAULI_MATRICES.items():
            if np.allclose(self.matrix, matrix, atol=tol, rtol=0):
                return op
        return None

    def __matmul__(self, other: "LocalOp") -> "LocalOp":
        if not isinstance(other, LocalOp):
            return NotImplemented
        return LocalOp(self.matrix @ other.matrix)

    def __repr__(self) -> str:
        a, b, c, d = self.entries
        return f"LocalOp([[{a:g}, {b:g}], [{c:g}, {d:g}]])"


@dataclass(frozen=True, eq=False)
class OperatorString:
    """Site-indexed tensor product of local operators times a global scale.

    Sites missing from ``ops`` carry the identity.
    """

    L: int
    ops: Mapping[int, LocalOp] = field(default_factory=dict)
    scale: complex = 1.0

    def __post_init__(self) -> None:
        if self.L <= 0:
            raise DimensionError(f"Operator string length must be positive, got {self.L}")
        for site in self.ops:
            if not 0 <= site < self.L:
                raise DimensionError(f"Site {site} outside chain of length {self.L}")
        object.__setattr__(self, "ops", MappingProxyType(dict(sorted(self.ops.items()))))
        object.__setattr__(self, "scale", complex(self.scale))

    @classmethod
    def from_paulis(
        cls, L: int, ops: Mapping[int, PauliOp | str], scale: complex = 1.0
    ) -> "OperatorString":
        return cls(L, {site: LocalOp.from_pauli(op) for site, op in ops.items()}, scale)

    @classmethod
    def from_pauli_string(cls, string: PauliString) -> "OperatorString":
        ops = {site: string.op(site) for site in string.support}
        return cls.from_paulis(string.L, ops, string.coefficient)

    @classmethod
    def identity(cls, L: int) -> "OperatorString":
        return cls(L)

    def local(self, site: int) -> LocalOp:
        return self.ops.get(site) or LocalOp.identity()

    @property
    def non_identity_sites(self) -> tuple[int, ...]:
        return tuple(site for site, op in self.ops.items() if not op.is_identity())

    def __matmul__(self, other: "OperatorString") -> "OperatorString":
        if not isinstance(other, OperatorString):
            return NotImplemented
        _check_length(self.L, other.L)
        sites = set(self.ops) | set(other.ops)
        return OperatorString(
            self.L,
            {site: self.local(site) @ other.local(site) for site in sites},
            self.scale * other.scale,
        )

    def inverse(self) -> "OperatorString":
        if self.scale == 0:
            raise SingularityError("Operator string has zero scale")
        return OperatorString(
            self.L, {site: op.inverse() for site, op in self.ops.items()}, 1 / self.scale
        )

    def adjoint(self) -> "OperatorString":
        return OperatorString(
            self.L, {site: op.adjoint() for site, op in self.ops.items()}, self.scale.conjugate()
        )

    def conjugated_by(self, other: "OperatorString") -> "OperatorString":
        """``other @ self @ other^-1``."""
        return other @ self @ other.inverse()

    def to_matrix(self) -> np.ndarray:
        """Dense 2^L x 2^L Kronecker realization (site 0 is the leading factor)."""
        limit = settings.dense_limit
        if self.L > limit:
            raise SizeLimitError(f"L={self.L} exceeds dense limit {limit}")
        factors = [self.local(site).matrix for site in range(self.L)]
        return self.scale * reduce(np.kron, factors)

    def to_text(self) -> str:
        tokens = []
        if self.scale != 1:
            tokens.append(f"scale={self.scale!r}")
        for site in range(self.L):
            op = self.local(site)
            named = op.as_pauli()
            if named is not None:
                tokens.append(named.value)
            else:
                tokens.append(",".join(repr(v) for v in op.entries))
        return " ".join(tokens)

    @classmethod
    def from_text(cls, line: str) -> "OperatorString":
        """Parse whitespace-separated site tokens.

        A token is ``I``, ``X``, ``Y``, ``Z`` or four comma-separated complex
        entries ``a,b,c,d``; an optional leading ``scale=<complex>`` token sets
        the global scale.
        """
        tokens = line.split()
        scale = 1 + 0j
        if tokens and tokens[0].startswith("scale="):
            scale = _parse_complex(tokens.pop(0)[len("scale="):])
        if not tokens:
            raise ParseError(f"operator string without sites: {line!r}")
        ops: dict[int, LocalOp] = {}
        for site, token in enumerate(tokens):
            if token.upper() in PauliOp.__members__:
                op = LocalOp.from_pauli(token.upper())
            else:
                entries = token.split(",")
                if len(entries) != 4:
                    raise ParseError(f"site {site + 1}: expected a Pauli name or 4 entries, got {token!r}")
                op = LocalOp.from_entries(*(_parse_complex(e) for e in entries))
            if not op.is_identity():
                ops[site] = op
        return cls(len(tokens), ops, scale)

    def __repr__(self) -> str:
        return f"OperatorString(L={self.L}, {self.to_text()!r})"


def _parse_complex(text: str) -> complex:
    try:
        return complex(text.replace("i", "j").replace(" ", ""))
    except ValueError:
        raise ParseError(f"bad complex number {text!r}")


def _check_length(a: int, b: int) -> None:
    if a != b:
        raise DimensionError(f"Length mismatch: {a} vs {b}")


def expand(op: OperatorString) -> PauliSum:
    """Pauli-sum expansion of an operator string (at most 4^k terms for k non-identity sites)."""
    per_site = []
    for site in op.non_identity_sites:
        coeffs = [
            (pauli, c)
            for pauli, c in op.local(site).pauli_coefficients().items()
            if c != 0
        ]
        per_site.append((site, coeffs))
    acc: dict[tuple[int, int], complex] = {}
    for choice in itertools.product(*(coeffs for _, coeffs in per_site)):
        x = z = 0
        coeff = op.scale
        for (site, _), (pauli, c) in zip(per_site, choice):
            bx, bz = pauli.bits
            x |= bx << site
            z |= bz << site
            coeff *= c
        acc[(x, z)] = acc.get((x, z), 0j) + coeff
    return PauliSum(op.L, acc)


def commutator_is_zero(
    a: OperatorString, b: OperatorString, tol: float | None = None
) -> bool:
    """True iff every coefficient of [expand(a), expand(b)] is at most ``tol``."""
    tol = settings.commutator_tol if tol is None else tol
    _check_length(a.L, b.L)
    ea, eb = expand(a), expand(b)
    return (ea * eb - eb * ea).max_abs_coefficient() <= tol


def fixed_space_operator(gens: Sequence[OperatorString], L: int) -> np.ndarray:
    """Positive semidefinite sum of (g - 1)^dagger (g - 1); its kernel is the joint +1 eigenspace."""
    dim = 1 << L
    K = np.zeros((dim, dim), dtype=complex)
    eye = np.eye(dim, dtype=complex)
    for g in gens:
        _check_length(L, g.L)
        D = g.to_matrix() - eye
        K += D.conj().T @ D
    return K


def joint_fixed_space(
    gens: Sequence[OperatorString], L: int, tol: float | None = None
) -> np.ndarray:
    """Orthonormal basis (columns) of the joint +1 eigenspace.

    The null-space cut is relative: eigenvalues of K at or below
    ``tol * max(1, ||K||)`` count as zero.
    """
    tol = settings.nullspace_tol if tol is None else tol
    if L > settings.dense_limit:
        raise SizeLimitError(f"L={L} exceeds dense limit {settings.dense_limit}")
    if not gens:
        return np.eye(1 << L, dtype=complex)
    K = fixed_space_operator(gens, L)
    values, vectors = scipy.linalg.eigh(K)
    cut = tol * max(1.0, float(values[-1]))
    return vectors[:, values <= cut]


def fixed_space_dimension(
    gens: Sequence[OperatorString], L: int, tol: float | None = None
) -> int:
    return joint_fixed_space(gens, L, tol).shape[1]


def fixed_space_chain(gens: Sequence[OperatorString], tol: float | None = None) -> list[int]:
    """Joint fixed-space dimensions as generators are added one at a time (e.g. 4 -> 2 -> 1)."""
    if not gens:
        return []
    L = gens[0].L
    return [fixed_space_dimension(gens[:n], L, tol) for n in range(len(gens) + 1)]


def independence_check(gens: Iterable[OperatorString], tol: float | None = None) -> bool:
    """Removing any single generator must strictly enlarge the joint +1 eigenspace."""
    gens = list(gens)
    if not gens:
        return True
    L = gens[0].L
    for g in gens:
        _check_length(L, g.L)
    if len(gens) > L:
        raise DimensionError(f"{len(gens)} generators on {L} sites")
    full = fixed_space_dimension(gens, L, tol)
    for index in range(len(gens)):
        rest = gens[:index] + gens[index + 1:]
        if fixed_space_dimension(rest, L, tol) <= full:
            logger.debug(f"Generator {index + 1} is dependent on the others")
            return False
    return True
