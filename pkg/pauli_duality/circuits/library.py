"""Canned gate sequences: the CNOT staircase, CZ layers and the ZXZ transforms."""

from __future__ import annotations

import numpy as np
import scipy.linalg

from pauli_duality.circuits.circuit import Boundary, Circuit
from pauli_duality.circuits.gates import Gate
from pauli_duality.core.exceptions import (
    DegenerateParameterError,
    DimensionError,
    SingularityError,
)
from pauli_duality.core.local_ops import LocalOp


def _require_length(L: int, minimum: int = 2) -> None:
    if L < minimum:
        raise DimensionError(f"Need at least {minimum} sites, got {L}")


def hadamard_layer(L: int, boundary: Boundary = Boundary.OPEN) -> Circuit:
    return Circuit(L, tuple(Gate.hadamard(k) for k in range(L)), boundary)


def fig2_staircase(L: int) -> Circuit:
    """CNOT(1,2), CNOT(2,3), ..., CNOT(L-1,L) followed by H on every site.

    Conjugation maps X_n -> Z_1 ... Z_n and Z_n -> X_n X_{n+1}, with Z_L -> X_L.
    """
    _require_length(L)
    cnots = tuple(Gate.cnot(k, k + 1) for k in range(L - 1))
    return Circuit(L, cnots) + hadamard_layer(L)


def cz_pairs(L: int, boundary: Boundary) -> list[tuple[int, int]]:
    frame = Circuit(L, boundary=boundary)
    # for L = 2 the wrap-around pair coincides with (0, 1)
    bonds = L if frame.boundary is Boundary.PERIODIC and L > 2 else L - 1
    return [(k, frame.site(k + 1)) for k in range(bonds)]


def cz_layer(L: int, boundary: Boundary = Boundary.OPEN) -> Circuit:
    """Controlled phase on every neighbouring pair: X_k -> Z_{k-1} X_k Z_{k+1}, Z_k fixed."""
    _require_length(L)
    return Circuit(L, tuple(Gate.cz(a, b) for a, b in cz_pairs(L, boundary)), boundary)


def cluster_self_dual(L: int, boundary: Boundary = Boundary.OPEN) -> Circuit:
    """Hadamard layer, CZ layer, Hadamard layer.

    In the bulk this swaps X_{k-1} Z_k X_{k+1} <-> Z_k and fixes X_k X_{k+1}.
    """
    _require_length(L)
    return hadamard_layer(L, boundary) + cz_layer(L, boundary) + hadamard_layer(L, boundary)


def _sqrt(value: float) -> complex:
    return np.sqrt(complex(value)) if value < 0 else complex(np.sqrt(value))


def lambda_transform(lam: float) -> tuple[LocalOp, LocalOp]:
    """diag(lam^1/2, lam^-1/2) and its inverse (principal branch for lam < 0)."""
    if lam == 0:
        raise SingularityError("lambda = 0 makes diag(lambda^1/2, lambda^-1/2) singular")
    root = _sqrt(lam)
    return (
        LocalOp.from_entries(root, 0, 0, 1 / root),
        LocalOp.from_entries(1 / root, 0, 0, root),
    )


def lemma1_T(L: int, lam: float) -> Circuit:
    """Periodic CZ layer followed by diag(lam^1/2, lam^-1/2) on every site.

    ``conjugate(lemma1_T(L, lam), H)`` is the transformed ``T^-1 H T``.
    """
    _require_length(L)
    op, inverse = lambda_transform(lam)
    local = Circuit(L, tuple(Gate.local(k, op, inverse) for k in range(L)), Boundary.PERIODIC)
    return cz_layer(L, Boundary.PERIODIC) + local


def single_site_block(J: float, B: float) -> np.ndarray:
    """The 2x2 block (B, -J; -J, -B)."""
    return np.array([[B, -J], [-J, -B]], dtype=complex)


def remark1_unitary(J: float, B: float) -> LocalOp:
    """Unitary U with U^dagger (B, -J; -J, -B) U diagonal, smaller eigenvalue on |1>."""
    if J == 0 and B == 0:
        raise DegenerateParameterError("(J, B) = (0, 0) leaves the block without a spectrum")
    _, vectors = scipy.linalg.eigh(single_site_block(J, B))
    # eigh sorts ascending: column 0 belongs to the smaller eigenvalue
    return LocalOp(np.column_stack([vectors[:, 1], vectors[:, 0]]))


def remark1_R(L: int, J: float, B: float) -> Circuit:
    """Local unitaries U_j on every site followed by the periodic CZ layer."""
    _require_length(L)
    U = remark1_unitary(J, B)
    local = Circuit(L, tuple(Gate.local(k, U, U.adjoint()) for k in range(L)), Boundary.PERIODIC)
    return local + cz_layer(L, Boundary.PERIODIC)
