"""Dense oracle: 2^L matrices and state vectors.

Site 0 is the leading Kronecker factor, i.e. the most significant bit of a
basis-state index. Full matrices are limited to ``settings.dense_limit`` sites,
state vectors and sparse extremal solves to ``settings.state_limit``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import singledispatch
from typing import Iterable, Sequence

import numpy as np
import scipy.linalg
import scipy.sparse
import scipy.sparse.linalg

from pauli_duality.circuits.circuit import Circuit
from pauli_duality.circuits.gates import Gate
from pauli_duality.config.settings import settings
from pauli_duality.core.exceptions import (
    ConvergenceError,
    DimensionError,
    NonHermitianError,
    SizeLimitError,
    UnnormalizedStateError,
)
from pauli_duality.core.local_ops import OperatorString
from pauli_duality.core.pauli import PauliString, PauliSum

logger = logging.getLogger(__name__)

_PHASES = (1 + 0j, 1j, -1 + 0j, -1j)
NORM_TOL = 1e-12


def _check_dense(L: int) -> None:
    if L > settings.dense_limit:
        raise SizeLimitError(f"L={L} exceeds dense matrix limit {settings.dense_limit}")


def _check_state(L: int) -> None:
    if L > settings.state_limit:
        raise SizeLimitError(f"L={L} exceeds state vector limit {settings.state_limit}")


def _num_sites(dim: int) -> int:
    L = dim.bit_length() - 1
    if dim <= 1 or 1 << L != dim:
        raise DimensionError(f"Dimension {dim} is not a power of two")
    return L


@dataclass(frozen=True, eq=False)
class DenseOperator:
    matrix: np.ndarray

    def __post_init__(self) -> None:
        matrix = np.asarray(self.matrix, dtype=complex)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise DimensionError(f"Operator must be square, got shape {matrix.shape}")
        _num_sites(matrix.shape[0])
        object.__setattr__(self, "matrix", matrix)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    @property
    def L(self) -> int:
        return _num_sites(self.dim)

    def is_hermitian(self, tol: float = 1e-12) -> bool:
        return bool(np.allclose(self.matrix, self.matrix.conj().T, atol=tol, rtol=0))

    def __matmul__(self, other):
        if isinstance(other, DenseOperator):
            return DenseOperator(self.matrix @ other.matrix)
        if isinstance(other, DenseState):
            return DenseState(self.matrix @ other.vector)
        return NotImplemented


@dataclass(frozen=True, eq=False)
class DenseState:
    vector: np.ndarray
    normalized: bool = False

    def __post_init__(self) -> None:
        vector = np.asarray(self.vector, dtype=complex).reshape(-1)
        _num_sites(vector.shape[0])
        object.__setattr__(self, "vector", vector)
        if self.normalized and abs(np.linalg.norm(vector) - 1) > NORM_TOL:
            raise UnnormalizedStateError("state flagged normalized has norm != 1")

    @classmethod
    def basis(cls, bits: str) -> "DenseState":
        """Computational basis state, e.g. ``"0110"`` (character k is site k)."""
        vector = np.zeros(1 << len(bits), dtype=complex)
        vector[int(bits, 2)] = 1
        return cls(vector, normalized=True)

    @classmethod
    def product(cls, factors: Sequence[Sequence[complex]]) -> "DenseState":
        vector = np.array([1], dtype=complex)
        for factor in factors:
            vector = np.kron(vector, np.asarray(factor, dtype=complex))
        return cls(vector)

    @classmethod
    def plus(cls, L: int) -> "DenseState":
        """|+>^L."""
        _check_state(L)
        dim = 1 << L
        return cls(np.full(dim, 1 / np.sqrt(dim), dtype=complex), normalized=True)

    @classmethod
    def ones(cls, L: int) -> "DenseState":
        """|1>^L."""
        return cls.basis("1" * L)

    @property
    def dim(self) -> int:
        return self.vector.shape[0]

    @property
    def L(self) -> int:
        return _num_sites(self.dim)

    def norm(self) -> float:
        return float(np.linalg.norm(self.vector))

    def normalize(self) -> "DenseState":
        norm = self.norm()
        if norm == 0:
            raise UnnormalizedStateError("cannot normalize the zero vector")
        return DenseState(self.vector / norm, normalized=True)

    def overlap(self, other: "DenseState") -> complex:
        return complex(np.vdot(self.vector, other.vector))

    def fidelity(self, other: "DenseState") -> float:
        """|<a|b>|^2 / (<a|a><b|b>); insensitive to global phase and scale."""
        if self.dim != other.dim:
            raise DimensionError(f"State dimensions differ: {self.dim} vs {other.dim}")
        denom = np.vdot(self.vector, self.vector).real * np.vdot(other.vector, other.vector).real
        return float(abs(np.vdot(self.vector, other.vector)) ** 2 / denom)

    def require_normalized(self) -> None:
        if abs(self.norm() - 1) > 1e-10:
            raise UnnormalizedStateError(f"state norm is {self.norm():.12g}, expected 1")


@dataclass(frozen=True, eq=False)
class SpectrumResult:
    """Ascending eigenvalues with ground energy and degeneracy-aware gap."""

    eigenvalues: np.ndarray
    ground_energy: float
    gap: float | None
    degeneracy: int
    residual: float


# --- matrix construction -----------------------------------------------------


def _index_mask(mask: int, L: int) -> int:
    """Move bit k (site k) to bit L-1-k of a basis index."""
    out = 0
    for site in range(L):
        if (mask >> site) & 1:
            out |= 1 << (L - 1 - site)
    return out


def pauli_sum_sparse(h: PauliSum) -> scipy.sparse.csr_matrix:
    """Sparse matrix of a Pauli sum.

    A phase-free string acts as P|b> = i^|x&z| (-1)^|z&b| |b xor x>.
    """
    L = h.L
    _check_state(L)
    dim = 1 << L
    basis = np.arange(dim, dtype=np.int64)
    rows, cols, values = [], [], []
    for string, coeff in h.items():
        xi = _index_mask(string.x, L)
        zi = _index_mask(string.z, L)
        parity = np.zeros(dim, dtype=np.int64)
        for bit in range(L):
            if (zi >> bit) & 1:
                parity ^= (basis >> bit) & 1
        phase = coeff * _PHASES[(string.x & string.z).bit_count() % 4]
        rows.append(basis ^ xi)
        cols.append(basis)
        values.append(phase * (1 - 2 * parity))
    if not rows:
        return scipy.sparse.csr_matrix((dim, dim), dtype=complex)
    matrix = scipy.sparse.coo_matrix(
        (np.concatenate(values), (np.concatenate(rows), np.concatenate(cols))),
        shape=(dim, dim),
        dtype=complex,
    )
    return matrix.tocsr()


def _apply_matrix(tensor: np.ndarray, matrix: np.ndarray, sites: Sequence[int]) -> np.ndarray:
    """Contract a k-site matrix into the given leading axes of a (2,)*L tensor."""
    k = len(sites)
    op = matrix.reshape((2,) * (2 * k))
    out = np.tensordot(op, tensor, axes=(list(range(k, 2 * k)), list(sites)))
    return np.moveaxis(out, list(range(k)), list(sites))


def _apply_gates(gates: Iterable[Gate], tensor: np.ndarray) -> np.ndarray:
    for gate in gates:
        tensor = _apply_matrix(tensor, gate.matrix, gate.sites)
    return tensor


@singledispatch
def to_dense(obj) -> DenseOperator:
    """Exact Kronecker-product realization of an operator-like object."""
    raise TypeError(f"Cannot build a dense matrix from {type(obj).__name__}")


@to_dense.register
def _(obj: PauliSum) -> DenseOperator:
    _check_dense(obj.L)
    return DenseOperator(pauli_sum_sparse(obj).toarray())


@to_dense.register
def _(obj: PauliString) -> DenseOperator:
    return to_dense(PauliSum.from_string(obj))


@to_dense.register
def _(obj: OperatorString) -> DenseOperator:
    _check_dense(obj.L)
    return DenseOperator(obj.to_matrix())


@to_dense.register
def _(obj: Circuit) -> DenseOperator:
    """Circuit matrix U = Gm ... G1."""
    _check_dense(obj.L)
    dim = 1 << obj.L
    tensor = np.eye(dim, dtype=complex).reshape((2,) * obj.L + (dim,))
    return DenseOperator(_apply_gates(obj.gates, tensor).reshape(dim, dim))


@to_dense.register
def _(obj: Gate) -> DenseOperator:
    """A lone gate embedded on the smallest chain that holds its sites."""
    return to_dense(Circuit(max(obj.sites) + 1, (obj,)))


# --- states --------------------------------------------------------------------


def apply(c: Circuit, s: DenseState, renormalize: bool = False) -> DenseState:
    """Apply the circuit gate by gate; non-unitary gates change the norm unless renormalized."""
    if s.L != c.L:
        raise DimensionError(f"Circuit acts on {c.L} sites, state has {s.L}")
    _check_state(c.L)
    tensor = _apply_gates(c.gates, s.vector.reshape((2,) * c.L))
    out = DenseState(tensor.reshape(-1))
    if renormalize:
        return out.normalize()
    if s.normalized and c.is_unitary:
        return DenseState(out.vector, normalized=abs(out.norm() - 1) <= NORM_TOL)
    return out


def expectation(h: PauliSum | OperatorString, s: DenseState) -> complex:
    if isinstance(h, PauliSum):
        applied = pauli_sum_sparse(h) @ s.vector
    else:
        applied = h.to_matrix() @ s.vector
    return complex(np.vdot(s.vector, applied) / np.vdot(s.vector, s.vector))


def apply_operator(op: OperatorString | PauliSum, s: DenseState) -> DenseState:
    if isinstance(op, PauliSum):
        return DenseState(pauli_sum_sparse(op) @ s.vector)
    tensor = s.vector.reshape((2,) * s.L)
    for site, local in op.ops.items():
        tensor = _apply_matrix(tensor, local.matrix, (site,))
    return DenseState(op.scale * tensor.reshape(-1))


# --- spectra -------------------------------------------------------------------


def _gap(eigenvalues: np.ndarray, tol: float) -> tuple[float | None, int]:
    e0 = eigenvalues[0]
    above = eigenvalues[eigenvalues > e0 + tol]
    degeneracy = int(np.count_nonzero(eigenvalues <= e0 + tol))
    return (float(above[0] - e0) if above.size else None), degeneracy


def _require_hermitian(h: PauliSum) -> None:
    if not h.is_hermitian(tol=1e-12):
        raise NonHermitianError("Hermitian operator required (complex Pauli coefficients found)")


def spectrum(h: PauliSum) -> SpectrumResult:
    """Full dense spectrum (L <= dense limit)."""
    result, _ = ground(h, full=True)
    return result


def ground(h: PauliSum, full: bool = False) -> tuple[SpectrumResult, DenseState]:
    """Ground energy, gap and normalized ground state of a Hermitian Pauli sum.

    Full dense diagonalization up to the dense limit, sparse extremal pairs
    (``eigsh``) beyond it up to the state limit.
    """
    _require_hermitian(h)
    L = h.L
    tol = settings.degeneracy_tol
    if L <= settings.dense_limit:
        matrix = to_dense(h).matrix
        eigenvalues, vectors = scipy.linalg.eigh(matrix)
        ground_vector = vectors[:, 0]
        logger.debug(f"Dense diagonalization of a {matrix.shape[0]}x{matrix.shape[0]} matrix")
    elif not full and L <= settings.state_limit:
        matrix = pauli_sum_sparse(h)
        k = min(6, matrix.shape[0] - 2)
        try:
            eigenvalues, vectors = scipy.sparse.linalg.eigsh(matrix, k=k, which="SA")
        except scipy.sparse.linalg.ArpackNoConvergence as exc:
            raise ConvergenceError(f"eigsh did not converge for L={L}: {exc}")
        order = np.argsort(eigenvalues)
        eigenvalues, vectors = eigenvalues[order], vectors[:, order]
        ground_vector = vectors[:, 0]
        logger.debug(f"Sparse extremal solve for L={L} ({k} pairs)")
    else:
        _check_dense(L) if full else _check_state(L)
        raise SizeLimitError(f"L={L} exceeds backend limits")

    eigenvalues = np.real(eigenvalues)
    e0 = float(eigenvalues[0])
    residual = float(np.linalg.norm(matrix @ ground_vector - e0 * ground_vector))
    if residual > settings.residual_tol * max(1.0, abs(e0)):
        raise ConvergenceError(f"ground pair residual {residual:.3g} above bound")
    gap, degeneracy = _gap(eigenvalues, tol)
    state = DenseState(ground_vector / np.linalg.norm(ground_vector), normalized=True)
    return SpectrumResult(eigenvalues, e0, gap, degeneracy, residual), state


# --- entanglement --------------------------------------------------------------


def _site_list(sites: Iterable[int], L: int) -> list[int]:
    chosen = sorted(set(int(s) for s in sites))
    if not chosen or len(chosen) >= L:
        raise DimensionError(f"Subsystem must be a proper nonempty subset of {L} sites")
    if chosen[0] < 0 or chosen[-1] >= L:
        raise DimensionError(f"Subsystem sites {chosen} outside chain of length {L}")
    return chosen


def schmidt_probabilities(s: DenseState, sites: Iterable[int]) -> np.ndarray:
    """Eigenvalues of the reduced density matrix of ``sites`` (descending)."""
    L = s.L
    chosen = _site_list(sites, L)
    tensor = np.moveaxis(s.vector.reshape((2,) * L), chosen, list(range(len(chosen))))
    matrix = tensor.reshape(1 << len(chosen), -1)
    probabilities = scipy.linalg.svdvals(matrix) ** 2
    return probabilities / probabilities.sum()


def reduced_density_matrix(s: DenseState, sites: Iterable[int]) -> np.ndarray:
    L = s.L
    chosen = _site_list(sites, L)
    tensor = np.moveaxis(s.vector.reshape((2,) * L), chosen, list(range(len(chosen))))
    matrix = tensor.reshape(1 << len(chosen), -1)
    rho = matrix @ matrix.conj().T
    return rho / np.trace(rho).real


def local_entropy(s: DenseState, sites: Iterable[int]) -> float:
    """Von Neumann entropy in bits; probabilities at or below the clamp count as zero."""
    s.require_normalized()
    probabilities = schmidt_probabilities(s, sites)
    probabilities = probabilities[probabilities > settings.entropy_clamp]
    entropy = -float(np.sum(probabilities * np.log2(probabilities)))
    return max(entropy, 0.0)
