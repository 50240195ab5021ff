"""Gates, circuits and exact conjugation of Pauli sums."""

import numpy as np
import pytest

from pauli_duality.backend.dense import to_dense
from pauli_duality.circuits.circuit import Boundary, Circuit, conjugate
from pauli_duality.circuits.gates import Gate, GateKind
from pauli_duality.circuits.library import (
    cluster_self_dual,
    cz_layer,
    fig2_staircase,
    lemma1_T,
    remark1_unitary,
)
from pauli_duality.core.exceptions import DimensionError, ParseError, SingularityError
from pauli_duality.core.local_ops import LocalOp, OperatorString, expand
from pauli_duality.core.pauli import PauliString, PauliSum, equal
from pauli_duality.models.ising import ising
from pauli_duality.models.zxz import zxz


def single(L, site, op):
    return PauliSum.from_string(PauliString.single(L, site, op))


def z_prefix(L, n):
    return PauliSum.from_string(PauliString.from_sites(L, {k: "Z" for k in range(n + 1)}))


def random_circuit(rng, L, depth=8):
    gates = []
    for _ in range(depth):
        kind = rng.integers(0, 4)
        if kind == 3 or L == 1:
            m = 2 * np.eye(2) + rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
            gates.append(Gate.local(int(rng.integers(0, L)), LocalOp(m)))
        elif kind == 0:
            gates.append(Gate.hadamard(int(rng.integers(0, L))))
        else:
            a, b = rng.choice(L, size=2, replace=False)
            gates.append(Gate.cnot(int(a), int(b)) if kind == 1 else Gate.cz(int(a), int(b)))
    return Circuit(L, tuple(gates))


def random_unitary_circuit(rng, L, depth=8):
    gates = []
    for _ in range(depth):
        kind = rng.integers(0, 4)
        if kind == 3 or L == 1:
            q, _ = np.linalg.qr(rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2)))
            gates.append(Gate.local(int(rng.integers(0, L)), LocalOp(q), LocalOp(q.conj().T)))
        elif kind == 0:
            gates.append(Gate.hadamard(int(rng.integers(0, L))))
        else:
            a, b = rng.choice(L, size=2, replace=False)
            gates.append(Gate.cnot(int(a), int(b)) if kind == 1 else Gate.cz(int(a), int(b)))
    return Circuit(L, tuple(gates))


def random_sum(rng, L, terms=4):
    pairs = [
        (complex(rng.normal(), rng.normal()), PauliString(L, int(rng.integers(0, 1 << L)), int(rng.integers(0, 1 << L))))
        for _ in range(terms)
    ]
    return PauliSum.from_terms(L, pairs)


@pytest.mark.parametrize("L", range(2, 11))
def test_staircase_maps(L):
    """X_n -> Z_1...Z_n, Z_n -> X_n X_{n+1}, Z_L -> X_L."""
    c = fig2_staircase(L)
    for n in range(L):
        assert conjugate(c, single(L, n, "X")) == z_prefix(L, n)
        image = {n: "X", n + 1: "X"} if n < L - 1 else {n: "X"}
        assert conjugate(c, single(L, n, "Z")) == PauliSum.from_string(PauliString.from_sites(L, image))


def test_cz_examples():
    """CZ(1,2) maps X_1 -> X_1 Z_2 and fixes Z_1."""
    c = Circuit(2, (Gate.cz(0, 1),))
    assert conjugate(c, PauliSum.from_label("XI")) == PauliSum.from_label("XZ")
    assert conjugate(c, PauliSum.from_label("ZI")) == PauliSum.from_label("ZI")
    layer = cz_layer(4, Boundary.PERIODIC)
    assert conjugate(layer, single(4, 0, "X")) == PauliSum.from_label("XZIZ")


def test_cluster_self_dual_bulk():
    """H-CZ-H swaps X Z X with Z in the bulk."""
    c = cluster_self_dual(5)
    assert conjugate(c, PauliSum.from_label("IXZXI")) == single(5, 2, "Z")
    assert conjugate(c, single(5, 2, "Z")) == PauliSum.from_label("IXZXI")


def test_local_identity_transform():
    """diag(1, 1) leaves X unchanged."""
    c = lemma1_T(3, 1.0)
    local_only = Circuit(3, c.gates[-3:], Boundary.PERIODIC)
    assert conjugate(local_only, single(3, 1, "X")) == single(3, 1, "X")


def test_inverse_round_trip():
    """Conjugating by C then by C^-1 is the identity."""
    rng = np.random.default_rng(21)
    for _ in range(20):
        L = int(rng.integers(1, 5))
        c, h = random_circuit(rng, L), random_sum(rng, L)
        back = conjugate(c.inverse(), conjugate(c, h))
        assert equal(back, h, tol=1e-9 * max(1.0, h.max_abs_coefficient()))


def test_conjugation_is_multiplicative():
    """U^-1 (ab) U = (U^-1 a U)(U^-1 b U)."""
    rng = np.random.default_rng(23)
    for _ in range(20):
        L = int(rng.integers(1, 5))
        c = random_circuit(rng, L)
        a, b = random_sum(rng, L, 2), random_sum(rng, L, 2)
        left = conjugate(c, a * b)
        right = conjugate(c, a) * conjugate(c, b)
        assert equal(left, right, tol=1e-8 * max(1.0, left.max_abs_coefficient()))


def test_dense_oracle():
    """Symbolic conjugation equals U^-1 H U on random circuits."""
    rng = np.random.default_rng(29)
    for _ in range(200):
        L = int(rng.integers(1, 6))
        c, h = random_circuit(rng, L), random_sum(rng, L)
        U = to_dense(c).matrix
        expected = np.linalg.inv(U) @ to_dense(h).matrix @ U
        got = to_dense(conjugate(c, h)).matrix
        assert np.allclose(got, expected, rtol=0, atol=1e-10)


def test_spectrum_preserved():
    """A similarity transform keeps the spectrum."""
    h = ising(4, 0.7)
    dual = conjugate(fig2_staircase(4), h)
    before = np.linalg.eigvalsh(to_dense(h).matrix)
    after = np.linalg.eigvalsh(to_dense(dual).matrix)
    assert np.allclose(before, after, atol=1e-12)


def test_random_unitary_circuits_keep_spectrum():
    """Hermitian sums keep their eigenvalues under random unitary circuits."""
    rng = np.random.default_rng(31)
    for _ in range(30):
        L = int(rng.integers(1, 6))
        c = random_unitary_circuit(rng, L)
        assert c.is_unitary
        s = random_sum(rng, L)
        h = s + s.adjoint()
        dual = conjugate(c, h)
        assert dual.is_hermitian(1e-10)
        before = np.linalg.eigvalsh(to_dense(h).matrix)
        after = np.linalg.eigvalsh(to_dense(dual).matrix)
        assert np.allclose(before, after, rtol=0, atol=1e-10)


def test_periodic_cz_layer_is_an_involution():
    """The L=4 periodic CZ layer includes the wrap bond and squares to the identity."""
    layer = cz_layer(4, Boundary.PERIODIC)
    assert [g.sites for g in layer] == [(0, 1), (1, 2), (2, 3), (0, 3)]
    rng = np.random.default_rng(37)
    for _ in range(20):
        h = random_sum(rng, 4)
        assert equal(conjugate(layer, conjugate(layer, h)), h, tol=1e-12)
        assert equal(conjugate(layer + layer, h), h, tol=1e-12)


def test_site_wraps_only_on_periodic_chains():
    """Periodic circuits reduce sites modulo L; open circuits reject them."""
    ring = Circuit(4, boundary=Boundary.PERIODIC)
    assert [ring.site(k) for k in (-1, 0, 3, 4, 9)] == [3, 0, 3, 0, 1]
    with pytest.raises(DimensionError):
        Circuit(4).site(4)
    with pytest.raises(DimensionError):
        Circuit(4).site(-1)
    assert [g.sites for g in cz_layer(4)] == [(0, 1), (1, 2), (2, 3)]


def test_periodic_text_form_wraps_sites():
    """In a periodic gate file site L + 1 is site 1."""
    ring = Circuit.from_text("BOUNDARY periodic\nCZ 4 5\nCNOT 5 2\nH 6\n", 4)
    assert [g.sites for g in ring] == [(0, 3), (0, 1), (1,)]
    assert conjugate(ring, PauliSum.from_label("XIII")) == conjugate(
        Circuit(4, (Gate.cz(3, 0), Gate.cnot(0, 1), Gate.hadamard(1))), PauliSum.from_label("XIII")
    )
    with pytest.raises(DimensionError):
        Circuit.from_text("CZ 4 5\n", 4)


def test_clifford_keeps_term_count():
    """Clifford conjugation maps each string onto one string."""
    h = ising(6, 1.3)
    assert len(conjugate(fig2_staircase(6), h)) == len(h)


def test_lambda_transform_blocks():
    """T^-1 H T is a sum of single-site blocks (B, -J/lam; -J lam, -B) for any lam."""
    L, J, B, lam = 4, 1.2, 0.4, 0.6
    block = LocalOp.from_entries(B, -J / lam, -J * lam, -B)
    expected = PauliSum.zero(L)
    for k in range(L):
        expected = expected + expand(OperatorString(L, {k: block}))
    assert equal(conjugate(lemma1_T(L, lam), zxz(L, J, B)), expected, tol=1e-12)


def test_remark_unitary_diagonalizes():
    """U^dagger (B,-J;-J,-B) U is diagonal with the smaller eigenvalue on |1>."""
    J, B = 1.0, 0.3
    U = remark1_unitary(J, B).matrix
    block = np.array([[B, -J], [-J, -B]])
    d = U.conj().T @ block @ U
    assert abs(d[0, 1]) < 1e-12
    assert d[1, 1].real == pytest.approx(-np.hypot(J, B))


def test_local_gate_needs_true_inverse():
    """A LOCAL gate needs an invertible operator and a matching inverse."""
    op = LocalOp.from_entries(2, 0, 0, 1)
    with pytest.raises(SingularityError):
        Gate.local(0, op, LocalOp.identity())
    with pytest.raises(SingularityError):
        Gate.local(0, LocalOp.from_entries(1, 0, 0, 0))


def test_gate_sites_checked():
    """Gates need distinct sites inside the chain."""
    with pytest.raises(DimensionError):
        Gate.cnot(1, 1)
    with pytest.raises(DimensionError):
        Circuit(2, (Gate.hadamard(2),))


def test_text_form():
    """One gate per line with 1-based sites."""
    text = "# staircase\nCNOT 1 2\nH 1\nH 2\n"
    c = Circuit.from_text(text, 2)
    assert [g.kind for g in c] == [GateKind.CNOT, GateKind.H, GateKind.H]
    assert c.gates[0].sites == (0, 1)
    t = lemma1_T(3, 0.5)
    again = Circuit.from_text(t.to_text(), 3)
    assert again.boundary is Boundary.PERIODIC
    assert np.allclose(to_dense(again).matrix, to_dense(t).matrix)


@pytest.mark.parametrize(
    "line",
    ["SWAP 1 2", "CNOT 1", "H 0", "LOCAL 1 1 0 0 0 0 0", "CZ a b"],
)
def test_text_form_errors(line):
    """Malformed gate lines are parse errors."""
    with pytest.raises(ParseError):
        Circuit.from_text(line, 3)


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
