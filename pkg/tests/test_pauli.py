"""Pauli strings and sums."""

import numpy as np
import pytest

from pauli_duality.backend.dense import to_dense
from pauli_duality.core.exceptions import DimensionError, ParseError
from pauli_duality.core.pauli import (
    PauliString,
    PauliSum,
    equal,
    mul,
    sum_add,
    sum_mul,
    sum_scale,
    symplectic_product,
)
from pauli_duality.models.ising import ising


def random_string(rng, L):
    return PauliString(L, int(rng.integers(0, 1 << L)), int(rng.integers(0, 1 << L)), int(rng.integers(0, 4)))


def test_x_times_z_is_minus_i_y():
    """XZ = -iY."""
    product = mul(PauliString.from_label("X"), PauliString.from_label("Z"))
    assert product.label == "Y"
    assert product.coefficient == -1j


def test_zz_squares_to_identity():
    """Z1Z2 * Z1Z2 = +1."""
    zz = PauliString.from_label("ZZ")
    product = zz * zz
    assert product.is_identity
    assert product.phase == 0


def test_product_matches_dense_matrices():
    """(X(x)Y)(Z(x)Z) agrees with the 4x4 matrix product."""
    a, b = PauliString.from_label("XY"), PauliString.from_label("ZZ")
    expected = to_dense(a).matrix @ to_dense(b).matrix
    assert np.allclose(to_dense(a * b).matrix, expected, atol=0)


def test_length_mismatch():
    """Multiplying strings of different length is a dimension error."""
    with pytest.raises(DimensionError):
        mul(PauliString.from_label("X"), PauliString.from_label("XX"))


def test_group_laws():
    """Associativity, identity, order at most four; phases stay discrete."""
    rng = np.random.default_rng(7)
    for _ in range(200):
        L = int(rng.integers(1, 11))
        a, b, c = (random_string(rng, L) for _ in range(3))
        left, right = (a * b) * c, a * (b * c)
        assert (left.x, left.z, left.phase) == (right.x, right.z, right.phase)
        one = PauliString.identity(L)
        assert (a * one).phase == a.phase and (a * one).x == a.x
        fourth = a * a * a * a
        assert fourth.is_identity and fourth.phase == 0
        assert fourth.phase in (0, 1, 2, 3)


def test_commutation_matches_symplectic_product():
    """ab = +-ba with the sign given by the symplectic form."""
    rng = np.random.default_rng(11)
    for _ in range(200):
        L = int(rng.integers(1, 11))
        a, b = random_string(rng, L), random_string(rng, L)
        ab, ba = a * b, b * a
        assert (ab.x, ab.z) == (ba.x, ba.z)
        sign_flip = (ab.phase - ba.phase) % 4 == 2
        assert sign_flip == bool(symplectic_product(a, b))
        assert a.commutes_with(b) == (not sign_flip)


def test_dense_oracle_equivalence():
    """Matrix of a*b equals the product of matrices for L <= 5."""
    rng = np.random.default_rng(3)
    for _ in range(50):
        L = int(rng.integers(1, 6))
        a, b = random_string(rng, L), random_string(rng, L)
        expected = to_dense(a).matrix @ to_dense(b).matrix
        assert np.allclose(to_dense(a * b).matrix, expected, atol=1e-14)


def test_hermitian_iff_real_phase():
    """A string is Hermitian for phases +-1 only."""
    assert PauliString.from_label("XY").is_hermitian
    assert not PauliString.from_label("XY", phase=1).is_hermitian


def test_sum_cancellation_prunes():
    """(X + Z) + (-Z) = X with no zero term left."""
    total = sum_add(PauliSum.from_label("X") + PauliSum.from_label("Z"), PauliSum.from_label("Z", -1))
    assert total == PauliSum.from_label("X")
    assert len(total) == 1


def test_sum_square():
    """(J X1X2)^2 = J^2 1."""
    J = 0.7
    term = sum_scale(PauliSum.from_label("XX"), J)
    assert equal(sum_mul(term, term), PauliSum.identity(2, J * J))


def test_hamiltonian_square_matches_dense():
    """H(J=1, L=3) squared agrees with the dense square."""
    h = ising(3, 1.0)
    dense = to_dense(h).matrix
    assert np.allclose(to_dense(h * h).matrix, dense @ dense, atol=1e-12)


def test_equal_tolerance():
    """equal() compares the largest coefficient difference against tol."""
    h = ising(4, 2.0)
    assert equal(h, h)
    bumped = h + PauliSum.from_label("XIII", 1e-6)
    assert not equal(h, bumped, tol=1e-12)
    assert equal(h, bumped, tol=1e-5)


def test_canonical_order():
    """Terms are ordered by (z-mask, x-mask)."""
    h = PauliSum.from_label("ZI") + PauliSum.from_label("XI") + PauliSum.from_label("IX")
    keys = list(h.terms)
    assert keys == sorted(keys, key=lambda k: (k[1], k[0]))


def test_phase_folds_into_coefficient():
    """A phased string enters a sum through its coefficient."""
    h = PauliSum.from_string(PauliString.from_label("Y", phase=1), 2.0)
    assert h.coefficient(PauliString.from_label("Y")) == 2j
    assert not h.is_hermitian()


def test_text_format():
    """One term per line as <re> <im> <label>."""
    h = PauliSum.from_label("XZ", 0.5) + PauliSum.from_label("YY", -1j)
    text = h.to_text()
    assert "0.5 0.0 XZ" in text
    assert PauliSum.from_text("# comment\n" + text) == h


def test_text_format_errors():
    """Malformed lines raise ParseError."""
    with pytest.raises(ParseError):
        PauliSum.from_text("1.0 XZ")
    with pytest.raises(ParseError):
        PauliSum.from_text("1.0 0.0 XQ")
    with pytest.raises(ParseError):
        PauliSum.from_text("1.0 0.0 XZ\n1.0 0.0 X")


def test_translation():
    """Cyclic shift moves site k to k+1."""
    assert PauliString.from_label("XIZ").translated(1).label == "ZXI"


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
