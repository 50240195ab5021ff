"""Local operators, operator strings and their Pauli expansion."""

import numpy as np
import pytest

from pauli_duality.backend.dense import to_dense
from pauli_duality.config.settings import settings
from pauli_duality.core.exceptions import DimensionError, ParseError, SingularityError, SizeLimitError
from pauli_duality.core.local_ops import (
    LocalOp,
    OperatorString,
    commutator_is_zero,
    expand,
    fixed_space_chain,
    independence_check,
)
from pauli_duality.core.pauli import PauliOp, PauliString, PauliSum, equal


def off_diagonal(lam):
    return LocalOp.from_entries(0, lam, 1 / lam, 0)


def random_local(rng):
    return LocalOp(rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2)))


def test_expand_zxz_at_unit_lambda():
    """Z (0,1;1,0) Z expands to the single string ZXZ."""
    z = LocalOp.from_pauli("Z")
    op = OperatorString(3, {0: z, 1: off_diagonal(1.0), 2: z})
    assert expand(op) == PauliSum.from_label("ZXZ")


def test_off_diagonal_coefficients():
    """(0,lam;1/lam,0) = (lam+1/lam)/2 X + i(lam-1/lam)/2 Y."""
    lam = 0.5
    coeffs = off_diagonal(lam).pauli_coefficients()
    assert coeffs[PauliOp.I] == 0
    assert coeffs[PauliOp.Z] == 0
    assert coeffs[PauliOp.X] == pytest.approx((lam + 1 / lam) / 2)
    assert coeffs[PauliOp.Y] == pytest.approx(1j * (lam - 1 / lam) / 2)


def test_identity_expansion():
    """The empty string expands to the identity."""
    assert expand(OperatorString.identity(3)) == PauliSum.identity(3)


def test_reconstruction():
    """sum c_P P rebuilds every random 2x2 operator."""
    rng = np.random.default_rng(5)
    for _ in range(50):
        op = random_local(rng)
        coeffs = op.pauli_coefficients()
        rebuilt = sum(c * LocalOp.from_pauli(p).matrix for p, c in coeffs.items())
        assert np.allclose(rebuilt, op.matrix, atol=1e-12)


def test_expansion_matches_kronecker_product():
    """expand() agrees with the dense operator string."""
    rng = np.random.default_rng(9)
    for _ in range(20):
        L = int(rng.integers(1, 5))
        op = OperatorString(L, {k: random_local(rng) for k in range(L)}, scale=0.3 - 0.2j)
        assert np.allclose(to_dense(expand(op)).matrix, op.to_matrix(), atol=1e-12)


def test_expansion_is_a_homomorphism():
    """expand(A @ B) = expand(A) * expand(B)."""
    rng = np.random.default_rng(13)
    for _ in range(20):
        L = int(rng.integers(1, 4))
        a = OperatorString(L, {k: random_local(rng) for k in range(L)})
        b = OperatorString(L, {k: random_local(rng) for k in range(L)})
        assert equal(expand(a @ b), expand(a) * expand(b), tol=1e-10)


def test_hermiticity_detection():
    """Hermitian locals expand to real coefficients, others do not."""
    assert expand(OperatorString(1, {0: off_diagonal(1.0)})).is_hermitian()
    assert not expand(OperatorString(1, {0: off_diagonal(0.5)})).is_hermitian()
    assert LocalOp.from_pauli("Y").is_hermitian()
    assert not off_diagonal(2.0).is_hermitian()


def test_commutators():
    """X and Z anticommute; everything commutes with the identity."""
    x = OperatorString.from_paulis(1, {0: "X"})
    z = OperatorString.from_paulis(1, {0: "Z"})
    assert not commutator_is_zero(x, z)
    assert commutator_is_zero(x, OperatorString.identity(1))


def test_non_hermitian_generators_commute():
    """The ZXZ generators at lambda = 1/2 commute pairwise."""
    from pauli_duality.stabilizer.lemma1 import Lemma1Params, lemma1_generators

    params = Lemma1Params.of(6, 1.0, 0.75)
    assert params.lam == pytest.approx(0.5)
    gens = lemma1_generators(params).generators
    for i, a in enumerate(gens):
        for b in gens[i + 1:]:
            assert commutator_is_zero(a, b)


def test_independence():
    """{Z1, Z2} halves the space twice; a repeated generator is dependent."""
    z1 = OperatorString.from_paulis(2, {0: "Z"})
    z2 = OperatorString.from_paulis(2, {1: "Z"})
    assert fixed_space_chain([z1, z2]) == [4, 2, 1]
    assert independence_check([z1, z2])
    assert not independence_check([z1, z1])


def test_too_many_generators():
    """More generators than qubits cannot be independent."""
    z = OperatorString.from_paulis(2, {0: "Z"})
    with pytest.raises(DimensionError):
        independence_check([z, z, z])


def test_singular_local_operator():
    """A rank-one operator has no inverse."""
    with pytest.raises(SingularityError):
        LocalOp.from_entries(1, 1, 1, 1).inverse()
    with pytest.raises(SingularityError):
        OperatorString(1, {0: LocalOp.from_entries(1, 0, 0, 0)}).inverse()


def test_inverse_and_conjugation():
    """M M^-1 = I and conjugation by a Pauli string of itself is trivial."""
    m = off_diagonal(0.3)
    assert (m @ m.inverse()).is_identity(tol=1e-12)
    x = OperatorString.from_pauli_string(PauliString.from_label("XZ"))
    assert np.allclose(x.conjugated_by(x).to_matrix(), x.to_matrix())


def test_dense_limit(monkeypatch):
    """Matrices above the dense limit are refused."""
    monkeypatch.setattr(settings, "lmax", 2)
    with pytest.raises(SizeLimitError):
        OperatorString.identity(3).to_matrix()


def test_text_form():
    """Pauli names and raw entries both parse; scale is optional."""
    op = OperatorString.from_text("scale=2 Z 0,0.5,2,0 I")
    assert op.L == 3
    assert op.scale == 2
    assert op.local(0).as_pauli() is PauliOp.Z
    assert op.local(1).allclose(off_diagonal(0.5))
    assert op.non_identity_sites == (0, 1)
    again = OperatorString.from_text(op.to_text())
    assert np.allclose(again.to_matrix(), op.to_matrix())
    with pytest.raises(ParseError):
        OperatorString.from_text("Z 1,2,3")


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
