"""Hamiltonian builders and the finite-size duality identities."""

import numpy as np
import pytest

from pauli_duality.circuits.circuit import Boundary
from pauli_duality.core.exceptions import ModelError, NoDualError
from pauli_duality.core.pauli import PauliString, PauliSum, equal
from pauli_duality.models import (
    Family,
    ModelSpec,
    build,
    check_duality,
    cluster,
    cluster_dual_degeneracy,
    duality_residual,
    ising,
    ising_self_dual_form,
    xy_field,
    zxz,
)

COUPLINGS = (0.25, 0.5, 1.0, 2.0, 4.0)


def test_build_examples():
    """Term counts of small chains."""
    assert len(ising(2, 1.0)) == 3
    assert zxz(4, 0.0, 1.0) == PauliSum.from_label("ZIII") + PauliSum.from_label("IZII") + PauliSum.from_label("IIZI") + PauliSum.from_label("IIIZ")
    assert len(cluster(4, 1.0, 1.0)) == 6
    assert cluster(4, 2.0, 0.0) == PauliSum.from_label("XZXI", 2) + PauliSum.from_label("IXZX", 2)


def test_coupling_signs():
    """ZXZ carries -J, the cluster model +J, the XY chain -J1 on YY."""
    assert zxz(3, 1.5, 0.0).coefficient(PauliString.from_label("ZXZ")) == -1.5
    h = xy_field(2, 0.7, 0.0, 1.0)
    assert h == PauliSum.from_label("XX") + PauliSum.from_label("YY", -0.7)


@pytest.mark.parametrize("family", list(Family))
def test_builds_are_hermitian(family):
    """Every family builds a Hermitian sum for real couplings."""
    spec = ModelSpec.of(family, 6, J=0.3, B=-1.1, J1=0.8, J2=-0.4)
    assert build(spec).is_hermitian()


@pytest.mark.parametrize("builder", [ising, cluster, zxz])
def test_periodic_chains_are_translation_invariant(builder):
    """Periodic builds are invariant under a one-site shift."""
    h = builder(6, 0.9, 1.7, Boundary.PERIODIC)
    assert h.translated(1) == h


def test_spec_defaults():
    """ZXZ defaults to a ring, the others to open chains."""
    assert ModelSpec.of("zxz", 5).boundary is Boundary.PERIODIC
    assert ModelSpec.of("ising", 5).boundary is Boundary.OPEN
    assert ModelSpec.of(Family.CLUSTER_ISING, 4, J1=2.0).couplings() == {"J1": 2.0, "J2": 1.0, "B": 1.0}


@pytest.mark.parametrize(
    "family, L, fields",
    [
        ("ising", 1, {}),
        ("cluster", 2, {}),
        ("zxz", 2, {}),
        ("ising", 4, {"J": float("inf")}),
        ("heisenberg", 4, {}),
    ],
)
def test_invalid_specs(family, L, fields):
    """Bad families, sizes and missing couplings are model errors."""
    with pytest.raises(ModelError):
        ModelSpec.of(family, L, **fields)


@pytest.mark.parametrize("L", range(2, 11))
@pytest.mark.parametrize("J", COUPLINGS)
def test_ising_self_duality(L, J):
    """U^-1 H(J) U = X_L - J Z_1 + J H(1/J) exactly."""
    conjugated, _ = duality_residual("ising", L, {"J": J})
    assert equal(conjugated, ising_self_dual_form(L, J), tol=1e-12)


def test_ising_with_general_field():
    """The staircase maps the Ising chain with J != B exactly."""
    check = check_duality(Family.ISING, 7, {"J": 0.6, "B": -1.4})
    assert check.exact
    assert check.passed
    assert check.residual_terms == 0


@pytest.mark.parametrize("L", range(3, 11))
def test_cluster_duality_is_exact(L):
    """The cluster chain maps onto its dual with no residual."""
    check = check_duality("cluster", L, {"J": 0.8, "B": 1.3})
    assert check.exact
    assert check.matched_terms == len(check.target)


@pytest.mark.parametrize("L", range(5, 11))
def test_cluster_ising_residual_sits_on_the_ends(L):
    """Only the two end YY bonds differ, whatever the length."""
    check = check_duality("cluster_ising", L, {"J1": 0.9, "J2": 0.4, "B": 1.1})
    assert not check.exact
    assert check.boundary_only
    assert check.passed
    assert check.residual_terms == 2
    assert set(check.residual_sites) == {0, 1, L - 2, L - 1}


@pytest.mark.parametrize("family", ["cluster", "cluster_ising"])
@pytest.mark.parametrize("L", [5, 8])
def test_self_duality_is_bulk_exact(family, L):
    """Hadamard-CZ-Hadamard leaves a residual on the end sites only."""
    check = check_duality(family, L, {"J": 0.6, "B": 1.7, "J1": 0.6, "J2": 0.3}, self_dual=True)
    assert check.boundary_only
    assert check.passed
    assert 0 < check.residual_terms <= 6


def test_zxz_has_no_dual():
    """Duality checks reject the ZXZ chain."""
    with pytest.raises(NoDualError):
        check_duality("zxz", 5, {"J": 1.0, "B": 1.0})


def test_dual_without_end_field_doubles_ground_level():
    """Dropping B X_L at J=0 leaves a twofold ground level the original lacks."""
    assert cluster_dual_degeneracy(6) == (1, 2)


def test_conjugated_spectrum_matches():
    """The dual form is isospectral with the original chain."""
    from pauli_duality.backend.dense import spectrum

    _, target = duality_residual("cluster", 6, {"J": 0.5, "B": 1.0})
    original = spectrum(cluster(6, 0.5, 1.0)).eigenvalues
    assert np.allclose(spectrum(target).eigenvalues, original, atol=1e-10)


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
