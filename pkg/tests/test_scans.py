"""Energy and entanglement scans."""

import pytest

from pauli_duality.core.exceptions import DegenerateParameterError
from pauli_duality.core.pool import run_grid
from pauli_duality.scans import default_ratios, duality_energy_scan, entropy_sweep


def test_unit_coupling_is_exact():
    """At J=1 the energy relation holds for every L."""
    scan = duality_energy_scan([1.0], [4, 6])
    assert scan.deltas(1.0) == pytest.approx([0.0, 0.0], abs=1e-12)


def test_mismatch_shrinks_with_length():
    """delta(J, L) never grows with L."""
    scan = duality_energy_scan([1.5, 2.0, 3.0], [4, 6, 8, 10], jobs=2)
    assert scan.passed
    assert [row.L for row in scan.rows] == sorted(row.L for row in scan.rows)
    for J in (1.5, 2.0, 3.0):
        deltas = scan.deltas(J)
        assert len(deltas) == 4
        assert deltas[-1] < deltas[0]


def test_gap_formula_column():
    """The gap formula column is 2|1 - 1/J|."""
    row = duality_energy_scan([2.0], [6]).rows[0]
    assert row.gap_formula == pytest.approx(1.0)
    assert row.gap is not None and row.gap > 0


@pytest.mark.parametrize("J", [0.0, float("inf")])
def test_extreme_couplings_rejected(J):
    """J=0 and infinite J are rejected."""
    with pytest.raises(DegenerateParameterError):
        duality_energy_scan([J], [4])


def test_default_ratio_grid():
    """B/J = 0 followed by 49 geometric points from 1e-2 to 1e2."""
    ratios = default_ratios()
    assert len(ratios) == 50
    assert ratios[0] == 0.0
    assert ratios[1] == pytest.approx(1e-2)
    assert ratios[-1] == pytest.approx(1e2)


def test_entropy_decreases_with_field():
    """One bit at B = 0, approaching zero for large B/J."""
    sweep = entropy_sweep(8, jobs=2)
    assert sweep.within_bounds
    assert sweep.strictly_decreasing
    assert sweep.entropies[0] == pytest.approx(1.0, abs=1e-10)
    assert sweep.entropies[-1] < 1e-2


def test_entropy_at_huge_field():
    """A huge field leaves a product state with lambda near J/(2B)."""
    sweep = entropy_sweep(6, [1e6])
    assert sweep.entropies[0] < 1e-6
    assert sweep.rows[0].lam == pytest.approx(0.5e-6, rel=1e-6)


def test_entropy_same_for_every_site():
    """The periodic chain gives the same entropy on every site."""
    values = [entropy_sweep(5, [0.4], site=s).entropies[0] for s in range(5)]
    assert max(values) - min(values) < 1e-10


def test_run_grid_keeps_order():
    """Results follow the input order with and without workers."""
    points = list(range(12))
    assert run_grid(lambda p: p * p, points, jobs=4) == [p * p for p in points]
    assert run_grid(lambda p: p * p, iter(points)) == [p * p for p in points]
    assert run_grid(lambda p: p, [], jobs=4) == []


def test_parallel_scans_match_serial():
    """Both scans give the same rows on one worker and on several."""
    ratios = [0.0, 0.5, 2.0]
    serial = entropy_sweep(5, ratios).entropies
    assert entropy_sweep(5, ratios, jobs=3).entropies == pytest.approx(serial, abs=1e-12)
    rows = duality_energy_scan([2.0, 3.0], [4, 6], jobs=3).rows
    assert [(row.L, row.J) for row in rows] == [(4, 2.0), (4, 3.0), (6, 2.0), (6, 3.0)]
    assert [row.delta for row in rows] == pytest.approx(
        [row.delta for row in duality_energy_scan([2.0, 3.0], [4, 6]).rows], abs=1e-12
    )


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
