import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qenergy.efficiency import SECONDS_PER_DAY, EfficiencyResult, ee_ratio, energy_efficiency, n_algorithms
from qenergy.exceptions import DomainError
from qenergy.presets import load_preset


def test_partial_runs_in_a_day():
    assert n_algorithms(SECONDS_PER_DAY, SECONDS_PER_DAY / 300.75) == pytest.approx(300.75, rel=1e-15)
    assert n_algorithms(SECONDS_PER_DAY, SECONDS_PER_DAY / 300.75, floor=True) == 300.0


def test_floor_when_algorithm_outlasts_window():
    assert n_algorithms(SECONDS_PER_DAY, 2 * SECONDS_PER_DAY, floor=True) == 0.0
    assert n_algorithms(SECONDS_PER_DAY, 2 * SECONDS_PER_DAY) == 0.5


def test_energy_efficiency_basic():
    assert energy_efficiency(0.5, 4.0) == 0.5
    assert energy_efficiency(1e-3, 1e3) == 1.0


@pytest.mark.parametrize("t, p", [(0, 1), (-1, 1), (1, 0), (1, -2), (math.inf, 1), (1, math.nan)])
def test_energy_efficiency_domain(t, p):
    with pytest.raises(DomainError):
        energy_efficiency(t, p)


def test_window_domain():
    with pytest.raises(DomainError):
        n_algorithms(1.0, 0.0)
    with pytest.raises(DomainError):
        n_algorithms(-1.0, 1.0)


def test_window_independence():
    r = EfficiencyResult("x", 100, 10, 1e-3, 1e-2, 2e4)
    for t in (1.0, 3600.0, SECONDS_PER_DAY, 1e7):
        assert r.n_in_window(t) / (t * r.power) == pytest.approx(r.ee, rel=1e-14)


def test_superconducting_active_over_passive():
    sc = load_preset("superconducting-baseline")
    active = sc.evaluate(100, 100)
    passive = sc.with_reset("passive").evaluate(100, 100)
    assert ee_ratio(active, passive) == pytest.approx(206.6 / 11.6, rel=1e-12)
    assert 17 <= ee_ratio(active, passive) <= 20


def test_passive_reset_is_flat_in_depth():
    passive = load_preset("superconducting-baseline").with_reset("passive")
    ratio = passive.evaluate(10, 100).ee / passive.evaluate(100, 100).ee
    assert 1.0 <= ratio <= 1.1


def test_neutral_continuous_over_periodic_limit():
    periodic, cont = load_preset("neutral-periodic"), load_preset("neutral-continuous")
    ratio = ee_ratio(cont.evaluate(10**7, 1, 0.25), periodic.evaluate(10**7, 1, 0.25))
    assert ratio == pytest.approx(4 / 3 * 22205 / 24755, rel=1e-4)
    assert ratio == pytest.approx(1.196, abs=1e-3)


def test_spin_reference_efficiencies():
    assert load_preset("spin-2d").evaluate(2000).ee == pytest.approx(0.387, rel=0.02)
    assert load_preset("spin-linear").evaluate(6500).ee == pytest.approx(0.292, rel=0.02)


positive = st.floats(1e-9, 1e6, allow_nan=False, allow_infinity=False)


@given(positive, positive)
def test_ee_identity(t_alg, power):
    assert energy_efficiency(t_alg, power) * t_alg * power == pytest.approx(1.0, rel=1e-15)


@given(positive, positive, st.integers(1, 10**6))
def test_ee_tenfold_samples(t_circuit, power, n):
    # exact over the rationals; float evaluation stays within a few ulp
    exact = lambda k: 1 / (Fraction(t_circuit) * k * Fraction(power))
    assert exact(10 * n) == exact(n) / 10
    a = energy_efficiency(t_circuit * (10 * n), power)
    b = energy_efficiency(t_circuit * n, power) / 10
    assert abs(a - b) <= 4 * math.ulp(b)


@given(positive, positive)
def test_ratio_is_antisymmetric(x, y):
    a = EfficiencyResult("a", 1, 1, x, x, 1.0)
    b = EfficiencyResult("b", 1, 1, y, y, 1.0)
    assert ee_ratio(a, b) * ee_ratio(b, a) == pytest.approx(1.0, rel=1e-15)
    assert ee_ratio(a, b) == pytest.approx(a.ee / b.ee, rel=1e-14)
