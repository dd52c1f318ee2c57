import math

import pytest
from hypothesis import given, strategies as st

from qenergy.exceptions import ConfigError, DomainError
from qenergy.presets import load_preset
from qenergy.timing import (
    AtomTiming,
    NeutralAtomTiming,
    ReloadMode,
    SolidStateTiming,
    algorithm_time,
    atom_circuit_time,
    circuit_terms,
    circuit_time,
    multizone_clock,
    neutral_circuit_time,
    solid_state_circuit_time,
    timing_from_dict,
)

US = 1e-6
SC = load_preset("superconducting-baseline").timing
SPIN = load_preset("spin-2d").timing
ION = load_preset("trapped-ion-1zone").timing
NEUTRAL = load_preset("neutral-periodic").timing
NEUTRAL_CONT = load_preset("neutral-continuous").timing


@pytest.mark.parametrize("depth, micros", [(0, 6.6), (10, 7.1), (100, 11.6), (1000, 56.6), (10_000, 506.6)])
def test_superconducting_active_reset(depth, micros):
    assert solid_state_circuit_time(SC, depth) == pytest.approx(micros * US, abs=1e-12)


def test_reset_variants():
    assert SC.with_reset("passive").t_reset == pytest.approx(200 * US, rel=1e-15)
    assert SC.with_reset("instantaneous").t_reset == 0.0
    assert solid_state_circuit_time(SC.with_reset("passive"), 100) == pytest.approx(206.6 * US)
    with pytest.raises(ConfigError):
        SC.with_reset("thermal")


def test_spin_times():
    assert solid_state_circuit_time(SPIN, 100) == pytest.approx(111 * US)
    assert solid_state_circuit_time(SPIN, 2000) == pytest.approx(130 * US)
    # clock term catches up with the reset term at D = t_reset / t_clock
    assert 10_000 * SPIN.t_clock == pytest.approx(SPIN.t_reset)
    assert solid_state_circuit_time(SPIN, 10_000) == pytest.approx(210 * US)


@pytest.mark.parametrize("zones, micros", [(1, 170), (5, 1000), (10, 2250)])
def test_multizone_clock(zones, micros):
    assert multizone_clock(zones) == pytest.approx(micros * US, rel=1e-12)
    assert load_preset(f"trapped-ion-{zones}zone").timing.t_clock == pytest.approx(micros * US, rel=1e-12)


def test_multizone_clock_geometry_knobs():
    assert multizone_clock(3, base_gate_time=1.0, hop_time=0.5) == 1.0
    assert multizone_clock(1, base_gate_time=0.3) == 0.3
    with pytest.raises(DomainError):
        multizone_clock(0)


@pytest.mark.parametrize("beta, seconds", [(1.0, 5.1675), (0.5, 2.6675), (0.0, 0.1675)])
def test_trapped_ion_circuit(beta, seconds):
    assert atom_circuit_time(ION, 100, beta) == pytest.approx(seconds, rel=1e-12)


def test_atom_default_beta_comes_from_timing():
    assert atom_circuit_time(ION, 100) == atom_circuit_time(ION, 100, ION.beta_trans)


@pytest.mark.parametrize("depth, millis", [(10, 27.083333), (100, 90.833333), (1000, 728.333333)])
def test_neutral_periodic_examples(depth, millis):
    assert neutral_circuit_time(NEUTRAL, depth, 0.0) == pytest.approx(millis * 1e-3, rel=1e-6)


def test_neutral_reload_amortisation():
    per_layer = NEUTRAL.t_reload / NEUTRAL.reload_period_layers
    assert per_layer == pytest.approx(208.333 * US, rel=1e-5)
    terms = NEUTRAL.terms(2400, 0.25)
    assert terms["reload"] == pytest.approx(NEUTRAL.t_reload)


def test_continuous_drops_reset_and_reload():
    terms = NEUTRAL_CONT.terms(1000, 0.25)
    assert terms["reset"] == 0.0 and terms["reload"] == 0.0
    assert neutral_circuit_time(NEUTRAL_CONT, 1000, 0.25) == pytest.approx(10e-3 + 1000 * 625 * US)


def test_periodic_over_continuous_tends_to_four_thirds():
    ratios = [neutral_circuit_time(NEUTRAL, d, 0.25) / neutral_circuit_time(NEUTRAL_CONT, d, 0.25)
              for d in (10, 1000, 100_000, 1_000_000)]
    gaps = [abs(r - 4 / 3) for r in ratios]
    assert gaps == sorted(gaps, reverse=True)
    assert ratios[-1] == pytest.approx(4 / 3, rel=1e-3)


def test_endpoint_identity():
    assert solid_state_circuit_time(SC, 0) == SC.t_reset + SC.t_meas
    assert atom_circuit_time(ION, 0, 1.0) == ION.t_reset + ION.t_meas


def test_algorithm_time():
    assert algorithm_time(1.0, 1) == 1.0
    assert algorithm_time(solid_state_circuit_time(SC, 100), 1000) == pytest.approx(11.6e-3)
    with pytest.raises(DomainError):
        algorithm_time(1.0, 0)


def test_dispatch():
    assert circuit_time(SC, 100) == solid_state_circuit_time(SC, 100)
    assert circuit_time(ION, 100, 0.5) == atom_circuit_time(ION, 100, 0.5)
    assert circuit_time(NEUTRAL, 100, 0.5) == neutral_circuit_time(NEUTRAL, 100, 0.5)
    assert list(circuit_terms(NEUTRAL, 5)) == ["reset", "gates", "measurement", "transport", "reload"]
    with pytest.raises(ConfigError):
        circuit_time(SC, 100, 0.5)


@pytest.mark.parametrize("bad", [lambda: SolidStateTiming(-1, 0, 0), lambda: AtomTiming(0, 0, 0, 0, 1.5),
                                 lambda: NeutralAtomTiming(0, 0, 0, 0, 0.5, 1.0, 0),
                                 lambda: solid_state_circuit_time(SC, -1)])
def test_invalid_parameters(bad):
    with pytest.raises((ConfigError, DomainError)):
        bad()


@pytest.mark.parametrize("t", [SC, SPIN, ION, NEUTRAL, NEUTRAL_CONT])
def test_dict_round_trip(t):
    assert timing_from_dict(t.to_dict()) == t


@pytest.mark.parametrize("doc", [{"family": "quantum"}, {"family": "atom", "t_reset_s": 1},
                                 {"family": "solid-state", "t_reset_s": 0, "t_clock_s": 0, "t_meas_s": 0, "x": 1},
                                 {"family": "neutral", "t_reset_s": 0, "t_clock_s": 0, "t_meas_s": 0, "t_trans_s": 0,
                                  "mode": "sometimes"}])
def test_bad_timing_documents(doc):
    with pytest.raises(ConfigError):
        timing_from_dict(doc)


times = st.floats(0, 1, allow_nan=False)
betas = st.floats(0, 1)


@given(times, times, times, times, betas, st.integers(0, 10**6), st.integers(1, 10**6))
def test_affine_and_increasing_in_depth(reset, clock, meas, trans, beta, d, extra):
    t = AtomTiming(reset, clock, meas, trans, beta)
    t0, t1, t2 = (atom_circuit_time(t, x) for x in (d, d + extra, d + 2 * extra))
    assert t2 - t1 == pytest.approx(t1 - t0, rel=1e-9, abs=1e-9)
    if clock + beta * trans > 0:
        assert t1 > t0 or math.isclose(t1, t0, abs_tol=1e-12)


@given(times, times, times, times, betas, times, st.integers(1, 5000), st.integers(0, 10**6))
def test_continuous_never_slower(reset, clock, meas, trans, beta, reload, period, d):
    periodic = NeutralAtomTiming(reset, clock, meas, trans, beta, reload, period, ReloadMode.PERIODIC)
    cont = NeutralAtomTiming(reset, clock, meas, trans, beta, reload, period, ReloadMode.CONTINUOUS)
    assert neutral_circuit_time(cont, d) <= neutral_circuit_time(periodic, d)


@given(st.integers(1, 10_000), st.integers(1, 10_000))
def test_reload_amortisation_over_samples(d, n_samples):
    total = NEUTRAL.terms(d, 0.0)["reload"] * n_samples
    lumps = (n_samples * d) // NEUTRAL.reload_period_layers
    assert abs(total - lumps * NEUTRAL.t_reload) <= NEUTRAL.t_reload * (1 + 1e-9)


@given(st.floats(0, 10), st.integers(1, 10**6), st.integers(1, 100))
def test_linear_in_samples(t, n, k):
    assert algorithm_time(t, n * k) == pytest.approx(k * algorithm_time(t, n), rel=1e-12)
