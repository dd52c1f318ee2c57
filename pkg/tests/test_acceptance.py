"""Acceptance checks, one test per criterion, each printing a PASS/FAIL line."""

import contextlib
import itertools
import math
import random
from fractions import Fraction

import pytest

from qenergy import topology as T
from qenergy.efficiency import SECONDS_PER_DAY, energy_efficiency, n_algorithms
from qenergy.figures import DEPTHS, reproduce_figure
from qenergy.inventory import ComponentGroup, breakdown_by_group
from qenergy.photonics import EO_BTO, EO_LN, GLASS, PhotonicDevice, component_counts, log10_transmission
from qenergy.photonics import photonic_ee, sample_time, transmission
from qenergy.presets import dumps, list_presets, load_preset, loads, without_extras
from qenergy.scenario import ScenarioConfig, SweepAxis, run_scenario
from qenergy.timing import multizone_clock, neutral_circuit_time, solid_state_circuit_time, atom_circuit_time
from qenergy.zonecomp import beta_min, zone_limited_depth

from test_topology import oracle_metrics, small_graphs
from test_zonecomp import simulate

US = 1e-6


@contextlib.contextmanager
def criterion(capsys, number, title):
    try:
        yield
    except BaseException:
        with capsys.disabled():
            print(f"\n[acceptance] criterion {number} FAIL: {title}")
        raise
    with capsys.disabled():
        print(f"\n[acceptance] criterion {number} PASS: {title}")


def share(preset, group):
    return breakdown_by_group(load_preset(preset).inventory)[group]


def test_criterion_1_power_presets(capsys):
    with criterion(capsys, 1, "power presets"):
        sc = load_preset("superconducting-baseline").power()
        assert sc == 19728.0 and abs(sc - 20_000) <= 0.02 * 20_000
        cooling = share("superconducting-baseline", ComponentGroup.COOLING)
        assert cooling.watts == 16100.0 and 0.80 <= cooling.fraction <= 0.82

        assert load_preset("trapped-ion-1zone").power() == 9576.0
        assert share("trapped-ion-1zone", ComponentGroup.ENVIRONMENTAL).fraction == pytest.approx(0.78, abs=0.01)

        assert load_preset("neutral-periodic").power() == 22205.0
        assert 0.34 <= share("neutral-periodic", ComponentGroup.ENVIRONMENTAL).fraction <= 0.35
        assert share("neutral-periodic", ComponentGroup.QUBIT_CONTROL).fraction == pytest.approx(0.65, abs=0.01)

        qmio = load_preset("superconducting-qmio").power()
        assert qmio == 21360.0 and abs(qmio - 21_400) <= 2_400

        cont = load_preset("neutral-continuous")
        assert cont.power() - without_extras(cont).power() == 2550.0


def test_criterion_2_superconducting_timing(capsys):
    with criterion(capsys, 2, "superconducting timing"):
        sc = load_preset("superconducting-baseline")
        for depth, micros in zip((10, 100, 1000, 10000), (7.1, 11.6, 56.6, 506.6)):
            assert abs(solid_state_circuit_time(sc.timing, depth) - micros * US) <= 0.05 * US
        passive = sc.with_reset("passive")
        ratio = sc.evaluate(100, 100).ee / passive.evaluate(100, 100).ee
        assert 17 <= ratio <= 20
        flat = passive.evaluate(10, 100).ee / passive.evaluate(100, 100).ee
        assert 1.0 <= flat <= 1.1


def test_criterion_3_routing(capsys):
    with criterion(capsys, 3, "routing depths and distance oracle"):
        r = T.RoutingInput(500, 0.5)
        assert T.post_routing_depth(r, T.square_lattice(7, 7)) == 2000
        assert T.post_routing_depth(r, T.linear_graph(49)) == 6500
        for g, exact in ((T.linear_graph(49), Fraction(50, 3)), (T.square_lattice(7, 7), Fraction(14, 3))):
            avg, _ = oracle_metrics(g)
            assert avg == exact and T.metrics(g).avg_shortest_path == float(exact)
        for g in small_graphs():
            assert g.n_nodes <= 12
            avg, diam = oracle_metrics(g)
            m = T.metrics(g)
            assert m.avg_shortest_path == float(avg) and m.diameter == diam


def test_criterion_4_spin_efficiency(capsys):
    with criterion(capsys, 4, "spin efficiency"):
        two_d, linear = load_preset("spin-2d").evaluate(2000), load_preset("spin-linear").evaluate(6500)
        assert two_d.ee == pytest.approx(0.387, rel=0.02)
        assert linear.ee == pytest.approx(0.292, rel=0.02)
        assert two_d.t_circuit == pytest.approx(0.13e-3, rel=0.05)
        assert linear.t_circuit == pytest.approx(0.17e-3, rel=0.05)


def test_criterion_5_trapped_ions(capsys):
    with criterion(capsys, 5, "trapped ions"):
        ion = load_preset("trapped-ion-1zone").timing
        for beta, seconds in ((1.0, 5.1675), (0.5, 2.6675), (0.0, 0.1675)):
            assert atom_circuit_time(ion, 100, beta) == pytest.approx(seconds, rel=1e-12)
        for zones, micros in ((1, 170), (5, 1000), (10, 2250)):
            assert multizone_clock(zones) == pytest.approx(micros * US, rel=1e-12)
            assert load_preset(f"trapped-ion-{zones}zone").timing.t_clock == float(f"{micros}e-6")
        assert beta_min(21, 20) == beta_min(39, 20) == 0.5
        for g, zones in itertools.product(range(1, 41), (1, 5, 10)):
            depth, fraction = simulate(5, g, zones)
            assert depth == zone_limited_depth(5, g, zones)
            assert beta_min(g, zones) <= fraction + 1e-12


def test_criterion_6_neutral_atoms(capsys):
    with criterion(capsys, 6, "neutral atoms"):
        periodic, cont = load_preset("neutral-periodic"), load_preset("neutral-continuous")
        per_layer = periodic.timing.t_reload / periodic.timing.reload_period_layers
        assert per_layer == pytest.approx(210 * US, rel=0.02)
        for depth, millis in ((10, 27), (100, 91), (1000, 720)):
            assert neutral_circuit_time(periodic.timing, depth, 0.0) == pytest.approx(millis * 1e-3, rel=0.02)
        d = 10**6
        ratio = neutral_circuit_time(periodic.timing, d, 0.25) / neutral_circuit_time(cont.timing, d, 0.25)
        assert ratio == pytest.approx(4 / 3, rel=1e-3)
        depths = DEPTHS + (10**6,)
        sweep = lambda p: run_scenario(ScenarioConfig(p, SweepAxis.DEPTH, depths, beta=0.25)).rows
        assert all(c.ee_per_j > p.ee_per_j for p, c in zip(sweep(periodic), sweep(cont)))


def test_criterion_7_photonics(capsys):
    with criterion(capsys, 7, "photonic transmission, timing and ordering"):
        for chip in (GLASS, EO_LN, EO_BTO):
            d = PhotonicDevice(1, chip)
            logs = [log10_transmission(d, m) for m in range(2, 101)]
            step = logs[1] - logs[0]
            assert max(abs(v - (logs[0] + k * step)) for k, v in enumerate(logs)) < 1e-12

        eta0 = 0.712 * 0.98 * 0.83 * 10 ** (-2 * 0.5 / 10)
        oracle_eta = eta0 * 10 ** (-24 * 0.1 / 10)
        oracle_t = 12 / 1e9 / oracle_eta**12
        glass = PhotonicDevice(12, GLASS)
        assert transmission(glass, 24) == pytest.approx(0.2647, abs=1e-4)
        assert transmission(glass, 24) == pytest.approx(oracle_eta, rel=1e-6)
        assert sample_time(glass) == pytest.approx(0.102, rel=0.01)
        assert sample_time(glass) == pytest.approx(oracle_t, rel=1e-6)

        ee = {c.name: photonic_ee(PhotonicDevice(12, c)) for c in (GLASS, EO_BTO, EO_LN)}
        assert ee[GLASS.name] > ee[EO_BTO.name] > ee[EO_LN.name]
        assert tuple(component_counts(12))[:3] == (1, 1, 36)


def random_config(rng):
    name = rng.choice(list_presets())
    platform = load_preset(name)
    samples = rng.randint(1, 10**6)
    if platform.is_photonic:
        return ScenarioConfig(platform, SweepAxis.QUBITS, (rng.randint(1, 40),), n_samples=samples)
    beta = rng.random() if platform.timing.to_dict()["family"] != "solid-state" else None
    if rng.random() < 0.5:
        return ScenarioConfig(platform, SweepAxis.DEPTH, (rng.randint(0, 10**6),), n_samples=samples, beta=beta)
    return ScenarioConfig(platform, SweepAxis.SAMPLES, (samples,), depth=rng.randint(1, 10**5), beta=beta)


def test_criterion_8_metric_identities(capsys):
    with criterion(capsys, 8, "metric identities over 1000 random configurations"):
        rng = random.Random(20240601)
        for _ in range(1000):
            for row in run_scenario(random_config(rng)).rows:
                if math.isinf(row.t_alg_s):
                    assert row.ee_per_j == 0.0
                    continue
                assert row.ee_per_j * row.t_alg_s * row.power_w == pytest.approx(1.0, rel=1e-15)
                assert row.n_in_24h * row.t_alg_s == pytest.approx(SECONDS_PER_DAY, rel=1e-15)
                # exact over the rationals, a few ulp in floats
                ee = lambda n: 1 / (Fraction(row.t_circuit_s) * n * Fraction(row.power_w))
                assert ee(10 * row.n_samples) == ee(row.n_samples) / 10
                a = energy_efficiency(row.t_circuit_s * (10 * row.n_samples), row.power_w)
                b = energy_efficiency(row.t_circuit_s * row.n_samples, row.power_w) / 10
                assert abs(a - b) <= 4 * math.ulp(b)
        assert n_algorithms(SECONDS_PER_DAY, SECONDS_PER_DAY / 300.75) == pytest.approx(300.75, rel=1e-15)


def test_criterion_9_determinism_and_round_trip(capsys, tmp_path):
    with criterion(capsys, 9, "deterministic figures and bit-exact round trip"):
        first = reproduce_figure("all", tmp_path / "a")
        second = reproduce_figure("all", tmp_path / "b")
        assert first and [p.name for p in first] == [p.name for p in second]
        assert all(a.read_bytes() == b.read_bytes() for a, b in zip(first, second))
        for name in list_presets():
            p = load_preset(name)
            if p.is_photonic:
                cfg = lambda plat: ScenarioConfig(plat, SweepAxis.QUBITS, (1, 4, 12, 20), n_samples=10)
            else:
                beta = None if p.timing.to_dict()["family"] == "solid-state" else 0.25
                cfg = lambda plat: ScenarioConfig(plat, SweepAxis.DEPTH, DEPTHS, n_samples=10, beta=beta)
            assert run_scenario(cfg(loads(dumps(p)))).to_csv() == run_scenario(cfg(p)).to_csv()
